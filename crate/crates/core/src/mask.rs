//! Subsets of a small ground set `{0, .., n-1}` packed into 16 bits.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_POINTS: usize = 16;

/// A subset of `{0, .., n-1}` with `n <= 16`.
///
/// The ground-set size is carried by the structure that owns the mask; every
/// public constructor that accepts raw bits checks them against that size.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u16);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Checked constructor: rejects bits at or above position `n`.
    pub fn new(bits: u16, n: usize) -> Result<Self> {
        check_size(n)?;
        let mask = SubsetMask(bits);
        if !mask.fits(n) {
            return Err(Error::MaskOutOfRange { bits, n });
        }
        Ok(mask)
    }

    #[inline]
    pub const fn from_bits(bits: u16) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        SubsetMask(((1u32 << n) - 1) as u16)
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        SubsetMask(1 << x)
    }

    /// Builds a mask from point indices, all of which must be `< n`.
    pub fn from_points<I: IntoIterator<Item = usize>>(points: I, n: usize) -> Result<Self> {
        check_size(n)?;
        let mut bits = 0u16;
        for p in points {
            if p >= n {
                return Err(Error::IndexOutOfRange { index: p, n });
            }
            bits |= 1 << p;
        }
        Ok(SubsetMask(bits))
    }

    #[inline]
    pub fn fits(self, n: usize) -> bool {
        n >= MAX_POINTS || self.0 >> n == 0
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn with(self, x: usize) -> Self {
        SubsetMask(self.0 | 1 << x)
    }

    #[inline]
    pub const fn without(self, x: usize) -> Self {
        SubsetMask(self.0 & !(1 << x))
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Points in ascending order.
    #[inline]
    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// Applies the point relabeling `perm` (old index -> new index).
    pub fn permute(self, perm: &[usize]) -> Self {
        let mut out = 0u16;
        for x in self.iter() {
            out |= 1 << perm[x];
        }
        SubsetMask(out)
    }

    /// Re-indexes the points of `self` inside `carrier` by their rank in the
    /// ascending enumeration of `carrier`.
    pub fn compress(self, carrier: SubsetMask) -> Self {
        let mut out = 0u16;
        for (rank, x) in carrier.iter().enumerate() {
            if self.contains(x) {
                out |= 1 << rank;
            }
        }
        SubsetMask(out)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serializes as the ascending list of member points.
impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the points of a mask, ascending.
#[derive(Clone, Debug)]
pub struct Points(u16);

impl Iterator for Points {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Points {}

/// All subsets of `{0, .., n-1}` in ascending mask order.
pub fn all_subsets(n: usize) -> impl DoubleEndedIterator<Item = SubsetMask> + Clone {
    debug_assert!(n <= MAX_POINTS);
    (0..(1u32 << n)).map(|b| SubsetMask(b as u16))
}

/// All subsets of `set`, ascending (carry-ripple enumeration).
pub fn subsets_of(set: SubsetMask) -> impl Iterator<Item = SubsetMask> {
    let mut next = Some(0u16);
    std::iter::from_fn(move || {
        let cur = next?;
        let succ = cur.wrapping_sub(set.0) & set.0;
        next = (succ != 0).then_some(succ);
        Some(SubsetMask(cur))
    })
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::CapacityExceeded {
            what: "ground set",
            size: n,
            cap: MAX_POINTS,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_high_bits() {
        assert!(SubsetMask::new(0b100, 2).is_err());
        assert_eq!(SubsetMask::new(0b11, 2).unwrap(), SubsetMask::full(2));
        assert!(SubsetMask::new(0, 17).is_err());
        assert_eq!(SubsetMask::full(16).bits(), u16::MAX);
        assert_eq!(SubsetMask::full(0), SubsetMask::EMPTY);
    }

    #[test]
    fn set_algebra() {
        let a = SubsetMask::from_points([0, 2], 3).unwrap();
        let b = SubsetMask::from_points([1, 2], 3).unwrap();
        assert_eq!(a.union(b), SubsetMask::full(3));
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.complement(3).to_vec(), vec![1]);
        assert!(a.intersection(b).is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(a.to_string(), "{0,2}");
    }

    #[test]
    fn subsets_of_visits_every_subset_once() {
        let set = SubsetMask::from_bits(0x55);
        let subs: Vec<u16> = subsets_of(set).map(|s| s.bits()).collect();
        assert_eq!(
            subs,
            vec![0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85]
        );
        assert_eq!(subsets_of(SubsetMask::EMPTY).count(), 1);
    }

    #[test]
    fn compress_and_permute() {
        let carrier = SubsetMask::from_bits(0b1010);
        assert_eq!(SubsetMask::from_bits(0b1000).compress(carrier).bits(), 0b10);
        let perm = [2, 0, 1];
        assert_eq!(SubsetMask::from_bits(0b011).permute(&perm).bits(), 0b101);
    }
}
