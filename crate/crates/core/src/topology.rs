//! Finite topologies on `{0, .., n-1}`.
//!
//! A topology is stored extensionally as its sorted list of open sets. Every
//! finite topology is Alexandrov, so each point also has a minimal open
//! neighborhood; that table is derived at construction and kept alongside.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result, TopologyViolation};
use crate::mask::{all_subsets, check_size, SubsetMask, MAX_POINTS};

/// Opens allowed before the literal cover-compactness oracle refuses to run.
pub const COVER_ORACLE_MAX_OPENS: usize = 20;

pub struct FiniteTopology {
    n: usize,
    opens: Vec<SubsetMask>,
    min_nbhd: Vec<SubsetMask>,
    square: OnceLock<Box<FiniteTopology>>,
}

impl Clone for FiniteTopology {
    fn clone(&self) -> Self {
        FiniteTopology {
            n: self.n,
            opens: self.opens.clone(),
            min_nbhd: self.min_nbhd.clone(),
            square: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteTopology {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.min_nbhd == other.min_nbhd
    }
}

impl Eq for FiniteTopology {}

impl Hash for FiniteTopology {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.min_nbhd.hash(state);
    }
}

impl fmt::Debug for FiniteTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteTopology")
            .field("n", &self.n)
            .field("opens", &self.opens)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
}

/// The specialization preorder `x ⊑ y ⟺ x ∈ cl{y}`, row `x` holding `{y : x ⊑ y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    above: Vec<SubsetMask>,
}

impl Preorder {
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn above(&self, x: usize) -> SubsetMask {
        self.above[x]
    }

    pub fn rows(&self) -> &[SubsetMask] {
        &self.above
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.above.len()).all(|x| {
            self.above[x]
                .without(x)
                .iter()
                .all(|y| !self.above[y].contains(x))
        })
    }
}

impl FiniteTopology {
    /// Validates an explicit family of open sets. Order and duplicates in
    /// `family` do not matter.
    pub fn from_opens(n: usize, family: &[SubsetMask]) -> Result<Self> {
        check_size(n)?;
        if let Some(bad) = family.iter().find(|m| !m.fits(n)) {
            return Err(Error::MaskOutOfRange {
                bits: bad.bits(),
                n,
            });
        }
        let mut opens = family.to_vec();
        opens.sort_unstable();
        opens.dedup();
        let full = SubsetMask::full(n);
        if opens.binary_search(&SubsetMask::EMPTY).is_err() {
            return Err(Error::NotATopology(TopologyViolation::MissingEmpty));
        }
        if opens.binary_search(&full).is_err() {
            return Err(Error::NotATopology(TopologyViolation::MissingFull));
        }
        let min_nbhd: Vec<SubsetMask> = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(full, |acc, &u| acc.intersection(u))
            })
            .collect();
        // A family containing every minimal neighborhood and exactly as many
        // members as there are unions of them is closed under ∪ and ∩; in
        // every other case a concrete violating pair exists.
        let mins_present = min_nbhd.iter().all(|m| opens.binary_search(m).is_ok());
        if !mins_present || count_up_sets(&min_nbhd) != opens.len() {
            return Err(Error::NotATopology(find_violating_pair(&opens)));
        }
        Ok(FiniteTopology {
            n,
            opens,
            min_nbhd,
            square: OnceLock::new(),
        })
    }

    /// Smallest topology containing `subbasis`.
    pub fn generate(n: usize, subbasis: &[SubsetMask]) -> Result<Self> {
        check_size(n)?;
        if let Some(bad) = subbasis.iter().find(|m| !m.fits(n)) {
            return Err(Error::MaskOutOfRange {
                bits: bad.bits(),
                n,
            });
        }
        // Finite intersections of the subbasis (with X) form a basis; the
        // basic set around x that is smallest is the intersection of every
        // generator containing x, and all unions of those are the opens.
        let full = SubsetMask::full(n);
        let min_nbhd: Vec<SubsetMask> = (0..n)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, &s| acc.intersection(s))
            })
            .collect();
        Ok(Self::from_min_nbhds(n, min_nbhd))
    }

    /// Alexandrov topology whose minimal neighborhoods are `min_nbhd`. The
    /// table must be that of some preorder (`y ∈ m(x) ⟹ m(y) ⊆ m(x)`, `x ∈ m(x)`).
    pub(crate) fn from_min_nbhds(n: usize, min_nbhd: Vec<SubsetMask>) -> Self {
        debug_assert!(n <= MAX_POINTS && min_nbhd.len() == n);
        debug_assert!((0..n).all(|x| min_nbhd[x].contains(x)));
        let opens = all_subsets(n)
            .filter(|&a| a.iter().all(|x| min_nbhd[x].is_subset(a)))
            .collect();
        FiniteTopology {
            n,
            opens,
            min_nbhd,
            square: OnceLock::new(),
        }
    }

    pub fn discrete(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self::from_min_nbhds(
            n,
            (0..n).map(SubsetMask::singleton).collect(),
        ))
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self::from_min_nbhds(n, vec![SubsetMask::full(n); n]))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// Open sets, ascending.
    #[inline]
    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    #[inline]
    pub fn min_nbhd(&self, x: usize) -> SubsetMask {
        self.min_nbhd[x]
    }

    #[inline]
    pub fn min_nbhds(&self) -> &[SubsetMask] {
        &self.min_nbhd
    }

    /// Closed sets, i.e. complements of the opens (descending mask order).
    pub fn closed_sets(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.opens.iter().map(move |u| u.complement(self.n))
    }

    #[inline]
    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    #[inline]
    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.is_open(a.complement(self.n))
    }

    /// `{x : m(x) ∩ A ≠ ∅}`.
    #[inline]
    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for x in 0..self.n {
            if self.min_nbhd[x].intersects(a) {
                out = out.with(x);
            }
        }
        out
    }

    /// Largest open subset of `a`.
    #[inline]
    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for x in a.iter() {
            if self.min_nbhd[x].is_subset(a) {
                out = out.with(x);
            }
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.min_nbhd[x] == SubsetMask::singleton(x))
    }

    pub fn is_indiscrete(&self) -> bool {
        self.opens.len() <= 2
    }

    pub fn specialization_preorder(&self) -> Preorder {
        let mut above = vec![SubsetMask::EMPTY; self.n];
        for y in 0..self.n {
            for x in self.closure(SubsetMask::singleton(y)).iter() {
                above[x] = above[x].with(y);
            }
        }
        Preorder { above }
    }

    /// Product topology with points `(x, y)` encoded as `x * other.n + y`.
    pub fn product(&self, other: &FiniteTopology) -> Result<FiniteTopology> {
        let n = self.n * other.n;
        if n > MAX_POINTS {
            return Err(Error::CapacityExceeded {
                what: "product carrier",
                size: n,
                cap: MAX_POINTS,
            });
        }
        // Basic open rectangle around (x, y) is m(x) × m(y).
        let mut min_nbhd = Vec::with_capacity(n);
        for x in 0..self.n {
            for y in 0..other.n {
                min_nbhd.push(rectangle(self.min_nbhd[x], other.min_nbhd[y], other.n));
            }
        }
        Ok(Self::from_min_nbhds(n, min_nbhd))
    }

    /// `self × self`, computed once and cached.
    pub fn square(&self) -> Result<&FiniteTopology> {
        if let Some(sq) = self.square.get() {
            return Ok(sq);
        }
        let sq = self.product(self)?;
        Ok(self.square.get_or_init(|| Box::new(sq)))
    }

    /// Subspace on `carrier`, reindexed by the ascending enumeration of the
    /// carrier. The returned vector maps new indices to old ones.
    pub fn subspace(&self, carrier: SubsetMask) -> Result<(FiniteTopology, Vec<usize>)> {
        if carrier.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if !carrier.fits(self.n) {
            return Err(Error::MaskOutOfRange {
                bits: carrier.bits(),
                n: self.n,
            });
        }
        let traces: Vec<SubsetMask> = self
            .opens
            .iter()
            .map(|u| u.intersection(carrier).compress(carrier))
            .collect();
        let topo = FiniteTopology::from_opens(carrier.len(), &traces)?;
        Ok((topo, carrier.to_vec()))
    }

    /// Relabels points: old `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteTopology {
        let mut rows = vec![SubsetMask::EMPTY; self.n];
        for (x, m) in self.min_nbhd.iter().enumerate() {
            rows[perm[x]] = m.permute(perm);
        }
        FiniteTopology::from_min_nbhds(self.n, rows)
    }

    pub fn separation_profile(&self) -> SeparationProfile {
        let t0 = self.specialization_preorder().is_antisymmetric();
        let pairs =
            || (0..self.n).flat_map(|x| (0..self.n).filter(move |&y| y != x).map(move |y| (x, y)));
        let t1 = pairs().all(|(x, y)| self.opens.iter().any(|u| u.contains(x) && !u.contains(y)));
        let t2 = pairs().all(|(x, y)| {
            self.opens
                .iter()
                .any(|&u| u.contains(x) && !self.closure(u).contains(y))
        });
        SeparationProfile { t0, t1, t2 }
    }

    /// Every point outside `f` has an open neighborhood missing `f`.
    pub fn is_t1_closed_set(&self, f: SubsetMask) -> bool {
        f.complement(self.n).iter().all(|x| {
            self.opens
                .iter()
                .any(|&u| u.contains(x) && !u.intersects(f))
        })
    }

    /// Every point outside `f` has a neighborhood whose closure misses `f`.
    /// A neighborhood contains an open set around the point, and closure is
    /// monotone, so it suffices to range over open neighborhoods.
    pub fn is_t2_closed_set(&self, f: SubsetMask) -> bool {
        f.complement(self.n).iter().all(|x| {
            self.opens
                .iter()
                .any(|&u| u.contains(x) && !self.closure(u).intersects(f))
        })
    }

    /// Literal open-cover check of compactness for `k`.
    ///
    /// Covers of `k` by opens correspond to covers by traces `U ∩ k`, so the
    /// oracle walks every subfamily of distinct nonempty traces; for each
    /// one that covers `k` it extracts a subcover by choosing one member per
    /// point and confirms that the chosen members cover `k`.
    pub fn is_compact_subset(&self, k: SubsetMask) -> Result<bool> {
        if self.opens.len() > COVER_ORACLE_MAX_OPENS {
            return Err(Error::OracleBudgetExceeded {
                opens: self.opens.len(),
                budget: COVER_ORACLE_MAX_OPENS,
            });
        }
        if !k.fits(self.n) {
            return Err(Error::MaskOutOfRange {
                bits: k.bits(),
                n: self.n,
            });
        }
        let mut traces: Vec<SubsetMask> = self
            .opens
            .iter()
            .map(|u| u.intersection(k))
            .filter(|t| !t.is_empty())
            .collect();
        traces.sort_unstable();
        traces.dedup();
        let m = traces.len();
        // holders[x]: the traces containing x, as a bitset over trace indices
        let mut holders = [0u32; MAX_POINTS];
        for (i, t) in traces.iter().enumerate() {
            for x in t.iter() {
                holders[x] |= 1 << i;
            }
        }
        // unions[f] is built from unions[f without its lowest member]
        let mut unions = vec![0u16; 1usize << m];
        for family in 1usize..(1usize << m) {
            let low = family.trailing_zeros() as usize;
            unions[family] = unions[family & (family - 1)] | traces[low].bits();
            if !k.is_subset(SubsetMask::from_bits(unions[family])) {
                continue;
            }
            let mut subcover = SubsetMask::EMPTY;
            for x in k.iter() {
                if subcover.contains(x) {
                    continue;
                }
                let choices = holders[x] & family as u32;
                if choices == 0 {
                    return Ok(false);
                }
                subcover = subcover.union(traces[choices.trailing_zeros() as usize]);
            }
            if !k.is_subset(subcover) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `a × b` inside a product whose second factor has `n2` points.
pub(crate) fn rectangle(a: SubsetMask, b: SubsetMask, n2: usize) -> SubsetMask {
    let mut out = 0u16;
    for x in a.iter() {
        out |= b.bits() << (x * n2);
    }
    SubsetMask::from_bits(out)
}

fn count_up_sets(min_nbhd: &[SubsetMask]) -> usize {
    all_subsets(min_nbhd.len())
        .filter(|&a| a.iter().all(|x| min_nbhd[x].is_subset(a)))
        .count()
}

fn find_violating_pair(opens: &[SubsetMask]) -> TopologyViolation {
    for (i, &u) in opens.iter().enumerate() {
        for &v in &opens[i + 1..] {
            if opens.binary_search(&u.union(v)).is_err() {
                return TopologyViolation::UnionMissing(u, v);
            }
            if opens.binary_search(&u.intersection(v)).is_err() {
                return TopologyViolation::IntersectionMissing(u, v);
            }
        }
    }
    unreachable!("family is closed under pairwise unions and intersections")
}
