//! Finite posets stored as up-set masks.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::mask::{all_subsets, check_size, SubsetMask, MAX_POINTS};

/// A partial order on `{0, .., n-1}`; `up[x] = ↑x = {y : x ≤ y}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    up: Vec<SubsetMask>,
    down: Vec<SubsetMask>,
}

impl FinitePoset {
    /// Takes the reflexive-transitive closure of `pairs` (each `(i, j)` read
    /// as `i ≤ j`) and then checks antisymmetry.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut up: Vec<SubsetMask> = (0..n).map(SubsetMask::singleton).collect();
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
            }
            up[i] = up[i].with(j);
        }
        // Warshall on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        for x in 0..n {
            if let Some(y) = up[x].without(x).iter().find(|&y| up[y].contains(x)) {
                let mut cycle = path(n, pairs, x, y);
                let back = path(n, pairs, y, x);
                cycle.extend_from_slice(&back[1..]);
                return Err(Error::NotAntisymmetric { cycle });
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    /// Builds from up-set rows that already form a partial order.
    pub(crate) fn from_up_sets_unchecked(up: Vec<SubsetMask>) -> Self {
        let n = up.len();
        let mut down = vec![SubsetMask::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y] = down[y].with(x);
            }
        }
        FinitePoset { up, down }
    }

    /// Validating constructor from up-set rows.
    pub fn from_up_sets(up: Vec<SubsetMask>) -> Result<Self> {
        let n = up.len();
        check_size(n)?;
        if let Some(row) = up.iter().find(|r| !r.fits(n)) {
            return Err(Error::MaskOutOfRange {
                bits: row.bits(),
                n,
            });
        }
        let pairs: Vec<(usize, usize)> = up
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
            .collect();
        let poset = Self::from_relation(n, &pairs)?;
        if poset.up != up {
            return Err(Error::InvalidFile(
                "up-set rows are not reflexive and transitive".into(),
            ));
        }
        Ok(poset)
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_relation(n, &[])
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relation(n, &pairs)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.up.len()
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn up_set(&self, x: usize) -> SubsetMask {
        self.up[x]
    }

    #[inline]
    pub fn down_set(&self, x: usize) -> SubsetMask {
        self.down[x]
    }

    /// `↕x = ↑x ∪ ↓x`.
    #[inline]
    pub fn updown_set(&self, x: usize) -> SubsetMask {
        self.up[x].union(self.down[x])
    }

    pub fn up_sets(&self) -> &[SubsetMask] {
        &self.up
    }

    /// Points above every member of `a` (all points when `a` is empty).
    pub fn upper_bounds(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(SubsetMask::full(self.n()), |acc, x| {
            acc.intersection(self.up[x])
        })
    }

    pub fn lower_bounds(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(SubsetMask::full(self.n()), |acc, x| {
            acc.intersection(self.down[x])
        })
    }

    pub fn is_chain(&self, a: SubsetMask) -> bool {
        a.iter().all(|x| a.is_subset(self.updown_set(x)))
    }

    pub fn is_up_directed(&self, a: SubsetMask) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(a.iter().all(|x| {
            a.iter()
                .all(|y| self.up[x].intersection(self.up[y]).intersects(a))
        }))
    }

    pub fn is_down_directed(&self, a: SubsetMask) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(a.iter().all(|x| {
            a.iter()
                .all(|y| self.down[x].intersection(self.down[y]).intersects(a))
        }))
    }

    /// Least upper bound of a nonempty set, if it exists.
    pub fn sup(&self, a: SubsetMask) -> Result<Option<usize>> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let ub = self.upper_bounds(a);
        Ok(ub.iter().find(|&b| ub.is_subset(self.up[b])))
    }

    /// Greatest lower bound of a nonempty set, if it exists.
    pub fn inf(&self, a: SubsetMask) -> Result<Option<usize>> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let lb = self.lower_bounds(a);
        Ok(lb.iter().find(|&b| lb.is_subset(self.down[b])))
    }

    /// Least fixed point of `A ↦ A ∪ f(A × A)` above `a`, where `f` picks a
    /// common upper bound for each pair.
    pub fn directed_hull<F>(&self, a: SubsetMask, choice: F) -> Result<SubsetMask>
    where
        F: Fn(usize, usize) -> usize,
    {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        if !a.fits(self.n()) {
            return Err(Error::MaskOutOfRange {
                bits: a.bits(),
                n: self.n(),
            });
        }
        let mut cur = a;
        loop {
            let mut next = cur;
            for x in cur.iter() {
                for y in cur.iter() {
                    let z = choice(x, y);
                    if z >= self.n() || !self.le(x, z) || !self.le(y, z) {
                        return Err(Error::ChoiceOutOfBounds { x, y, value: z });
                    }
                    next = next.with(z);
                }
            }
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Pointwise order on the product, `(x, y)` encoded as `x * other.n + y`.
    pub fn product(&self, other: &FinitePoset) -> Result<FinitePoset> {
        let n = self.n() * other.n();
        if n > MAX_POINTS {
            return Err(Error::CapacityExceeded {
                what: "product carrier",
                size: n,
                cap: MAX_POINTS,
            });
        }
        let mut up = Vec::with_capacity(n);
        for x in 0..self.n() {
            for y in 0..other.n() {
                up.push(crate::topology::rectangle(
                    self.up[x],
                    other.up[y],
                    other.n(),
                ));
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    /// Induced order on `carrier`, reindexed ascending.
    pub fn restrict(&self, carrier: SubsetMask) -> FinitePoset {
        let up = carrier
            .iter()
            .map(|x| self.up[x].intersection(carrier).compress(carrier))
            .collect();
        Self::from_up_sets_unchecked(up)
    }

    /// Nonempty chains in ascending mask order.
    pub fn chains(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        all_subsets(self.n())
            .skip(1)
            .filter(move |&a| self.is_chain(a))
    }

    /// Covering pairs `x ⋖ y`, lexicographic.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            for y in self.up[x].without(x).iter() {
                let between = self.up[x].intersection(self.down[y]).without(x).without(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Relabels points: old `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FinitePoset {
        let mut up = vec![SubsetMask::EMPTY; self.n()];
        for x in 0..self.n() {
            up[perm[x]] = self.up[x].permute(perm);
        }
        Self::from_up_sets_unchecked(up)
    }
}

/// Shortest path from `from` to `to` in the input relation graph.
fn path(n: usize, pairs: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(i, j) in pairs {
            if i == x && prev[j] == usize::MAX {
                prev[j] = x;
                queue.push_back(j);
            }
        }
    }
    let mut out = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        out.push(cur);
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied(), 16).unwrap()
    }

    fn fan() -> FinitePoset {
        FinitePoset::from_relation(3, &[(0, 1), (0, 2)]).unwrap()
    }

    #[test]
    fn relation_examples() {
        let c = FinitePoset::from_relation(2, &[(0, 1)]).unwrap();
        assert!(c.le(0, 1) && !c.le(1, 0));
        let a = FinitePoset::from_relation(3, &[]).unwrap();
        assert!((0..3).all(|x| a.up_set(x) == SubsetMask::singleton(x)));
        let err = FinitePoset::from_relation(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAntisymmetric {
                cycle: vec![0, 1, 0]
            }
        );
        let err = FinitePoset::from_relation(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAntisymmetric {
                cycle: vec![0, 1, 2, 0]
            }
        );
    }

    #[test]
    fn transitive_closure_is_taken() {
        let p = FinitePoset::from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.le(0, 2));
        assert_eq!(p, FinitePoset::chain(3).unwrap());
    }

    #[test]
    fn cones() {
        let c = FinitePoset::chain(2).unwrap();
        assert_eq!(c.up_set(0), m(&[0, 1]));
        assert_eq!(c.down_set(0), m(&[0]));
        assert_eq!(c.updown_set(1), m(&[0, 1]));
        assert_eq!(FinitePoset::antichain(2).unwrap().updown_set(0), m(&[0]));
        assert_eq!(fan().updown_set(1), m(&[0, 1]));
    }

    #[test]
    fn chains_and_directedness() {
        let c3 = FinitePoset::chain(3).unwrap();
        assert!(c3.is_chain(m(&[0, 2])));
        let f = fan();
        assert!(!f.is_chain(m(&[1, 2])));
        assert!(!f.is_down_directed(m(&[1, 2])).unwrap());
        assert!(!f.is_up_directed(m(&[1, 2])).unwrap());
        for x in 0..3 {
            let s = SubsetMask::singleton(x);
            assert!(
                f.is_chain(s) && f.is_up_directed(s).unwrap() && f.is_down_directed(s).unwrap()
            );
        }
        assert_eq!(f.is_up_directed(SubsetMask::EMPTY), Err(Error::EmptySet));
        assert!(f.is_chain(SubsetMask::EMPTY));
    }

    #[test]
    fn bounds() {
        let c = FinitePoset::chain(2).unwrap();
        assert_eq!(c.sup(m(&[0, 1])).unwrap(), Some(1));
        assert_eq!(c.inf(m(&[0, 1])).unwrap(), Some(0));
        let f = fan();
        assert_eq!(f.inf(m(&[1, 2])).unwrap(), Some(0));
        assert_eq!(f.sup(m(&[1, 2])).unwrap(), None);
        let a = FinitePoset::antichain(2).unwrap();
        assert_eq!(a.sup(m(&[0, 1])).unwrap(), None);
        assert_eq!(a.inf(m(&[0, 1])).unwrap(), None);
        assert_eq!(a.sup(SubsetMask::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn hull_examples() {
        let c3 = FinitePoset::chain(3).unwrap();
        let max = |x: usize, y: usize| x.max(y);
        assert_eq!(c3.directed_hull(m(&[0, 1]), max).unwrap(), m(&[0, 1]));
        assert_eq!(c3.directed_hull(m(&[0, 2]), max).unwrap(), m(&[0, 2]));
        let diamond = FinitePoset::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let join = |x: usize, y: usize| {
            diamond
                .sup(SubsetMask::singleton(x).with(y))
                .unwrap()
                .unwrap()
        };
        assert_eq!(
            diamond.directed_hull(m(&[1, 2]), join).unwrap(),
            m(&[1, 2, 3])
        );
        assert_eq!(
            c3.directed_hull(m(&[1, 2]), |x, y| x.min(y)),
            Err(Error::ChoiceOutOfBounds {
                x: 1,
                y: 2,
                value: 1
            })
        );
    }

    #[test]
    fn product_examples() {
        let c2 = FinitePoset::chain(2).unwrap();
        let grid = c2.product(&c2).unwrap();
        let diamond = FinitePoset::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(grid, diamond);
        let one = FinitePoset::chain(1).unwrap();
        assert_eq!(fan().product(&one).unwrap(), fan());
        let two_chains = FinitePoset::antichain(2).unwrap().product(&c2).unwrap();
        assert_eq!(
            two_chains,
            FinitePoset::from_relation(4, &[(0, 1), (2, 3)]).unwrap()
        );
    }

    #[test]
    fn chain_enumeration() {
        let got: Vec<_> = FinitePoset::antichain(2).unwrap().chains().collect();
        assert_eq!(got, vec![m(&[0]), m(&[1])]);
        let got: Vec<_> = FinitePoset::chain(2).unwrap().chains().collect();
        assert_eq!(got, vec![m(&[0]), m(&[1]), m(&[0, 1])]);
        let got: Vec<_> = fan().chains().collect();
        assert_eq!(got, vec![m(&[0]), m(&[1]), m(&[0, 1]), m(&[2]), m(&[0, 2])]);
    }

    #[test]
    fn covers_of_chain() {
        assert_eq!(
            FinitePoset::chain(3).unwrap().covers(),
            vec![(0, 1), (1, 2)]
        );
    }
}
