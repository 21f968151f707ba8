//! Finite semilattices and topologized semilattices.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::{all_subsets, check_size, SubsetMask};
use crate::order::FinitePoset;
use crate::topo_poset::TopologizedPoset;
use crate::topology::FiniteTopology;
use crate::Flag;

/// Every chain of a finite semilattice is finite.
pub const CHAIN_FINITE: bool = true;

/// Every upper cone of a finite semilattice is finite.
pub const UP_FINITE: bool = true;

/// A commutative idempotent semigroup on `{0, .., n-1}` given by its table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semilattice {
    n: usize,
    table: Vec<u8>,
}

impl Semilattice {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        check_size(n)?;
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    left: row.len(),
                    right: n,
                });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
                table.push(v as u8);
            }
        }
        let s = Semilattice { n, table };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.meet(x, x) != x {
                return Err(Error::NotIdempotent {
                    x,
                    value: self.meet(x, x),
                });
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if self.meet(x, y) != self.meet(y, x) {
                    return Err(Error::NotCommutative { x, y });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z)) {
                        return Err(Error::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// The meet-semilattice of a poset in which every pair has an infimum.
    pub fn from_poset(poset: &FinitePoset) -> Option<Semilattice> {
        let n = poset.n();
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                let pair = SubsetMask::singleton(x).with(y);
                table[x * n + y] = poset.inf(pair).expect("nonempty")? as u8;
            }
        }
        Some(Semilattice { n, table })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.meet(x, y)).collect())
            .collect()
    }

    pub(crate) fn table_bytes(&self) -> &[u8] {
        &self.table
    }

    /// `x ≤ y ⟺ xy = x`.
    pub fn natural_order(&self) -> FinitePoset {
        let up = (0..self.n)
            .map(|x| {
                let mut row = SubsetMask::EMPTY;
                for y in 0..self.n {
                    if self.meet(x, y) == x {
                        row = row.with(y);
                    }
                }
                row
            })
            .collect();
        FinitePoset::from_up_sets_unchecked(up)
    }

    /// `a₁ ⋯ a_k` for a nonempty subset.
    pub fn meet_of_subset(&self, a: SubsetMask) -> Result<usize> {
        let mut points = a.iter();
        let first = points.next().ok_or(Error::EmptySet)?;
        Ok(points.fold(first, |acc, x| self.meet(acc, x)))
    }

    /// Image of `a · b = {xy : x ∈ a, y ∈ b}`.
    pub fn product_set(&self, a: SubsetMask, b: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out = out.with(self.meet(x, y));
            }
        }
        out
    }

    pub fn is_subsemilattice(&self, a: SubsetMask) -> bool {
        a.iter()
            .all(|x| a.iter().all(|y| a.contains(self.meet(x, y))))
    }

    /// Smallest subsemilattice containing `a`.
    pub fn generated_subsemilattice(&self, a: SubsetMask) -> SubsetMask {
        let mut cur = a;
        loop {
            let next = cur.union(self.product_set(cur, cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// All subsemilattices, the empty set included, ascending.
    pub fn subsemilattices(&self) -> Vec<SubsetMask> {
        all_subsets(self.n)
            .filter(|&a| self.is_subsemilattice(a))
            .collect()
    }

    /// Relabels points: old `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Semilattice {
        let n = self.n;
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.meet(x, y)] as u8;
            }
        }
        Semilattice { n, table }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityProfile {
    pub separately_continuous: bool,
    pub jointly_continuous: Flag,
}

/// A semilattice with a topology; the natural order is derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TopologizedSemilattice {
    sl: Semilattice,
    tp: TopologizedPoset,
}

impl TopologizedSemilattice {
    pub fn new(sl: Semilattice, topology: impl Into<Arc<FiniteTopology>>) -> Result<Self> {
        let tp = TopologizedPoset::new(sl.natural_order(), topology)?;
        Ok(TopologizedSemilattice { sl, tp })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.sl.n
    }

    #[inline]
    pub fn semilattice(&self) -> &Semilattice {
        &self.sl
    }

    #[inline]
    pub fn topology(&self) -> &FiniteTopology {
        self.tp.topology()
    }

    #[inline]
    pub fn order(&self) -> &FinitePoset {
        self.tp.poset()
    }

    /// The same carrier viewed as a topologized poset under the natural order.
    #[inline]
    pub fn as_topo_poset(&self) -> &TopologizedPoset {
        &self.tp
    }

    /// Every translation `x ↦ ax` is continuous.
    pub fn is_separately_continuous(&self) -> bool {
        let t = self.topology();
        (0..self.n()).all(|a| {
            t.opens().iter().all(|&u| {
                let pre = (0..self.n())
                    .filter(|&x| u.contains(self.sl.meet(a, x)))
                    .fold(SubsetMask::EMPTY, SubsetMask::with);
                t.is_open(pre)
            })
        })
    }

    /// The operation is continuous on `X × X` with the product topology.
    pub fn jointly_continuous(&self) -> Flag {
        let t = self.topology();
        let square = match t.square() {
            Ok(sq) => sq,
            Err(_) => {
                return Flag::Unevaluated(format!(
                    "square of {} points exceeds 16",
                    self.n() * self.n()
                ))
            }
        };
        let n = self.n();
        Flag::Value(t.opens().iter().all(|&u| {
            let mut pre = 0u16;
            for x in 0..n {
                for y in 0..n {
                    if u.contains(self.sl.meet(x, y)) {
                        pre |= 1 << (x * n + y);
                    }
                }
            }
            square.is_open(SubsetMask::from_bits(pre))
        }))
    }

    pub fn continuity_profile(&self) -> ContinuityProfile {
        ContinuityProfile {
            separately_continuous: self.is_separately_continuous(),
            jointly_continuous: self.jointly_continuous(),
        }
    }

    /// Subsemilattices that are closed sets, ascending.
    pub fn closed_subsemilattices(&self) -> Vec<SubsetMask> {
        self.sl
            .subsemilattices()
            .into_iter()
            .filter(|&z| self.topology().is_closed(z))
            .collect()
    }

    /// Topology generated by complements of closed subsemilattices.
    pub fn weak_star_topology(&self) -> FiniteTopology {
        let n = self.n();
        let subbasis: Vec<SubsetMask> = self
            .closed_subsemilattices()
            .into_iter()
            .map(|z| z.complement(n))
            .collect();
        FiniteTopology::generate(n, &subbasis).expect("masks fit the carrier")
    }

    /// The weak• topology is compact (literal cover oracle on the carrier).
    pub fn is_zar_compact(&self) -> Result<bool> {
        let w = self.weak_star_topology();
        w.is_compact_subset(w.full())
    }

    /// For each `x` and `y ∉ ↓x` some `z ∉ ↓x` has `y` in the interior of `↑z`.
    pub fn is_v_semilattice(&self) -> bool {
        let order = self.order();
        let t = self.topology();
        (0..self.n()).all(|x| {
            let outside = order.down_set(x).complement(self.n());
            outside.iter().all(|y| {
                outside
                    .iter()
                    .any(|z| t.interior(order.up_set(z)).contains(y))
            })
        })
    }

    /// Every minimal open neighborhood is a subsemilattice.
    ///
    /// Equivalent to having a base of open subsemilattices, since any base
    /// of a finite topology must contain each minimal neighborhood.
    pub fn is_lawson(&self) -> bool {
        (0..self.n()).all(|x| self.sl.is_subsemilattice(self.topology().min_nbhd(x)))
    }

    /// Closed sets containing an open neighborhood of `x`.
    pub fn closed_neighborhoods(&self, x: usize) -> Vec<SubsetMask> {
        let m = self.topology().min_nbhd(x);
        let mut out: Vec<SubsetMask> = self
            .topology()
            .closed_sets()
            .filter(|f| m.is_subset(*f))
            .collect();
        out.sort_unstable();
        out
    }

    /// For distinct `x, y` some family of closed neighborhoods of `x` meets
    /// in a closed subsemilattice that misses `y`.
    ///
    /// The candidate intersections are generated by closing the family of
    /// closed neighborhoods under pairwise intersection and are tried
    /// smallest first.
    pub fn is_gdelta_separated(&self) -> bool {
        (0..self.n()).all(|x| {
            let candidates = self.neighborhood_intersections(x);
            (0..self.n()).filter(|&y| y != x).all(|y| {
                candidates
                    .iter()
                    .any(|&f| !f.contains(y) && self.sl.is_subsemilattice(f))
            })
        })
    }

    /// Intersections of nonempty families of closed neighborhoods of `x`,
    /// ordered by size and then by mask.
    pub fn neighborhood_intersections(&self, x: usize) -> Vec<SubsetMask> {
        let base = self.closed_neighborhoods(x);
        let mut seen: BTreeSet<SubsetMask> = base.iter().copied().collect();
        let mut frontier: Vec<SubsetMask> = base.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &f in &frontier {
                for &g in &base {
                    let h = f.intersection(g);
                    if seen.insert(h) {
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<SubsetMask> = seen.into_iter().collect();
        out.sort_by_key(|f| (f.len(), *f));
        out
    }

    /// Relabels points: old `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> TopologizedSemilattice {
        let tp = self.tp.permuted(perm);
        TopologizedSemilattice {
            sl: self.sl.permuted(perm),
            tp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied(), 16).unwrap()
    }

    fn chain_min(n: usize) -> Semilattice {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
        Semilattice::from_table(&rows).unwrap()
    }

    /// 1·2 = 0, 0 below everything.
    fn fan() -> Semilattice {
        Semilattice::from_table(&[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap()
    }

    fn sierpinski() -> FiniteTopology {
        FiniteTopology::from_opens(2, &[m(&[]), m(&[1]), m(&[0, 1])]).unwrap()
    }

    #[test]
    fn table_validation() {
        assert_eq!(chain_min(2).n(), 2);
        assert_eq!(fan().meet(1, 2), 0);
        assert_eq!(
            Semilattice::from_table(&[vec![0, 0], vec![1, 1]]).unwrap_err(),
            Error::NotCommutative { x: 0, y: 1 }
        );
        assert_eq!(
            Semilattice::from_table(&[vec![1, 0], vec![0, 1]]).unwrap_err(),
            Error::NotIdempotent { x: 0, value: 1 }
        );
        // x·y is the third point: (0·1)·2 = 2 but 0·(1·2) = 0
        let err =
            Semilattice::from_table(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
        assert!(matches!(
            Semilattice::from_table(&[vec![0, 5], vec![5, 1]]),
            Err(Error::IndexOutOfRange { index: 5, n: 2 })
        ));
    }

    #[test]
    fn natural_order_examples() {
        assert_eq!(chain_min(2).natural_order(), FinitePoset::chain(2).unwrap());
        let f = fan().natural_order();
        assert!(f.le(0, 1) && f.le(0, 2) && !f.le(1, 2) && !f.le(2, 1));
        let one = Semilattice::from_table(&[vec![0]]).unwrap();
        assert_eq!(one.natural_order().n(), 1);
    }

    #[test]
    fn meet_of_subset_examples() {
        assert_eq!(fan().meet_of_subset(m(&[1, 2])).unwrap(), 0);
        assert_eq!(chain_min(2).meet_of_subset(m(&[0, 1])).unwrap(), 0);
        assert_eq!(fan().meet_of_subset(m(&[2])).unwrap(), 2);
        assert_eq!(
            fan().meet_of_subset(SubsetMask::EMPTY),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn poset_round_trip() {
        let f = fan();
        assert_eq!(Semilattice::from_poset(&f.natural_order()).unwrap(), f);
        assert!(Semilattice::from_poset(&FinitePoset::antichain(2).unwrap()).is_none());
    }

    #[test]
    fn continuity_examples() {
        let ts = TopologizedSemilattice::new(chain_min(2), sierpinski()).unwrap();
        let p = ts.continuity_profile();
        assert!(p.separately_continuous);
        assert_eq!(p.jointly_continuous, Flag::Value(true));
        let ts = TopologizedSemilattice::new(chain_min(2), FiniteTopology::discrete(2).unwrap())
            .unwrap();
        assert_eq!(ts.jointly_continuous(), Flag::Value(true));
        // On the fan, {1,2} open while {0} is not: λ_1⁻¹({1,2}) = {1} must be open.
        let t = FiniteTopology::from_opens(3, &[m(&[]), m(&[1, 2]), m(&[0, 1, 2])]).unwrap();
        let ts = TopologizedSemilattice::new(fan(), t).unwrap();
        assert!(!ts.is_separately_continuous());
        assert_eq!(ts.jointly_continuous(), Flag::Value(false));
    }

    #[test]
    fn subsemilattice_examples() {
        assert_eq!(fan().generated_subsemilattice(m(&[1, 2])), m(&[0, 1, 2]));
        assert_eq!(
            chain_min(2).subsemilattices(),
            vec![m(&[]), m(&[0]), m(&[1]), m(&[0, 1])]
        );
        let ts = TopologizedSemilattice::new(chain_min(2), FiniteTopology::discrete(2).unwrap())
            .unwrap();
        assert_eq!(ts.closed_subsemilattices().len(), 4);
    }

    #[test]
    fn weak_star_examples() {
        let ts = TopologizedSemilattice::new(chain_min(2), FiniteTopology::discrete(2).unwrap())
            .unwrap();
        assert!(ts.weak_star_topology().is_discrete());
        assert!(ts.is_zar_compact().unwrap());
        let one = TopologizedSemilattice::new(
            Semilattice::from_table(&[vec![0]]).unwrap(),
            FiniteTopology::discrete(1).unwrap(),
        )
        .unwrap();
        assert!(one.weak_star_topology().is_discrete() && one.weak_star_topology().is_indiscrete());
        let ts =
            TopologizedSemilattice::new(fan(), FiniteTopology::indiscrete(3).unwrap()).unwrap();
        assert_eq!(ts.closed_subsemilattices(), vec![m(&[]), m(&[0, 1, 2])]);
        assert!(ts.weak_star_topology().is_indiscrete());
    }

    #[test]
    fn v_semilattice_examples() {
        let ts = TopologizedSemilattice::new(chain_min(2), FiniteTopology::discrete(2).unwrap())
            .unwrap();
        assert!(ts.is_v_semilattice());
        let ts = TopologizedSemilattice::new(chain_min(2), FiniteTopology::indiscrete(2).unwrap())
            .unwrap();
        assert!(!ts.is_v_semilattice());
        let one = TopologizedSemilattice::new(
            Semilattice::from_table(&[vec![0]]).unwrap(),
            FiniteTopology::discrete(1).unwrap(),
        )
        .unwrap();
        assert!(one.is_v_semilattice());
    }

    #[test]
    fn lawson_examples() {
        let ts = TopologizedSemilattice::new(chain_min(2), sierpinski()).unwrap();
        assert!(ts.is_lawson());
        let t = FiniteTopology::from_opens(3, &[m(&[]), m(&[1, 2]), m(&[0, 1, 2])]).unwrap();
        let ts = TopologizedSemilattice::new(fan(), t).unwrap();
        assert!(!ts.is_lawson());
        let ts = TopologizedSemilattice::new(fan(), FiniteTopology::discrete(3).unwrap()).unwrap();
        assert!(ts.is_lawson());
    }

    #[test]
    fn gdelta_examples() {
        let ts = TopologizedSemilattice::new(fan(), FiniteTopology::discrete(3).unwrap()).unwrap();
        assert!(ts.is_gdelta_separated());
        let ts = TopologizedSemilattice::new(chain_min(2), sierpinski()).unwrap();
        assert_eq!(ts.closed_neighborhoods(1), vec![m(&[0, 1])]);
        assert!(!ts.is_gdelta_separated());
    }
}
