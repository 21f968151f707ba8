//! Posets carrying a topology: completeness, convergence and the family of
//! closedness properties.
//!
//! Completeness is evaluated for a single cardinal. On a finite carrier every
//! directed set has at most `n` elements, so the cardinal-indexed variants
//! all coincide with plain completeness.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::{all_subsets, SubsetMask};
use crate::order::FinitePoset;
use crate::topology::FiniteTopology;
use crate::Flag;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TopologizedPoset {
    poset: FinitePoset,
    topology: Arc<FiniteTopology>,
}

/// Closedness flags of a topologized poset. `pospace` is left unevaluated
/// when the square would exceed the 16-point carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosednessProfile {
    pub up_closed: bool,
    pub down_closed: bool,
    pub updown_closed: bool,
    pub pospace: Flag,
    pub chain_closed: bool,
    pub weakly_up_closed: bool,
}

impl ClosednessProfile {
    /// ↑-closed and ↓-closed together.
    pub fn up_down_closed(&self) -> bool {
        self.up_closed && self.down_closed
    }
}

impl TopologizedPoset {
    pub fn new(poset: FinitePoset, topology: impl Into<Arc<FiniteTopology>>) -> Result<Self> {
        let topology = topology.into();
        if poset.n() != topology.n() {
            return Err(Error::SizeMismatch {
                left: poset.n(),
                right: topology.n(),
            });
        }
        Ok(TopologizedPoset { poset, topology })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.poset.n()
    }

    #[inline]
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn topology_arc(&self) -> &Arc<FiniteTopology> {
        &self.topology
    }

    fn nonempty_subsets(&self) -> impl Iterator<Item = SubsetMask> {
        all_subsets(self.n()).skip(1)
    }

    /// Every nonempty up-directed set has a supremum inside its closure.
    pub fn is_up_complete(&self) -> bool {
        self.nonempty_subsets()
            .all(|d| !self.poset.is_up_directed(d).expect("nonempty") || self.sup_in_closure(d))
    }

    /// Every nonempty down-directed set has an infimum inside its closure.
    pub fn is_down_complete(&self) -> bool {
        self.nonempty_subsets()
            .all(|d| !self.poset.is_down_directed(d).expect("nonempty") || self.inf_in_closure(d))
    }

    pub fn is_complete(&self) -> bool {
        self.is_up_complete() && self.is_down_complete()
    }

    /// The chain form of completeness: every nonempty chain has its sup and
    /// inf inside its closure. Agrees with [`Self::is_complete`].
    pub fn chain_complete_equivalent(&self) -> bool {
        self.poset
            .chains()
            .all(|c| self.sup_in_closure(c) && self.inf_in_closure(c))
    }

    fn sup_in_closure(&self, a: SubsetMask) -> bool {
        match self.poset.sup(a).expect("nonempty") {
            Some(s) => self.topology.closure(a).contains(s),
            None => false,
        }
    }

    fn inf_in_closure(&self, a: SubsetMask) -> bool {
        match self.poset.inf(a).expect("nonempty") {
            Some(s) => self.topology.closure(a).contains(s),
            None => false,
        }
    }

    /// For every open `U ∋ x` some `d ∈ D` has `D ∩ ↑d ⊆ U`.
    pub fn up_converges(&self, d: SubsetMask, x: usize) -> Result<bool> {
        self.check_point(x)?;
        if !self.poset.is_up_directed(d)? {
            return Err(Error::NotDirected {
                set: d,
                direction: "up",
            });
        }
        Ok(self.converges(d, x, |p| self.poset.up_set(p)))
    }

    /// For every open `U ∋ x` some `d ∈ D` has `D ∩ ↓d ⊆ U`.
    pub fn down_converges(&self, d: SubsetMask, x: usize) -> Result<bool> {
        self.check_point(x)?;
        if !self.poset.is_down_directed(d)? {
            return Err(Error::NotDirected {
                set: d,
                direction: "down",
            });
        }
        Ok(self.converges(d, x, |p| self.poset.down_set(p)))
    }

    fn converges(&self, d: SubsetMask, x: usize, cone: impl Fn(usize) -> SubsetMask) -> bool {
        self.topology
            .opens()
            .iter()
            .filter(|u| u.contains(x))
            .all(|&u| d.iter().any(|p| d.intersection(cone(p)).is_subset(u)))
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: x,
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn is_up_closed(&self) -> bool {
        (0..self.n()).all(|x| self.topology.is_closed(self.poset.up_set(x)))
    }

    pub fn is_down_closed(&self) -> bool {
        (0..self.n()).all(|x| self.topology.is_closed(self.poset.down_set(x)))
    }

    pub fn is_updown_closed(&self) -> bool {
        (0..self.n()).all(|x| self.topology.is_closed(self.poset.updown_set(x)))
    }

    /// The closure of every chain is a chain.
    pub fn is_chain_closed(&self) -> bool {
        self.poset
            .chains()
            .all(|c| self.poset.is_chain(self.topology.closure(c)))
    }

    /// `cl{x} ⊆ ↑x` for every point.
    pub fn is_weakly_up_closed(&self) -> bool {
        (0..self.n()).all(|x| {
            self.topology
                .closure(SubsetMask::singleton(x))
                .is_subset(self.poset.up_set(x))
        })
    }

    /// The order relation `{(x, y) : x ≤ y}` as a subset of the square.
    pub fn order_graph(&self) -> SubsetMask {
        let n = self.n();
        let mut bits = 0u16;
        for x in 0..n {
            for y in self.poset.up_set(x).iter() {
                bits |= 1 << (x * n + y);
            }
        }
        SubsetMask::from_bits(bits)
    }

    /// Whether the order is closed in the product topology of `X × X`.
    pub fn pospace(&self) -> Flag {
        match self.topology.square() {
            Ok(square) => Flag::Value(square.is_closed(self.order_graph())),
            Err(_) => Flag::Unevaluated(format!(
                "square of {} points exceeds 16",
                self.n() * self.n()
            )),
        }
    }

    pub fn closedness_profile(&self) -> ClosednessProfile {
        ClosednessProfile {
            up_closed: self.is_up_closed(),
            down_closed: self.is_down_closed(),
            updown_closed: self.is_updown_closed(),
            pospace: self.pospace(),
            chain_closed: self.is_chain_closed(),
            weakly_up_closed: self.is_weakly_up_closed(),
        }
    }

    /// Every closed chain passes the literal cover-compactness oracle.
    pub fn is_chain_compact(&self) -> Result<bool> {
        for c in std::iter::once(SubsetMask::EMPTY).chain(self.poset.chains()) {
            if self.topology.is_closed(c) && !self.topology.is_compact_subset(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Product order with the product topology, row-major encoded.
    pub fn product(&self, other: &TopologizedPoset) -> Result<TopologizedPoset> {
        let poset = self.poset.product(&other.poset)?;
        let topology = self.topology.product(&other.topology)?;
        TopologizedPoset::new(poset, topology)
    }

    /// Induced order and subspace topology on `carrier`.
    pub fn subspace(&self, carrier: SubsetMask) -> Result<TopologizedPoset> {
        let (topology, _) = self.topology.subspace(carrier)?;
        TopologizedPoset::new(self.poset.restrict(carrier), topology)
    }

    /// Relabels points: old `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> TopologizedPoset {
        TopologizedPoset {
            poset: self.poset.permuted(perm),
            topology: Arc::new(self.topology.permuted(perm)),
        }
    }
}
