//! Finite topologized posets and semilattices: exact predicate evaluation,
//! exhaustive enumeration and counterexample search.
//!
//! Every structure lives on a ground set `{0, .., n-1}` with `n ≤ 16`, and
//! subsets are [`SubsetMask`] bitsets. On finite carriers every directed set
//! has a largest element, so the completeness-type predicates collapse to
//! `true`; they are still evaluated literally.

pub mod error;
pub mod io;
pub mod mask;
pub mod morphisms;
pub mod oracle;
pub mod order;
pub mod predicate;
pub mod search;
pub mod semilattice;
pub mod structure;
pub mod topo_poset;
pub mod topology;

use serde::Serialize;

pub use error::{Error, Result, TopologyViolation};
pub use mask::{SubsetMask, MAX_POINTS};
pub use order::FinitePoset;
pub use predicate::{Predicate, PredicateExpr, Subject};
pub use search::{CanonicalForm, EnumSpec};
pub use semilattice::{
    ContinuityProfile, Semilattice, TopologizedSemilattice, CHAIN_FINITE, UP_FINITE,
};
pub use structure::{Kind, Structure};
pub use topo_poset::{ClosednessProfile, TopologizedPoset};
pub use topology::{FiniteTopology, Preorder, SeparationProfile};

/// A boolean that may be left unevaluated when a size cap prevents it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Flag {
    Value(bool),
    Unevaluated(String),
}

impl Flag {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Flag::Value(b) => Some(*b),
            Flag::Unevaluated(_) => None,
        }
    }

    pub fn is_true(&self) -> bool {
        self.as_bool() == Some(true)
    }
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flag::Value(b) => write!(f, "{b}"),
            Flag::Unevaluated(why) => write!(f, "unevaluated ({why})"),
        }
    }
}
