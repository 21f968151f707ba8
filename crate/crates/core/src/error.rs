use thiserror::Error;

use crate::mask::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mask {bits:#06x} has points outside a ground set of size {n}")]
    MaskOutOfRange { bits: u16, n: usize },

    #[error("point {index} is out of range for a ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapacityExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("sizes do not match: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a topology: {0}")]
    NotATopology(TopologyViolation),

    #[error("a subspace needs a nonempty carrier")]
    EmptyCarrier,

    #[error("cover oracle budget exceeded: {opens} opens (limit {budget})")]
    OracleBudgetExceeded { opens: usize, budget: usize },

    #[error("relation is not antisymmetric; cycle {cycle:?}")]
    NotAntisymmetric { cycle: Vec<usize> },

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("set {set} is not {direction}-directed")]
    NotDirected {
        set: SubsetMask,
        direction: &'static str,
    },

    #[error("choice function returned {value} for ({x}, {y}), which is not an upper bound")]
    ChoiceOutOfBounds { x: usize, y: usize, value: usize },

    #[error("not idempotent: {x}*{x} = {value}")]
    NotIdempotent { x: usize, value: usize },

    #[error("not commutative: {x}*{y} != {y}*{x}")]
    NotCommutative { x: usize, y: usize },

    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),

    #[error("theorem profile {profile} expects a {expected}")]
    ProfileMismatch {
        profile: &'static str,
        expected: &'static str,
    },

    #[error("unknown predicate `{name}` at position {position}")]
    UnknownPredicate { name: String, position: usize },

    #[error("predicate `{name}` needs a {needs}")]
    NotApplicable {
        name: &'static str,
        needs: &'static str,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid structure file: {0}")]
    InvalidFile(String),
}

/// The concrete axiom a candidate open family fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyViolation {
    #[error("empty set missing")]
    MissingEmpty,
    #[error("full set missing")]
    MissingFull,
    #[error("union of {0} and {1} missing")]
    UnionMissing(SubsetMask, SubsetMask),
    #[error("intersection of {0} and {1} missing")]
    IntersectionMissing(SubsetMask, SubsetMask),
}

impl Error {
    /// Capacity-style failures map to exit code 3 in the CLI.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::CapacityExceeded { .. } | Error::OracleBudgetExceeded { .. }
        )
    }
}
