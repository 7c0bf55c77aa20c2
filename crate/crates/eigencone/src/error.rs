use thiserror::Error;

/// Errors produced by cone, Schubert and weight operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Schubert index for n={n}: elements must be strictly increasing within 1..={n}, got {elements:?}")]
    InvalidIndex { n: u32, elements: Vec<u32> },

    #[error("invalid move on {elements:?} at b={b}: {reason}")]
    InvalidMove {
        elements: Vec<u32>,
        b: u32,
        reason: &'static str,
    },

    #[error("invalid partition for a {rows}x{cols} box: {parts:?}")]
    InvalidPartition {
        rows: u32,
        cols: u32,
        parts: Vec<u32>,
    },

    #[error("box mismatch: {0}x{1} vs {2}x{3}")]
    BoxMismatch(u32, u32, u32, u32),

    #[error("mixed shapes: all Schubert indices must share the same (r, n)")]
    MixedShapes,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entries are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),

    #[error("coordinate {coordinate} is not dominant (entries must be weakly decreasing)")]
    NonDominant { coordinate: usize },

    #[error("vector does not sum to zero")]
    NonZeroTrace,

    #[error("zero vector has no primitive representative")]
    ZeroVector,

    #[error("point is not a member of the cone")]
    NotAMember,

    #[error("point does not lie on the requested facet")]
    NotOnFacet,

    #[error("point is not in the gap-free subface of the facet")]
    NotInSubface,

    #[error("not a facet: the intersection number of {0} is {1}, expected 1")]
    NotAFacet(String, u64),

    #[error("codimension sum is {actual}, expected {expected}")]
    CodimensionSum { expected: u32, actual: u32 },

    #[error("illegal facet pair (j0={j0}, a0={a0}): not a removable index of the facet")]
    IllegalPair { j0: usize, a0: u32 },

    #[error("requires n >= 2 and s >= 3, got n={n}, s={s}")]
    BadConeParameters { n: u32, s: u32 },

    #[error("enumeration budget exceeded: estimated {estimate} candidate tuples for (n={n}, s={s}), budget {budget}")]
    BudgetExceeded {
        n: u32,
        s: u32,
        estimate: u128,
        budget: u64,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
