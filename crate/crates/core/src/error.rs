use thiserror::Error;

/// Errors raised by space construction, set operations, linear algebra,
/// and density-matrix computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("labels and probabilities differ in length ({labels} vs {probs})")]
    LengthMismatch { labels: usize, probs: usize },

    #[error("outcome space must contain at least one outcome")]
    EmptySpace,

    #[error("duplicate outcome label {label:?}")]
    DuplicateLabel { label: String },

    #[error("probability {value} at index {index} is not strictly positive")]
    NonPositiveProbability { index: usize, value: f64 },

    #[error("probabilities sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },

    #[error("no outcome labelled {label:?}")]
    UnknownLabel { label: String },

    #[error("outcome index {index} out of range for space of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("operands belong to different outcome spaces")]
    SpaceMismatch,

    #[error("conditioning event is empty or has zero probability")]
    ZeroProbabilityCondition,

    #[error("partition block at position {position} is empty")]
    EmptyBlock { position: usize },

    #[error("partition blocks at positions {first} and {second} overlap")]
    OverlappingBlocks { first: usize, second: usize },

    #[error("partition blocks do not cover the outcome space")]
    IncompleteCover,

    #[error("dimensions differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("non-finite entry {value} at index {index}")]
    NonFiniteEntry { index: usize, value: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("relation contains ({j},{k}) but not ({k},{j})")]
    AsymmetricRelation { j: usize, k: usize },

    #[error("superposition requires a non-empty conditioning event")]
    EmptyConditioningEvent,

    #[error("density matrix is not pure: top eigenvalue is {top_eigenvalue}, expected 1")]
    NotPure { top_eigenvalue: f64 },

    #[error("trial count must be at least 1")]
    ZeroTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
