//! Error types shared across the crate.
//!
//! Everything fallible returns [`Error`]; the CLI maps these onto process
//! exit codes (usage problems, verification failures, resource limits).

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Error)]
pub enum Error {
    /// Requested a Lie type outside A/C.
    #[error("type {0} not in scope; supported types: A, C")]
    UnsupportedType(String),

    /// The rank was zero or otherwise unusable for the requested type.
    #[error("invalid rank {rank} for type {kind}")]
    InvalidRank { kind: char, rank: usize },

    /// A dominant weight had the wrong number of coordinates.
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    /// A weight coordinate was not a nonnegative integer.
    #[error("malformed weight vector: {0}")]
    WeightParse(String),

    /// Asked for the leading term of the zero element.
    #[error("zero element has no leading term")]
    ZeroElement,

    /// The straightening search ran out of candidates.
    #[error(
        "straightening search exhausted for exponent {exponents:?} \
         (source {source_row}, sink {sink}); no operator of length <= {max_len} applies"
    )]
    SearchExhausted {
        exponents: String,
        source_row: usize,
        sink: String,
        max_len: usize,
    },

    /// An explicit-module construction would exceed the dimension budget.
    #[error("ambient module dimension {dim} exceeds budget {budget}")]
    ResourceBudget { dim: usize, budget: usize },

    /// Standard-monomial enumeration overran its safety guard.
    #[error("monomial enumeration exceeded guard of {guard} (expected {expected})")]
    EnumerationGuard { guard: u64, expected: u64 },

    /// A straightened element's leading monomial disagreed with its violator.
    #[error("leading monomial mismatch while straightening {context}")]
    LmMismatch { context: String },

    /// I/O failure surfaced from export or CLI plumbing.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
