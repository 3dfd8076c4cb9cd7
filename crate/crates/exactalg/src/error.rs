use thiserror::Error;

/// Errors of the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("zero denominator")]
    ZeroDenominator,

    /// A substitution made a denominator vanish; carries the assignment.
    #[error("pole under assignment {assignment}")]
    Pole { assignment: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Requested series window lies strictly outside the support of f.
    #[error("empty series window: requested order {order}, support starts at {support}")]
    EmptyWindow { order: i64, support: i64 },

    #[error("non-simple pole at {0}")]
    NonSimplePole(String),

    /// Reassembled delta terms disagree with the two-sided expansion.
    #[error("delta reconstruction mismatch at exponent {exponent}")]
    DeltaMismatch { exponent: i64 },

    #[error("domain error: {0}")]
    Domain(String),
}
