//! Error type for symmetric-function operations.

use std::fmt;

/// Errors reported by conversions, pairings, and coefficient formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MacError {
    /// A partition's size disagrees with the degree of the function it
    /// should index.
    DegreeMismatch { expected: u32, found: u32 },
    /// Two inputs to a pairing have different degrees.
    PairingDegrees { left: u32, right: u32 },
    /// The same partition appeared twice while building a coefficient map.
    DuplicatePartition,
    /// The inner shape is not contained in the outer shape componentwise.
    NotNested { outer: String, inner: String },
    /// A skew coefficient evaluated to 0/0 or to a pole; the telescoped
    /// zero and pole counts are reported.
    UndefinedPsi { zeros: u32, poles: u32 },
    /// Malformed JSON or a coefficient string that does not parse back.
    BadSerialization(String),
    /// Anything else with a human-readable description.
    Domain(String),
}

impl fmt::Display for MacError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MacError::DegreeMismatch { expected, found } => {
                write!(f, "partition of size {found} in a degree-{expected} function")
            }
            MacError::PairingDegrees { left, right } => {
                write!(f, "pairing of degrees {left} and {right}")
            }
            MacError::DuplicatePartition => write!(f, "duplicate partition in coefficient list"),
            MacError::NotNested { outer, inner } => {
                write!(f, "shape [{inner}] is not contained in [{outer}]")
            }
            MacError::UndefinedPsi { zeros, poles } => {
                write!(
                    f,
                    "skew coefficient is indeterminate: {zeros} zero factor(s) against {poles} pole factor(s)"
                )
            }
            MacError::BadSerialization(msg) => write!(f, "bad serialized data: {msg}"),
            MacError::Domain(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for MacError {}
