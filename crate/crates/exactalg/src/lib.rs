//! Exact arithmetic over ℚ: sparse multivariate Laurent polynomials, rational
//! functions in canonical form, truncated Laurent expansions at 0 and ∞,
//! formal-delta decompositions, finite q-Pochhammer products, and univariate
//! limits by exact cancellation.
//!
//! Everything is exact; there is no floating-point mode. The universal scalar
//! is [`RatFunc`], a reduced fraction of two [`MPoly`] values whose printed
//! form round-trips through [`parse_ratfunc`] bit-exactly.

mod delta;
mod error;
mod gcd;
mod monomial;
mod parse;
mod poch;
mod poly;
mod ratfunc;
mod sample;
mod series;
mod symbol;

pub use delta::{delta_decompose, delta_decompose_with_poles, DeltaDecomposition};
pub use error::AlgError;
pub use gcd::poly_gcd;
pub use monomial::Monomial;
pub use parse::parse_ratfunc;
pub use poch::{pochhammer, pochhammer_lemma, pochhammer_lemma_ids};
pub use poly::MPoly;
pub use ratfunc::{frac, int, limit_at, limit_at_infty, var, RatFunc};
pub use sample::PointSampler;
pub use series::{series_expand, LaurentSeries, SeriesEnd};
pub use symbol::{sym, Symbol};

/// Arbitrary-precision rational number; always stored reduced with a
/// positive denominator (guaranteed by `num-rational`).
pub type Scalar = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Scalar from an `i64`.
pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(Int::from(n))
}

/// Scalar n/d. Panics if d = 0.
pub fn scalar_frac(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    Scalar::new(Int::from(n), Int::from(d))
}
