//! Symmetric functions with rational-function coefficients in (q, t).
//!
//! A symmetric function of homogeneous degree n is stored as a finite map
//! from partitions of n to coefficients in Q(q, t), tagged with the basis
//! the partitions index:
//!
//! ```text
//!     f  =  sum_{lambda |- n}  c_lambda * b_lambda        b in {m, e, p, g, P, Q}
//! ```
//!
//! Here m is the monomial basis, e the elementary basis, p the power-sum
//! basis, g the one-parameter deformation of the complete homogeneous basis
//! generated by
//!
//! ```text
//!     sum_{n >= 1} g_n y^n  =  exp( sum_{n >= 1} (1/n) (1-t^n)/(1-q^n) p_n y^n ),
//! ```
//!
//! and P, Q are the two standard normalizations of the (q, t)-orthogonal
//! basis: P_lambda is the unique m-unitriangular family orthogonal under
//! the deformed Hall pairing
//!
//! ```text
//!     <p_lambda, p_mu>  =  delta_{lambda,mu} z_lambda prod_j (1-q^{lambda_j})/(1-t^{lambda_j}),
//! ```
//!
//! and Q_lambda = b_lambda P_lambda where b_lambda = <P_lambda, P_lambda>^{-1}.
//!
//! Conversions between all six bases pivot through the power sums; the
//! per-degree transition matrices are computed once, checked (round trips
//! are the identity), and cached. The P-coefficient tables are additionally
//! persisted to disk; see [`cache`].

pub mod cache;
mod cauchy;
mod conv;
mod error;
mod inner;
mod json;
mod pq;
mod psi;
mod vars;

pub use cauchy::cauchy_check;
pub use conv::convert_basis;
pub use error::MacError;
pub use inner::{scalar_product, z_lambda};
pub use json::{symfunc_from_json, symfunc_to_json};
pub use pq::{b_norm, macdonald_p, macdonald_q, BNormMethod};
pub use psi::{
    psi_of_chain, psi_of_filling, psi_skew, psi_vanishing_check, tableau_expand, ChainPsi,
    VanishingReport,
};
pub use vars::{monomial_sym_poly, power_sum_poly, restrict_to_vars};

use exactalg::RatFunc;
use partitions::Partition;
use std::collections::BTreeMap;
use std::fmt;

/// Basis tags for [`SymFunc`]. The single letters are the classical names:
/// monomial, elementary, power-sum, the (q,t)-deformed homogeneous family g,
/// and the orthogonal pair P, Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    E,
    P,
    G,
    MacP,
    MacQ,
}

impl Basis {
    /// All six tags, in a fixed order convenient for exhaustive tests.
    pub const ALL: [Basis; 6] = [
        Basis::M,
        Basis::E,
        Basis::P,
        Basis::G,
        Basis::MacP,
        Basis::MacQ,
    ];

    /// The one-letter name used in printing and JSON.
    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::P => "p",
            Basis::G => "g",
            Basis::MacP => "P",
            Basis::MacQ => "Q",
        }
    }

    /// Inverse of [`Basis::letter`].
    pub fn from_letter(s: &str) -> Option<Basis> {
        Basis::ALL.iter().copied().find(|b| b.letter() == s)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// A homogeneous symmetric function: a basis tag, a degree, and a map from
/// partitions of that degree to nonzero coefficients in Q(q, t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: u32,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    /// The zero function of the given degree, tagged with `basis`.
    pub fn zero(basis: Basis, degree: u32) -> SymFunc {
        SymFunc {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `b_lambda` itself, with coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> SymFunc {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, RatFunc::one());
        SymFunc {
            basis,
            degree,
            coeffs,
        }
    }

    /// Builds a function from explicit coefficients. Zero coefficients are
    /// dropped; every partition must have size `degree`.
    pub fn from_coeffs(
        basis: Basis,
        degree: u32,
        coeffs: impl IntoIterator<Item = (Partition, RatFunc)>,
    ) -> Result<SymFunc, MacError> {
        let mut map = BTreeMap::new();
        for (lambda, c) in coeffs {
            if lambda.size() != degree {
                return Err(MacError::DegreeMismatch {
                    expected: degree,
                    found: lambda.size(),
                });
            }
            if c.is_zero() {
                continue;
            }
            if map.insert(lambda, c).is_some() {
                return Err(MacError::DuplicatePartition);
            }
        }
        Ok(SymFunc {
            basis,
            degree,
            coeffs: map,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `b_lambda`; zero if absent.
    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.coeffs.get(lambda).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Iterates over (partition, coefficient) pairs; coefficients are nonzero.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    /// The partitions carrying nonzero coefficients.
    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    /// Sum; both operands must share basis and degree.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, other.basis, "basis mismatch in sum");
        assert_eq!(self.degree, other.degree, "degree mismatch in sum");
        let mut coeffs = self.coeffs.clone();
        for (lambda, c) in &other.coeffs {
            let entry = coeffs.entry(lambda.clone()).or_insert_with(RatFunc::zero);
            *entry = &*entry + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            coeffs,
        }
    }

    /// Difference; both operands must share basis and degree.
    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-RatFunc::one()))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis, self.degree);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(lambda, a)| (lambda.clone(), a * c))
            .collect();
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            coeffs,
        }
    }

    /// Product of two power-sum expansions: p_alpha * p_beta = p_{alpha u beta}
    /// with the multiset union of parts. Only the p basis is multiplicative
    /// part-by-part like this, so both operands must carry it.
    pub fn mul_p(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, Basis::P, "left factor must be in the p basis");
        assert_eq!(other.basis, Basis::P, "right factor must be in the p basis");
        let mut coeffs: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (alpha, a) in &self.coeffs {
            for (beta, b) in &other.coeffs {
                let mut parts: Vec<u32> =
                    alpha.parts().iter().chain(beta.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let joined = Partition::from_parts(parts);
                let entry = coeffs.entry(joined).or_insert_with(RatFunc::zero);
                *entry = &*entry + &(a * b);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymFunc {
            basis: Basis::P,
            degree: self.degree + other.degree,
            coeffs,
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}[{}]", self.basis.letter(), lambda)?;
            } else {
                write!(f, "({})*{}[{}]", c, self.basis.letter(), lambda)?;
            }
        }
        Ok(())
    }
}
