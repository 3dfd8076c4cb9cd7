//! Symmetric rational functions with prescribed pole and wheel behaviour,
//! represented by their expansions over the epsilon family
//!
//! ```text
//!     eps_n(z_1,...,z_n; p) = prod_{i<j} (z_i - p z_j)(z_i - p^{-1} z_j) / (z_i - z_j)^2,
//! ```
//!
//! closed under the symmetrized product
//!
//! ```text
//!     (f*g)(x_1,...,x_{m+n}) = Sym[ f(x_1..x_m) g(x_{m+1}..x_{m+n}) prod omega(x_a, x_b) ],
//!     omega(x,y) = (x - q1 y)(x - q2 y)(x - q3 y) / (x - y)^3,
//! ```
//!
//! with parameters (q1, q2, q3) = (q^{-1}, t, q t^{-1}), so q1 q2 q3 = 1.
//! Elements are never expanded as closed-form rational functions of the z's;
//! they are stored as epsilon-basis coefficient tables plus an exact
//! evaluator at point tuples, which keeps the n!-term symmetrizations
//! tractable and every identity check pointwise exact.
//!
//! On top of the evaluator sit the distinguished elements F_lambda (two
//! independently computed expansions), the kernels K_n in three forms, the
//! specialization maps onto geometric strings, and the verification
//! routines for the tableau limit theorem and the norm/weight limits.

mod eps;
mod felem;
mod kernel;
mod omega;
mod points;
mod verify;

pub use eps::{epsilon_eval, star_eval};
pub use felem::{f_element, iota_e, iota_g, iota_of_e_expansion, routes_agree, Route};
pub use kernel::{kernel_k, KernelForm};
pub use omega::{gamma_pair, omega_eval};
pub use points::{specialize, SpecializationPlan};
pub use verify::{
    boundary_check, verify_b_psi, verify_tableau_theorem, wheel_check, wheel_check_seeded,
    BPsiReport, TableauCheck,
};

use exactalg::{AlgError, RatFunc};
use partitions::Partition;
use std::collections::BTreeMap;
use std::fmt;

/// Which of the two distinguished parameters the epsilon blocks of an
/// element carry. The same abstract element can be written over either
/// family; the letter is part of the representation, not of the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsParam {
    Q,
    T,
}

impl EpsParam {
    /// The parameter as a rational function of the base symbols.
    pub fn value(self) -> RatFunc {
        match self {
            EpsParam::Q => exactalg::var("q"),
            EpsParam::T => exactalg::var("t"),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            EpsParam::Q => "q",
            EpsParam::T => "t",
        }
    }
}

impl fmt::Display for EpsParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// A degree-n element: a coefficient table over the epsilon basis
/// { eps_lambda(.; p) : lambda |- n } for the declared parameter p,
/// together with the derived exact evaluator at point tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AElement {
    arity: u32,
    param: EpsParam,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl AElement {
    /// The scalar c sitting in degree zero.
    pub fn constant(c: RatFunc) -> AElement {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(Partition::empty(), c);
        }
        AElement {
            arity: 0,
            param: EpsParam::T,
            coeffs,
        }
    }

    /// The basis element eps_lambda(.; p) itself.
    pub fn eps_basis(la: &Partition, param: EpsParam) -> AElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(la.clone(), RatFunc::one());
        AElement {
            arity: la.size(),
            param,
            coeffs,
        }
    }

    /// Builds an element from an expansion; every partition must have the
    /// declared size. Zero coefficients are dropped.
    pub fn from_coeffs<I>(arity: u32, param: EpsParam, coeffs: I) -> Result<AElement, AlgError>
    where
        I: IntoIterator<Item = (Partition, RatFunc)>,
    {
        let mut map = BTreeMap::new();
        for (la, c) in coeffs {
            if la.size() != arity {
                return Err(AlgError::Domain(format!(
                    "partition {la} has size {} in an arity-{arity} element",
                    la.size()
                )));
            }
            if c.is_zero() {
                continue;
            }
            if map.insert(la, c).is_some() {
                return Err(AlgError::Domain("duplicate partition in expansion".into()));
            }
        }
        Ok(AElement {
            arity,
            param,
            coeffs: map,
        })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn param(&self) -> EpsParam {
        self.param
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of eps_lambda; zero when absent.
    pub fn coeff(&self, la: &Partition) -> RatFunc {
        self.coeffs.get(la).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &RatFunc) -> AElement {
        if c.is_zero() {
            return AElement {
                arity: self.arity,
                param: self.param,
                coeffs: BTreeMap::new(),
            };
        }
        AElement {
            arity: self.arity,
            param: self.param,
            coeffs: self.coeffs.iter().map(|(la, v)| (la.clone(), v * c)).collect(),
        }
    }

    /// Adds two expansions over the same basis.
    pub fn add(&self, other: &AElement) -> AElement {
        assert_eq!(self.arity, other.arity, "adding elements of different degree");
        assert_eq!(
            self.param, other.param,
            "adding expansions over different epsilon families"
        );
        let mut coeffs = self.coeffs.clone();
        for (la, c) in &other.coeffs {
            let entry = coeffs.entry(la.clone()).or_insert_with(RatFunc::zero);
            *entry = &*entry + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        AElement {
            arity: self.arity,
            param: self.param,
            coeffs,
        }
    }

    /// Evaluates at a point tuple, with q and t kept as symbols.
    pub fn eval(&self, points: &[RatFunc]) -> Result<RatFunc, AlgError> {
        self.eval_at(points, &exactalg::var("q"), &exactalg::var("t"))
    }

    /// Evaluates at a point tuple with q and t pinned to the given values
    /// (symbols, scalars, or anything in between).
    pub fn eval_at(&self, points: &[RatFunc], qv: &RatFunc, tv: &RatFunc) -> Result<RatFunc, AlgError> {
        if points.len() != self.arity as usize {
            return Err(AlgError::Domain(format!(
                "evaluating an arity-{} element at {} points",
                self.arity,
                points.len()
            )));
        }
        let prm = eps::AlgebraParams::new(qv, tv)?;
        let p = match self.param {
            EpsParam::Q => qv.clone(),
            EpsParam::T => tv.clone(),
        };
        let terms = self
            .coeffs
            .iter()
            .map(|(la, c)| {
                let block = eps::eps_product_eval(la.parts(), points, &p, &prm)?;
                Ok(&eps::subst_qt(c, qv, tv)? * &block)
            })
            .collect::<Result<Vec<_>, AlgError>>()?;
        Ok(RatFunc::sum_all(terms))
    }
}

impl fmt::Display for AElement {
    /// Prints like `(-1/(1-t))*eps_t[1]`, constant term as a bare value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (la, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if la.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "eps_{}[{la}]", self.param)?;
            } else {
                write!(f, "({c})*eps_{}[{la}]", self.param)?;
            }
        }
        Ok(())
    }
}
