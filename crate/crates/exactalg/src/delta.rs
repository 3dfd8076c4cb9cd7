//! Partial-fraction data for the difference of boundary expansions.
//!
//! For a rational function f(x) with simple nonzero poles a_1, …, a_r, the
//! expansion of f at 0 minus its expansion at ∞ collapses to a finite sum of
//! formal delta functions:
//!
//! ```text
//! (ι₀ − ι_∞) f(x) = Σ_i c_i δ(x / a_i),    δ(y) = Σ_{k∈ℤ} y^k,
//! ```
//!
//! with c_i = −num(a_i) / (a_i · den′(a_i)). This module finds the poles,
//! computes the coefficients, and checks the claimed identity on a window of
//! Laurent coefficients before returning it.

use crate::error::AlgError;
use crate::gcd::poly_gcd;
use crate::monomial::Monomial;
use crate::ratfunc::RatFunc;
use crate::series::{window_at_infty, window_at_zero};
use crate::symbol::Symbol;
use crate::{scalar, Scalar};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Result of expanding (ι₀ − ι_∞) f as a combination of delta functions.
/// Each term is (pole location a, coefficient c) standing for c·δ(x/a).
#[derive(Clone, PartialEq, Debug)]
pub struct DeltaDecomposition {
    pub terms: Vec<(RatFunc, RatFunc)>,
}

impl DeltaDecomposition {
    /// Coefficient of x^k in Σ c_i δ(x/a_i), namely Σ c_i a_i^{−k}.
    pub fn coeff(&self, k: i64) -> RatFunc {
        let mut s = RatFunc::zero();
        for (a, c) in &self.terms {
            s += &(c * &a.pow(-k));
        }
        s
    }
}

impl fmt::Display for DeltaDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}] * delta(x/({a}))")?;
        }
        Ok(())
    }
}

/// Denominator of f as a univariate polynomial in `var` with RatFunc
/// coefficients (constant term first). The constant term is nonzero.
fn den_coeffs(f: &RatFunc, var: Symbol) -> Vec<RatFunc> {
    let (off, cs) = f.denom().collect_univariate(var);
    assert_eq!(off, 0, "canonical denominator has no monomial factor of the pole variable");
    cs.into_iter().map(RatFunc::from_mpoly).collect()
}

/// Horner evaluation of a coefficient vector at a point.
fn horner(cs: &[RatFunc], a: &RatFunc) -> RatFunc {
    let mut v = RatFunc::zero();
    for c in cs.iter().rev() {
        v = &(&v * a) + c;
    }
    v
}

/// Synthetic division of Σ cs[k] x^k by (x − a); the division must be exact.
fn deflate(cs: &[RatFunc], a: &RatFunc) -> Vec<RatFunc> {
    let d = cs.len() - 1;
    let mut q = vec![RatFunc::zero(); d];
    let mut carry = RatFunc::zero();
    for k in (0..d).rev() {
        carry = &cs[k + 1] + &(&carry * a);
        q[k] = carry.clone();
    }
    let rem = &cs[0] + &(&carry * a);
    assert!(rem.is_zero(), "deflation by a verified root must be exact");
    q
}

/// Divisors of |n| by trial division; falls back to {1, |n|} for large inputs.
fn int_divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::from(1)];
    }
    if let Some(m) = n.to_u64() {
        if m <= 1_000_000 {
            let mut out = Vec::new();
            let mut d = 1u64;
            while d * d <= m {
                if m % d == 0 {
                    out.push(BigInt::from(d));
                    out.push(BigInt::from(m / d));
                }
                d += 1;
            }
            out.sort();
            out.dedup();
            return out;
        }
    }
    vec![BigInt::from(1), n]
}

/// Monomials dividing the ratio m0/mD in the Laurent sense: for each symbol
/// with exponent e, the candidate exponent ranges over [min(0,e), max(0,e)].
fn monomial_box(ratio: &Monomial, cap: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for &(s, e) in ratio.factors() {
        let (lo, hi) = (0.min(e), 0.max(e));
        let mut next = Vec::new();
        for m in &out {
            for x in lo..=hi {
                next.push(m.mul(&Monomial::var_pow(s, x)));
                if next.len() > cap {
                    return next;
                }
            }
        }
        out = next;
    }
    out
}

/// Candidate pole locations built from the trailing/leading coefficients of
/// the denominator: scalar parts from divisor pairs, monomial parts from the
/// divisor box, plus a stock of small rationals.
fn root_candidates(d0: &RatFunc, dtop: &RatFunc) -> Vec<RatFunc> {
    let mut scalars: Vec<Scalar> = vec![
        scalar(1),
        scalar(2),
        Scalar::new(1.into(), 2.into()),
        scalar(3),
        Scalar::new(1.into(), 3.into()),
        Scalar::new(2.into(), 3.into()),
        Scalar::new(3.into(), 2.into()),
        scalar(4),
        Scalar::new(1.into(), 4.into()),
        scalar(5),
        Scalar::new(1.into(), 5.into()),
        scalar(6),
        Scalar::new(1.into(), 6.into()),
    ];
    let mut monos: Vec<Monomial> = vec![Monomial::one()];
    // harvest structure from each (trailing monomial, leading monomial) pair
    let pair_terms = |f: &RatFunc| -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<(Monomial, Scalar)> = f
            .numer()
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.truncate(8);
        v
    };
    for (m0, c0) in pair_terms(d0) {
        for (md, cd) in pair_terms(dtop) {
            let ratio = m0.div(&md);
            for m in monomial_box(&ratio, 256) {
                monos.push(m);
            }
            let r = c0.clone() / cd.clone();
            for p in int_divisors(r.numer()) {
                for q in int_divisors(r.denom()) {
                    scalars.push(Scalar::new(p.clone(), q));
                }
            }
        }
    }
    scalars.sort();
    scalars.dedup();
    monos.sort();
    monos.dedup();
    let mut out = Vec::new();
    for m in &monos {
        for s in &scalars {
            if s.is_zero() {
                continue;
            }
            let base = RatFunc::from_monomial(m.clone());
            out.push(&base * &RatFunc::from_scalar(s.clone()));
            out.push(&base * &RatFunc::from_scalar(-s.clone()));
            if out.len() > 8192 {
                return out;
            }
        }
    }
    out
}

/// Find all roots of the (square-free in `var`) denominator, seeding with
/// `known` locations first.
fn find_poles(f: &RatFunc, var: Symbol, known: &[RatFunc]) -> Result<Vec<RatFunc>, AlgError> {
    let mut cs = den_coeffs(f, var);
    let mut roots: Vec<RatFunc> = Vec::new();
    let try_root = |cs: &mut Vec<RatFunc>, a: &RatFunc, roots: &mut Vec<RatFunc>| -> bool {
        if cs.len() < 2 || !horner(cs, a).is_zero() {
            return false;
        }
        *cs = deflate(cs, a);
        roots.push(a.clone());
        true
    };
    for a in known {
        if try_root(&mut cs, a, &mut roots) && cs.len() >= 2 && horner(&cs, a).is_zero() {
            return Err(AlgError::NonSimplePole(a.to_string()));
        }
    }
    if cs.len() >= 2 {
        let d0 = cs[0].clone();
        let dtop = cs.last().unwrap().clone();
        for a in root_candidates(&d0, &dtop) {
            if cs.len() < 2 {
                break;
            }
            if try_root(&mut cs, &a, &mut roots) && cs.len() >= 2 && horner(&cs, &a).is_zero() {
                return Err(AlgError::NonSimplePole(a.to_string()));
            }
        }
    }
    if cs.len() >= 2 {
        return Err(AlgError::Domain(format!(
            "could not locate all poles in {var} of {f}"
        )));
    }
    Ok(roots)
}

/// Decompose (ι₀ − ι_∞) f into delta functions of `var`, verifying the
/// Laurent coefficients agree for all exponents with |k| ≤ max_order.
pub fn delta_decompose(
    f: &RatFunc,
    var: Symbol,
    max_order: i64,
) -> Result<DeltaDecomposition, AlgError> {
    delta_decompose_with_poles(f, var, &[], max_order)
}

/// Same as `delta_decompose` but tries the given pole locations first, which
/// keeps the search exact and fast when the caller knows where poles live.
pub fn delta_decompose_with_poles(
    f: &RatFunc,
    var: Symbol,
    known: &[RatFunc],
    max_order: i64,
) -> Result<DeltaDecomposition, AlgError> {
    if f.is_zero() || f.denom().degree_in(var) == 0 {
        // polynomials (Laurent in var) have matching expansions at both ends
        return Ok(DeltaDecomposition { terms: Vec::new() });
    }
    // pull any pure power of var out of the denominator: poles at 0 carry no
    // delta, only a shift x^{-j}·c·δ(x/a) = c·a^{-j}·δ(x/a)
    let j = f.denom().min_exp_in(var);
    let shifted = f * &RatFunc::from_monomial(Monomial::var_pow(var, j as i32));
    if shifted.denom().degree_in(var) == 0 {
        return Ok(DeltaDecomposition { terms: Vec::new() });
    }
    // simple poles only: den and ∂den/∂var must be coprime in var
    let dp = shifted.denom().derivative_in(var);
    let g = poly_gcd(shifted.denom(), &dp);
    if g.degree_in(var) > 0 {
        return Err(AlgError::NonSimplePole(format!(
            "repeated factor {g} in denominator {}",
            shifted.denom()
        )));
    }
    let mut roots = find_poles(&shifted, var, known)?;
    // deterministic output order
    roots.sort_by_key(|a| a.to_string());
    roots.dedup();
    let num = shifted.numer().clone();
    let mut terms = Vec::new();
    for a in roots {
        let at = BTreeMap::from([(var, a.clone())]);
        let n_at = num.subst(&at).expect("pole locations are nonzero");
        let dp_at = dp.subst(&at).expect("pole locations are nonzero");
        // residue at x=a is num(a)/den'(a); the delta coefficient is −residue/a,
        // then shifted back by a^{-j} for the monomial pulled out above
        let c = &-&(&n_at / &(&a * &dp_at)) * &a.pow(-j);
        if !c.is_zero() {
            terms.push((a, c));
        }
    }
    let dec = DeltaDecomposition { terms };
    // verify on the window |k| ≤ max_order
    let lhs0 = window_at_zero(f, var, -max_order, max_order);
    let lhs_inf = window_at_infty(f, var, -max_order, max_order);
    for (i, k) in (-max_order..=max_order).enumerate() {
        let lhs = &lhs0[i] - &lhs_inf[i];
        if lhs != dec.coeff(k) {
            return Err(AlgError::DeltaMismatch { exponent: k });
        }
    }
    Ok(dec)
}
