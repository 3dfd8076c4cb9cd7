//! The degree-n kernel in its three equivalent forms:
//!
//! ```text
//!     K_n(x, z) = C sum_{i in [m]^n} x_{i_1}...x_{i_n} prod_{a<b} gamma_{i_a, i_b}(z_a, z_b)
//!               = C sum_{lambda |- n} m_lambda(x) eps_lambda(z; t) n! / prod_i lambda_i!
//!               = sum_{lambda |- n} Q_lambda(x) F_lambda(z),
//! ```
//!
//! with C = (-1)^n / ((1-q)^n n!). The first is a direct m^n-term sum over
//! index words; the second groups words by the multiset of indices; the
//! third pairs the dual Macdonald family with the F elements. Computing
//! all three and comparing them exercises every layer of the tower, from
//! the two-point weights up to the transition matrices.

use crate::eps::{eps_product_eval, factorial, AlgebraParams};
use crate::felem::{f_element, Route};
use crate::omega::gamma_at;
use exactalg::{var, AlgError, RatFunc};
use itertools::Itertools;
use macdonald::{macdonald_q, Basis};
use partitions::{partitions_of, Partition};
use std::collections::BTreeMap;

/// Which of the three expressions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelForm {
    /// The m^n-term sum over index words with pairwise gamma weights.
    GammaSum,
    /// The partition-grouped sum with monomial symmetric functions.
    EpsSum,
    /// The dual-basis pairing with the F elements.
    QfSum,
}

/// The shared prefactor (-1)^n / ((1-q)^n n!).
fn front(n: u32) -> RatFunc {
    let sign = if n % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
    let den = &(&RatFunc::one() - &var("q")).pow(n as i64)
        * &RatFunc::from_scalar(factorial(n as usize));
    &sign * &den.inv()
}

/// Evaluates a monomial symmetric function at given values.
fn monomial_at(la: &Partition, x: &[RatFunc]) -> Result<RatFunc, AlgError> {
    let poly = macdonald::monomial_sym_poly(la, x.len() as u32);
    let mut map = BTreeMap::new();
    for (i, v) in x.iter().enumerate() {
        map.insert(exactalg::sym(&format!("x{}", i + 1)), v.clone());
    }
    poly.subst(&map)
}

/// Evaluates K_n at point lists x (length m) and z (length n), q and t
/// symbolic. The z points must be pairwise distinct.
pub fn kernel_k(
    n: u32,
    m: u32,
    form: KernelForm,
    x: &[RatFunc],
    z: &[RatFunc],
) -> Result<RatFunc, AlgError> {
    if x.len() != m as usize || z.len() != n as usize {
        return Err(AlgError::Domain(format!(
            "kernel expects {m} x-points and {n} z-points, got {} and {}",
            x.len(),
            z.len()
        )));
    }
    if n == 0 {
        // the empty partition contributes Q_0 F_0 = 1
        return Ok(RatFunc::one());
    }
    let qv = var("q");
    let tv = var("t");
    match form {
        KernelForm::GammaSum => {
            let mut terms = Vec::new();
            for word in (0..n).map(|_| 0..m as usize).multi_cartesian_product() {
                let mut term = RatFunc::one();
                for &i in &word {
                    term = &term * &x[i];
                }
                if term.is_zero() {
                    continue;
                }
                for a in 0..word.len() {
                    for b in a + 1..word.len() {
                        term = &term
                            * &gamma_at(
                                word[a] as u32,
                                word[b] as u32,
                                &z[a],
                                &z[b],
                                &qv,
                                &tv,
                            )?;
                    }
                }
                terms.push(term);
            }
            Ok(&front(n) * &RatFunc::sum_all(terms))
        }
        KernelForm::EpsSum => {
            let prm = AlgebraParams::new(&qv, &tv)?;
            let mut terms = Vec::new();
            for la in partitions_of(n) {
                if la.len() > m as usize {
                    // the monomial factor needs at least l(lambda) variables
                    continue;
                }
                let mx = monomial_at(&la, x)?;
                if mx.is_zero() {
                    continue;
                }
                let block = eps_product_eval(la.parts(), z, &tv, &prm)?;
                let weight = &factorial(n as usize)
                    / la.parts()
                        .iter()
                        .map(|&a| factorial(a as usize))
                        .fold(exactalg::Scalar::from_integer(1.into()), |u, v| u * v);
                terms.push(&(&mx * &block) * &RatFunc::from_scalar(weight));
            }
            Ok(&front(n) * &RatFunc::sum_all(terms))
        }
        KernelForm::QfSum => {
            let mut terms = Vec::new();
            for la in partitions_of(n) {
                let q_la = macdonald_q(&la);
                debug_assert_eq!(q_la.basis(), Basis::M);
                let mut qx = Vec::new();
                for (mu, c) in q_la.iter() {
                    let mv = monomial_at(mu, x)?;
                    if !mv.is_zero() {
                        qx.push(&mv * c);
                    }
                }
                let qx = RatFunc::sum_all(qx);
                if qx.is_zero() {
                    continue;
                }
                let fz = f_element(&la, Route::ViaG).eval(z)?;
                terms.push(&qx * &fz);
            }
            Ok(RatFunc::sum_all(terms))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::{frac, int, parse_ratfunc};

    #[test]
    fn degree_zero_is_one() {
        for form in [KernelForm::GammaSum, KernelForm::EpsSum, KernelForm::QfSum] {
            assert!(kernel_k(0, 2, form, &[int(1), int(2)], &[]).unwrap().is_one());
        }
    }

    #[test]
    fn degree_one_collapses_to_the_power_sum() {
        // no gamma factors survive: K_1 = -(x1 + x2)/(1-q).
        let x = [var("x1"), var("x2")];
        let z = [int(5)];
        let expect = parse_ratfunc("-(x1+x2)/(1-q)").unwrap();
        for form in [KernelForm::GammaSum, KernelForm::EpsSum, KernelForm::QfSum] {
            assert_eq!(kernel_k(1, 2, form, &x, &z).unwrap(), expect, "{form:?}");
        }
    }

    #[test]
    fn three_forms_agree_at_seeded_points() {
        let mut sampler = exactalg::PointSampler::new(23);
        for (n, m) in [(2u32, 2u32), (2, 1), (3, 2)] {
            let x: Vec<RatFunc> = sampler
                .distinct_rationals(m as usize)
                .into_iter()
                .map(RatFunc::from_scalar)
                .collect();
            let z: Vec<RatFunc> = sampler
                .distinct_rationals(n as usize)
                .into_iter()
                .map(RatFunc::from_scalar)
                .collect();
            let a = kernel_k(n, m, KernelForm::GammaSum, &x, &z).unwrap();
            let b = kernel_k(n, m, KernelForm::EpsSum, &x, &z).unwrap();
            let c = kernel_k(n, m, KernelForm::QfSum, &x, &z).unwrap();
            assert_eq!(a, b, "gamma vs eps at n={n}, m={m}");
            assert_eq!(b, c, "eps vs QF at n={n}, m={m}");
        }
    }

    #[test]
    fn coincident_z_points_report_a_pole() {
        let x = [int(1), int(2)];
        let z = [frac(1, 2), frac(1, 2)];
        let e = kernel_k(2, 2, KernelForm::GammaSum, &x, &z);
        assert!(matches!(e, Err(AlgError::Pole { .. })));
    }
}
