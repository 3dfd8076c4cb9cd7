//! Exact evaluation of epsilon blocks and star products at point tuples.
//!
//! The product of two symmetric functions is a symmetrization over all
//! (m+n)! permutations, but every summand depends only on which points are
//! handed to the left factor. Grouping the permutations by that subset
//! turns the sum into
//!
//! ```text
//!     (f*g)(x) = m! n! / (m+n)!  *  sum_{|S| = m} f(x_S) g(x_{S^c})
//!                                   prod_{a in S, b not in S} omega(x_a, x_b),
//! ```
//!
//! a binomial number of terms instead of a factorial one. Multi-part
//! epsilon products eps_{l1} * eps_{l2} * ... evaluate by applying the
//! grouping recursively, splitting off one part at a time.

use crate::omega::omega_eval;
use exactalg::{AlgError, RatFunc, Scalar};
use itertools::Itertools;
use std::collections::BTreeMap;

/// The parameter triple (q1, q2, q3) = (q^{-1}, t, q t^{-1}) derived from
/// given values of q and t, carried through an evaluation.
pub(crate) struct AlgebraParams {
    pub q1: RatFunc,
    pub q2: RatFunc,
    pub q3: RatFunc,
}

impl AlgebraParams {
    pub fn new(qv: &RatFunc, tv: &RatFunc) -> Result<AlgebraParams, AlgError> {
        let q1 = qv.checked_inv().ok_or(AlgError::ZeroDenominator)?;
        let t_inv = tv.checked_inv().ok_or(AlgError::ZeroDenominator)?;
        Ok(AlgebraParams {
            q1,
            q2: tv.clone(),
            q3: qv * &t_inv,
        })
    }
}

/// Substitutes the base symbols q and t in a coefficient. Passing the
/// symbols themselves costs nothing.
pub(crate) fn subst_qt(c: &RatFunc, qv: &RatFunc, tv: &RatFunc) -> Result<RatFunc, AlgError> {
    if *qv == exactalg::var("q") && *tv == exactalg::var("t") {
        return Ok(c.clone());
    }
    let mut map = BTreeMap::new();
    map.insert(exactalg::sym("q"), qv.clone());
    map.insert(exactalg::sym("t"), tv.clone());
    c.evaluate(&map)
}

pub(crate) fn factorial(k: usize) -> Scalar {
    let mut acc = Scalar::from_integer(1.into());
    for i in 2..=k {
        acc *= Scalar::from_integer(i.into());
    }
    acc
}

/// One epsilon block: prod_{i<j} (z_i - p z_j)(z_i - p^{-1} z_j)/(z_i - z_j)^2.
pub fn epsilon_eval(n: u32, points: &[RatFunc], p: &RatFunc) -> Result<RatFunc, AlgError> {
    if points.len() != n as usize {
        return Err(AlgError::Domain(format!(
            "epsilon block of size {n} evaluated at {} points",
            points.len()
        )));
    }
    let p_inv = p.checked_inv().ok_or(AlgError::ZeroDenominator)?;
    let mut acc = RatFunc::one();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = &points[i] - &points[j];
            if d.is_zero() {
                return Err(AlgError::Pole {
                    assignment: format!("coincident points z{} = z{} = {}", i + 1, j + 1, points[i]),
                });
            }
            let num = &(&points[i] - &(p * &points[j])) * &(&points[i] - &(&p_inv * &points[j]));
            acc = &acc * &(&num * &d.pow(2).inv());
        }
    }
    Ok(acc)
}

/// Evaluates eps_{parts[0]} * eps_{parts[1]} * ... at the point tuple, all
/// blocks sharing the parameter p, the omegas taking theirs from prm.
pub(crate) fn eps_product_eval(
    parts: &[u32],
    points: &[RatFunc],
    p: &RatFunc,
    prm: &AlgebraParams,
) -> Result<RatFunc, AlgError> {
    if parts.is_empty() {
        assert!(points.is_empty(), "leftover points under an empty shape");
        return Ok(RatFunc::one());
    }
    let a = parts[0] as usize;
    let rest = &parts[1..];
    let n = points.len();
    assert_eq!(
        a + rest.iter().sum::<u32>() as usize,
        n,
        "shape size must match the point count"
    );
    if rest.is_empty() {
        return epsilon_eval(a as u32, points, p);
    }

    let mut terms = Vec::new();
    for s in (0..n).combinations(a) {
        let in_s = |i: usize| s.binary_search(&i).is_ok();
        let block: Vec<RatFunc> = s.iter().map(|&i| points[i].clone()).collect();
        let others: Vec<RatFunc> = (0..n).filter(|&i| !in_s(i)).map(|i| points[i].clone()).collect();
        let head = epsilon_eval(a as u32, &block, p)?;
        if head.is_zero() {
            continue;
        }
        let tail = eps_product_eval(rest, &others, p, prm)?;
        if tail.is_zero() {
            continue;
        }
        let mut cross = RatFunc::one();
        for &i in &s {
            for j in (0..n).filter(|&j| !in_s(j)) {
                cross = &cross * &omega_eval(&points[i], &points[j], &prm.q1, &prm.q2, &prm.q3)?;
            }
        }
        terms.push(&(&head * &tail) * &cross);
    }
    let weight = &factorial(a) * &factorial(n - a) / factorial(n);
    Ok(&RatFunc::sum_all(terms) * &RatFunc::from_scalar(weight))
}

/// The star product of two elements, evaluated exactly at a point tuple
/// of combined length, with q and t symbolic.
pub fn star_eval(
    f: &crate::AElement,
    g: &crate::AElement,
    points: &[RatFunc],
) -> Result<RatFunc, AlgError> {
    let m = f.arity() as usize;
    let n = g.arity() as usize;
    if points.len() != m + n {
        return Err(AlgError::Domain(format!(
            "star of arities {m} and {n} evaluated at {} points",
            points.len()
        )));
    }
    let qv = exactalg::var("q");
    let tv = exactalg::var("t");
    let prm = AlgebraParams::new(&qv, &tv)?;
    let mut terms = Vec::new();
    for s in (0..m + n).combinations(m) {
        let in_s = |i: usize| s.binary_search(&i).is_ok();
        let left: Vec<RatFunc> = s.iter().map(|&i| points[i].clone()).collect();
        let right: Vec<RatFunc> = (0..m + n)
            .filter(|&i| !in_s(i))
            .map(|i| points[i].clone())
            .collect();
        let fv = f.eval_at(&left, &qv, &tv)?;
        let gv = g.eval_at(&right, &qv, &tv)?;
        if fv.is_zero() || gv.is_zero() {
            continue;
        }
        let mut cross = RatFunc::one();
        for &i in &s {
            for j in (0..m + n).filter(|&j| !in_s(j)) {
                cross = &cross
                    * &omega_eval(&points[i], &points[j], &prm.q1, &prm.q2, &prm.q3).map_err(
                        |e| match e {
                            AlgError::Pole { assignment } => AlgError::Pole {
                                assignment: format!("{assignment} in the block split {s:?}"),
                            },
                            other => other,
                        },
                    )?;
            }
        }
        terms.push(&(&fv * &gv) * &cross);
    }
    let weight = &factorial(m) * &factorial(n) / factorial(m + n);
    Ok(&RatFunc::sum_all(terms) * &RatFunc::from_scalar(weight))
}
