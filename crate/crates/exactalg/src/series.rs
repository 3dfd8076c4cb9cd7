use crate::error::AlgError;
use crate::monomial::Monomial;
use crate::ratfunc::RatFunc;
use crate::symbol::Symbol;
use std::collections::BTreeMap;
use std::fmt;

/// Which end of the Riemann sphere the expansion is taken at.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesEnd {
    Zero,
    Infinity,
}

/// Truncated Laurent expansion in one variable; coefficients are rational
/// functions in the remaining variables.
///
/// Stores the window of exponents [lowest, lowest + coeffs.len() − 1];
/// `coeffs[k]` multiplies var^(lowest + k).
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentSeries {
    pub var: Symbol,
    pub lowest: i64,
    pub coeffs: Vec<RatFunc>,
}

impl LaurentSeries {
    pub fn truncation_order(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of var^k inside the stored window.
    pub fn coeff(&self, k: i64) -> Option<&RatFunc> {
        if k < self.lowest {
            return None;
        }
        self.coeffs.get((k - self.lowest) as usize)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lowest + k as i64;
            let mono = RatFunc::from_monomial(Monomial::var_pow(
                self.var,
                i32::try_from(e).expect("exponent fits i32"),
            ));
            let term = &mono * c;
            let s = term.to_string();
            if first {
                write!(f, "{s}")?;
                first = false;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, "-{rest}")?;
            } else {
                write!(f, "+{s}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Coefficients of the expansion of f at 0 in `var` for exponents
/// [valuation .. upto]; returns (valuation, coeffs). Empty when upto < valuation.
pub(crate) fn expand_at_zero(f: &RatFunc, var: Symbol, upto: i64) -> (i64, Vec<RatFunc>) {
    assert!(!f.is_zero(), "expansion of 0 has no valuation");
    let (na, nc) = f.numer().collect_univariate(var);
    let (da, dc) = f.denom().collect_univariate(var);
    let v = na - da;
    if upto < v {
        return (v, Vec::new());
    }
    let len = (upto - v + 1) as usize;
    // invert D(x) = Σ d_k x^k (d_0 ≠ 0) as a power series
    let d0 = RatFunc::from_mpoly(dc[0].clone()).inv();
    let mut e: Vec<RatFunc> = Vec::with_capacity(len);
    e.push(d0.clone());
    for k in 1..len {
        let mut s = RatFunc::zero();
        for j in 1..=k.min(dc.len() - 1) {
            s += &(&RatFunc::from_mpoly(dc[j].clone()) * &e[k - j]);
        }
        e.push(-&(&d0 * &s));
    }
    // multiply by N(x)
    let mut out = vec![RatFunc::zero(); len];
    for (j, n) in nc.iter().enumerate() {
        if n.is_zero() {
            continue;
        }
        let nr = RatFunc::from_mpoly(n.clone());
        for k in j..len {
            let t = &nr * &e[k - j];
            out[k] += &t;
        }
    }
    (v, out)
}

/// Coefficient of var^k in the expansion at 0, for k in [lo, hi] (zeros
/// outside the support).
pub(crate) fn window_at_zero(f: &RatFunc, var: Symbol, lo: i64, hi: i64) -> Vec<RatFunc> {
    if f.is_zero() {
        return vec![RatFunc::zero(); (hi - lo + 1).max(0) as usize];
    }
    let (v, cs) = expand_at_zero(f, var, hi);
    (lo..=hi)
        .map(|k| {
            if k < v || ((k - v) as usize) >= cs.len() {
                RatFunc::zero()
            } else {
                cs[(k - v) as usize].clone()
            }
        })
        .collect()
}

/// f with var ↦ 1/var.
pub(crate) fn invert_var(f: &RatFunc, var: Symbol) -> RatFunc {
    let inv = RatFunc::from_monomial(Monomial::var_pow(var, -1));
    f.evaluate(&BTreeMap::from([(var, inv)]))
        .expect("substituting 1/var cannot hit a pole")
}

/// Coefficient window [lo, hi] of the expansion at ∞.
pub(crate) fn window_at_infty(f: &RatFunc, var: Symbol, lo: i64, hi: i64) -> Vec<RatFunc> {
    let g = invert_var(f, var);
    // x-exponent k corresponds to exponent −k of g at 0
    let mut w = window_at_zero(&g, var, -hi, -lo);
    w.reverse();
    w
}

/// Truncated Laurent expansion of f at 0 or ∞.
///
/// The `order` argument is the window endpoint away from the center: at 0
/// the window is [valuation, order] (exponents ascending), at ∞ it is
/// [order, top] where top = deg num − deg den (exponents of the expansion
/// descend from there). A window lying outside the support is an error.
pub fn series_expand(
    f: &RatFunc,
    var: Symbol,
    end: SeriesEnd,
    order: i64,
) -> Result<LaurentSeries, AlgError> {
    if f.is_zero() {
        return Ok(LaurentSeries {
            var,
            lowest: order,
            coeffs: vec![RatFunc::zero()],
        });
    }
    match end {
        SeriesEnd::Zero => {
            let (v, coeffs) = expand_at_zero(f, var, order);
            if coeffs.is_empty() {
                return Err(AlgError::EmptyWindow { order, support: v });
            }
            Ok(LaurentSeries {
                var,
                lowest: v,
                coeffs,
            })
        }
        SeriesEnd::Infinity => {
            let g = invert_var(f, var);
            let (vg, mut coeffs) = expand_at_zero(&g, var, -order);
            let top = -vg;
            if coeffs.is_empty() {
                return Err(AlgError::EmptyWindow {
                    order,
                    support: top,
                });
            }
            coeffs.reverse();
            Ok(LaurentSeries {
                var,
                lowest: order,
                coeffs,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_ratfunc as rf;
    use crate::ratfunc::int;
    use crate::symbol::sym;

    #[test]
    fn geometric_series() {
        let f = rf("1/(1-x)").unwrap();
        let s = series_expand(&f, sym("x"), SeriesEnd::Zero, 3).unwrap();
        assert_eq!(s.lowest, 0);
        assert_eq!(s.coeffs, vec![int(1), int(1), int(1), int(1)]);
        assert_eq!(s.to_string(), "1+x+x^2+x^3");
        assert_eq!(s.truncation_order(), 3);
    }

    #[test]
    fn geometric_at_infinity() {
        // 1/(1-x) = −x^{-1} − x^{-2} − … at ∞
        let f = rf("1/(1-x)").unwrap();
        let s = series_expand(&f, sym("x"), SeriesEnd::Infinity, -3).unwrap();
        assert_eq!(s.lowest, -3);
        assert_eq!(s.truncation_order(), -1);
        assert_eq!(s.coeffs, vec![int(-1), int(-1), int(-1)]);
    }

    #[test]
    fn long_division_example() {
        // (1−tx)/(1−x) = 1 + (1−t)x + (1−t)x² + …
        let f = rf("(1-t*x)/(1-x)").unwrap();
        let s = series_expand(&f, sym("x"), SeriesEnd::Zero, 2).unwrap();
        let c = rf("1-t").unwrap();
        assert_eq!(s.coeffs, vec![int(1), c.clone(), c]);
    }

    #[test]
    fn empty_window_error() {
        let f = rf("x^2/(1-x)").unwrap();
        let e = series_expand(&f, sym("x"), SeriesEnd::Zero, 1);
        assert!(matches!(e, Err(AlgError::EmptyWindow { support: 2, .. })));
    }

    #[test]
    fn laurent_input() {
        // x^{-2}/(1-x): valuation −2
        let f = &rf("1/(1-x)").unwrap() * &rf("x^-2").unwrap();
        let s = series_expand(&f, sym("x"), SeriesEnd::Zero, 0).unwrap();
        assert_eq!(s.lowest, -2);
        assert_eq!(s.coeffs, vec![int(1), int(1), int(1)]);
    }
}
