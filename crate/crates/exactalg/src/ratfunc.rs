use crate::error::AlgError;
use crate::gcd::poly_gcd;
use crate::monomial::Monomial;
use crate::poly::{scalar_pow, MPoly};
use crate::sample::PointSampler;
use crate::symbol::Symbol;
use crate::Scalar;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Rational function num/den over ℚ in canonical form:
/// - num and den have nonnegative exponents, with per-symbol minimum 0
///   across the pair (Laurent content is cancelled);
/// - gcd(num, den) = 1;
/// - the first term of den in print order has coefficient exactly +1;
/// - num = 0 forces den = 1.
///
/// Equal functions therefore have identical representations, and `==`
/// compares components directly.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_scalar(c: Scalar) -> RatFunc {
        RatFunc {
            num: MPoly::constant(c),
            den: MPoly::one(),
        }
    }

    pub fn from_mpoly(p: MPoly) -> RatFunc {
        RatFunc::reduced(p, MPoly::one())
    }

    pub fn from_monomial(m: Monomial) -> RatFunc {
        RatFunc::reduced(MPoly::term(m, Scalar::one()), MPoly::one())
    }

    pub fn var(s: Symbol) -> RatFunc {
        RatFunc {
            num: MPoly::var(s),
            den: MPoly::one(),
        }
    }

    /// Public constructor: canonicalizes; rejects a zero denominator.
    pub fn from_num_den(num: MPoly, den: MPoly) -> Result<RatFunc, AlgError> {
        if den.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Ok(RatFunc::reduced(num, den))
    }

    /// Canonicalize num/den. Panics if den = 0 (internal paths keep den ≠ 0).
    fn reduced(num: MPoly, den: MPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        // Laurent clearing: pull the joint monomial content out of both.
        let cg = num.monomial_content().gcd(&den.monomial_content());
        let mut num = num.mul_monomial(&cg.inv());
        let mut den = den.mul_monomial(&cg.inv());
        // polynomial cancellation
        if !den.is_one() && den.as_constant().is_none() {
            let g = poly_gcd(&num, &den);
            if !g.is_one() {
                num = num.exact_div(&g).expect("gcd divides num");
                den = den.exact_div(&g).expect("gcd divides den");
            }
        }
        RatFunc::scaled(num, den)
    }

    /// Scale so den's first print-order coefficient is +1. Assumes the pair
    /// is already coprime with nonnegative exponents.
    fn scaled(num: MPoly, den: MPoly) -> RatFunc {
        let c = den.print_first().expect("den nonzero").1.clone();
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.div_scalar(&c),
                den: den.div_scalar(&c),
            }
        }
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(c) iff the function is the constant c.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s
    }

    pub fn checked_inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::scaled_pair_inverse(self))
    }

    pub fn inv(&self) -> RatFunc {
        self.checked_inv().expect("inverse of zero")
    }

    fn scaled_pair_inverse(f: &RatFunc) -> RatFunc {
        // swapping keeps coprimality and exponent ranges; only rescale
        RatFunc::scaled(f.den.clone(), f.num.clone())
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        if e == 0 {
            return RatFunc::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = RatFunc::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgError> {
        match rhs.checked_inv() {
            Some(i) => Ok(self * &i),
            None => Err(AlgError::ZeroDenominator),
        }
    }

    /// Sum many terms by balanced pairwise reduction. A left fold normalizes
    /// against the full accumulated denominator at every step; halving keeps
    /// operand sizes matched, so the expensive cancellations happen O(log n)
    /// times instead of n times.
    pub fn sum_all(terms: Vec<RatFunc>) -> RatFunc {
        let mut layer: Vec<RatFunc> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        while layer.len() > 1 {
            let mut next = Vec::with_capacity(layer.len() / 2 + 1);
            let mut it = layer.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(&a + &b),
                    None => next.push(a),
                }
            }
            layer = next;
        }
        layer.pop().unwrap_or_else(RatFunc::zero)
    }

    /// Substitute variables (a partial map) and renormalize.
    /// Fails with a pole error if the denominator vanishes.
    pub fn evaluate(&self, assignment: &BTreeMap<Symbol, RatFunc>) -> Result<RatFunc, AlgError> {
        let n = self.num.subst(assignment)?;
        let d = self.den.subst(assignment)?;
        if d.is_zero() {
            return Err(AlgError::Pole {
                assignment: fmt_assignment(assignment),
            });
        }
        Ok(&n * &d.inv())
    }

    /// Substitute scalar values (a partial map); the fast path for sampling.
    pub fn eval_scalars(&self, assignment: &BTreeMap<Symbol, Scalar>) -> Result<RatFunc, AlgError> {
        let n = subst_scalars(&self.num, assignment)?;
        let d = subst_scalars(&self.den, assignment)?;
        if d.is_zero() {
            return Err(AlgError::Pole {
                assignment: assignment
                    .iter()
                    .map(|(s, v)| format!("{s}={v}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            });
        }
        Ok(RatFunc::reduced(n, d))
    }

    /// Probabilistic equality: `trials` agreeing sample evaluations return
    /// true; any disagreeing sample triggers an exact comparison whose
    /// verdict is returned. Pole hits are resampled.
    pub fn eq_probable(
        &self,
        other: &RatFunc,
        sampler: &mut PointSampler,
        trials: usize,
    ) -> bool {
        let mut syms = self.symbols();
        syms.extend(other.symbols());
        let mut done = 0;
        let mut attempts = 0;
        while done < trials && attempts < 10 * trials + 20 {
            attempts += 1;
            let asg: BTreeMap<Symbol, Scalar> = syms
                .iter()
                .map(|&s| (s, sampler.rational()))
                .collect();
            match (self.eval_scalars(&asg), other.eval_scalars(&asg)) {
                (Ok(x), Ok(y)) => {
                    if x != y {
                        return self == other;
                    }
                    done += 1;
                }
                _ => continue,
            }
        }
        true
    }
}

fn fmt_assignment(assignment: &BTreeMap<Symbol, RatFunc>) -> String {
    assignment
        .iter()
        .map(|(s, v)| format!("{s}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Substitute scalars into a polynomial, keeping unassigned symbols.
/// Negative exponents of an assigned zero produce a pole error.
fn subst_scalars(p: &MPoly, assignment: &BTreeMap<Symbol, Scalar>) -> Result<MPoly, AlgError> {
    let mut out = MPoly::zero();
    for (m, c) in p.iter() {
        let mut coeff = c.clone();
        let mut kept: Vec<(Symbol, i32)> = Vec::new();
        for &(s, e) in m.factors() {
            match assignment.get(&s) {
                None => kept.push((s, e)),
                Some(v) => {
                    if v.is_zero() && e < 0 {
                        return Err(AlgError::Pole {
                            assignment: format!("{s}=0"),
                        });
                    }
                    coeff *= scalar_pow(v, e)?;
                }
            }
        }
        out.add_term(Monomial::from_factors(kept), coeff);
    }
    Ok(out)
}

impl MPoly {
    /// Substitute rational functions for variables (partial map).
    pub fn subst(&self, assignment: &BTreeMap<Symbol, RatFunc>) -> Result<RatFunc, AlgError> {
        // fast path: all assigned values are constants
        if assignment.values().all(|v| v.as_scalar().is_some()) {
            let scalars: BTreeMap<Symbol, Scalar> = assignment
                .iter()
                .map(|(&s, v)| (s, v.as_scalar().unwrap()))
                .collect();
            return Ok(RatFunc::from_mpoly(subst_scalars(self, &scalars)?));
        }
        let mut acc = RatFunc::zero();
        for (m, c) in self.iter() {
            let mut term = RatFunc::from_scalar(c.clone());
            let mut kept: Vec<(Symbol, i32)> = Vec::new();
            for &(s, e) in m.factors() {
                match assignment.get(&s) {
                    None => kept.push((s, e)),
                    Some(v) => {
                        if v.is_zero() && e < 0 {
                            return Err(AlgError::Pole {
                                assignment: format!("{s}=0"),
                            });
                        }
                        term = &term * &v.pow(e as i64);
                    }
                }
            }
            term = &term * &RatFunc::from_monomial(Monomial::from_factors(kept));
            acc += &term;
        }
        Ok(acc)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduced(&self.num + &rhs.num, self.den.clone());
        }
        // Henrici: with g = gcd(d1,d2), the only possible common factor of
        // (n1·d2/g + n2·d1/g) and d1·d2/g divides g.
        let g = poly_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RatFunc::scaled_after_monomial(num, den);
        }
        let d1g = self.den.exact_div(&g).unwrap();
        let d2g = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d2g) + &(&rhs.num * &d1g);
        let den = &self.den * &d2g;
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = poly_gcd(&num, &g);
        if h.is_one() {
            RatFunc::scaled_after_monomial(num, den)
        } else {
            RatFunc::scaled_after_monomial(
                num.exact_div(&h).unwrap(),
                den.exact_div(&h).unwrap(),
            )
        }
    }
}

impl RatFunc {
    /// Final cleanup for arithmetic paths that already guarantee polynomial
    /// coprimality: cancel joint monomial content, then rescale.
    pub(crate) fn scaled_after_monomial(num: MPoly, den: MPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let cg = num.monomial_content().gcd(&den.monomial_content());
        if cg.is_one() {
            RatFunc::scaled(num, den)
        } else {
            RatFunc::scaled(num.mul_monomial(&cg.inv()), den.mul_monomial(&cg.inv()))
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel before multiplying to keep operands reduced
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g1).unwrap()
        };
        let d2 = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.exact_div(&g1).unwrap()
        };
        let n2 = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.exact_div(&g2).unwrap()
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2).unwrap()
        };
        RatFunc::scaled_after_monomial(&n1 * &n2, &d1 * &d2)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv()
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> RatFunc {
        RatFunc::from_scalar(crate::scalar(n))
    }
}

/// Symbolic variable as a rational function.
pub fn var(name: &str) -> RatFunc {
    RatFunc::var(Symbol::new(name))
}

/// Integer constant.
pub fn int(n: i64) -> RatFunc {
    RatFunc::from(n)
}

/// Rational constant n/d.
pub fn frac(n: i64, d: i64) -> RatFunc {
    RatFunc::from_scalar(crate::scalar_frac(n, d))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return f.write_str("0");
        }
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // pull a global minus when every numerator coefficient is negative
        let all_neg = self.num.iter().all(|(_, c)| c < &Scalar::zero());
        let shown = if all_neg {
            f.write_str("-")?;
            -&self.num
        } else {
            self.num.clone()
        };
        if shown.num_terms() > 1 {
            write!(f, "({shown})")?;
        } else {
            write!(f, "{shown}")?;
        }
        f.write_str("/")?;
        // canonical single-term denominators are monomials with coefficient 1
        if self.den.num_terms() > 1 {
            write!(f, "({})", self.den)
        } else {
            let (m, _) = self.den.as_monomial().expect("single term");
            if m.factors().len() > 1 {
                write!(f, "({})", self.den)
            } else {
                write!(f, "{}", self.den)
            }
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Limit of f as `var` → `point` (a finite point, possibly involving other
/// symbols), by exact cancellation of (var − point) factors followed by
/// substitution. Pole after full cancellation is an error.
pub fn limit_at(f: &RatFunc, var: Symbol, point: &RatFunc) -> Result<RatFunc, AlgError> {
    let mut nc = dense_ratfunc_coeffs(f.numer(), var);
    let mut dc = dense_ratfunc_coeffs(f.denom(), var);
    loop {
        let dval = horner(&dc, point);
        if !dval.is_zero() {
            let nval = horner(&nc, point);
            return Ok(&nval * &dval.inv());
        }
        let nval = horner(&nc, point);
        if !nval.is_zero() {
            return Err(AlgError::Pole {
                assignment: format!("{var}={point}"),
            });
        }
        nc = deflate(&nc, point);
        dc = deflate(&dc, point);
    }
}

/// Limit of f as `var` → ∞, via the substitution var ↦ 1/var.
pub fn limit_at_infty(f: &RatFunc, var: Symbol) -> Result<RatFunc, AlgError> {
    let inv = RatFunc::from_monomial(Monomial::var_pow(var, -1));
    let g = f.evaluate(&BTreeMap::from([(var, inv)]))?;
    limit_at(&g, var, &RatFunc::zero())
}

/// Dense coefficients (exponent 0 upward) of p in `var`, as RatFuncs.
fn dense_ratfunc_coeffs(p: &MPoly, var: Symbol) -> Vec<RatFunc> {
    if p.is_zero() {
        return vec![RatFunc::zero()];
    }
    let (off, cs) = p.collect_univariate(var);
    assert!(off >= 0, "canonical rational functions have nonnegative exponents");
    let mut out = vec![RatFunc::zero(); off as usize];
    out.extend(cs.into_iter().map(RatFunc::from_mpoly));
    out
}

fn horner(coeffs: &[RatFunc], point: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * point) + c;
    }
    acc
}

/// Synthetic division by (var − point); the remainder must be 0.
fn deflate(coeffs: &[RatFunc], point: &RatFunc) -> Vec<RatFunc> {
    let n = coeffs.len();
    assert!(n > 1, "cannot deflate a constant");
    let mut out = vec![RatFunc::zero(); n - 1];
    let mut carry = RatFunc::zero();
    for k in (1..n).rev() {
        carry = &coeffs[k] + &(&carry * point);
        out[k - 1] = carry.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym;

    fn rf(s: &str) -> RatFunc {
        crate::parse_ratfunc(s).unwrap()
    }

    #[test]
    fn normalize_examples() {
        // common factor
        let f = &(&(&var("q") * &var("q")) - &int(1)) / &(&var("q") - &int(1));
        assert_eq!(f.to_string(), "1+q");
        // unit cancellation
        let unit = &int(1) - &(&var("q") * &var("t"));
        let f = &(&unit * &var("x")) / &unit;
        assert_eq!(f.to_string(), "x");
        // monomial content extraction: (q^2 t − q t^2)/(q t) = q − t
        let n = &MPoly::from_terms([
            (Monomial::from_factors([(sym("q"), 2), (sym("t"), 1)]), crate::scalar(1)),
            (Monomial::from_factors([(sym("q"), 1), (sym("t"), 2)]), crate::scalar(-1)),
        ]);
        let d = MPoly::term(Monomial::from_factors([(sym("q"), 1), (sym("t"), 1)]), crate::scalar(1));
        let f = RatFunc::from_num_den(n.clone(), d).unwrap();
        assert_eq!(f.to_string(), "q-t");
    }

    #[test]
    fn canonical_display() {
        let f = &(&int(1) - &var("t")) / &(&int(1) - &var("q"));
        assert_eq!(f.to_string(), "(1-t)/(1-q)");
        let g = &(-&(&var("x1") + &var("x2"))) / &(&int(1) - &var("q"));
        assert_eq!(g.to_string(), "-(x1+x2)/(1-q)");
        // scaling: den first-print coefficient +1
        // den 2q−2 rescales to 1−q (first print coefficient +1), num picks up −1/2
        let h = &var("x") / &(&(&var("q") * &int(2)) - &int(2));
        assert_eq!(h.to_string(), "-1/2*x/(1-q)");
    }

    #[test]
    fn arithmetic_and_equality() {
        let q = var("q");
        let t = var("t");
        let a = &(&int(1) - &t) / &(&int(1) - &q);
        let b = &(&int(1) - &q) / &(&int(1) - &t);
        assert!( (&a * &b).is_one() );
        let s = &a + &(-&a);
        assert!(s.is_zero());
        // 1/(1-q) + q/(1-q)... wait: 1/(1-q) - 1 = q/(1-q)
        let c = &(&int(1) / &(&int(1) - &q)) - &int(1);
        assert_eq!(c, &q / &(&int(1) - &q));
    }

    #[test]
    fn evaluate_pole() {
        let f = &int(1) / &(&int(1) - &var("x"));
        let r = f.eval_scalars(&BTreeMap::from([(sym("x"), crate::scalar(1))]));
        assert!(matches!(r, Err(AlgError::Pole { .. })));
        let ok = f
            .eval_scalars(&BTreeMap::from([(sym("x"), crate::scalar(2))]))
            .unwrap();
        assert_eq!(ok, int(-1));
    }

    #[test]
    fn limits() {
        // removable singularity
        let zeta = sym("zeta");
        let f = rf("(zeta^2-t^2)/(zeta-t)");
        let l = limit_at(&f, zeta, &var("t")).unwrap();
        assert_eq!(l, &int(2) * &var("t"));
        // genuine pole
        let g = rf("zeta/(zeta-t)");
        assert!(matches!(limit_at(&g, zeta, &var("t")), Err(AlgError::Pole { .. })));
        // constant
        let c = rf("5/7");
        assert_eq!(limit_at(&c, zeta, &var("t")).unwrap(), frac(5, 7));
        // infinity: (x+1)/x -> 1
        let h = rf("(x+1)/x");
        assert_eq!(limit_at_infty(&h, sym("x")).unwrap(), int(1));
    }

    #[test]
    fn print_parse_roundtrip() {
        for s in [
            "(1-t)/(1-q)",
            "-(x1+x2)/(1-q)",
            "q-t",
            "0",
            "1",
            "-3/2",
            "x/(q^2*t)",
            "(1/2+q^2-t^3)/(1-q*t)",
        ] {
            let f = rf(s);
            assert_eq!(f.to_string(), s, "canonical print of {s}");
            assert_eq!(rf(&f.to_string()), f, "round trip of {s}");
        }
    }

    #[test]
    fn balanced_sum_matches_fold() {
        // partial fractions summing to a closed form: sum 1/((x+k)(x+k+1))
        // telescopes to 1/x - 1/(x+n).
        let x = var("x");
        let terms: Vec<RatFunc> = (0..7)
            .map(|k| (&(&x + &int(k)) * &(&x + &int(k + 1))).inv())
            .collect();
        let folded = terms.iter().fold(RatFunc::zero(), |acc, t| &acc + t);
        let balanced = RatFunc::sum_all(terms);
        assert_eq!(balanced, folded);
        assert_eq!(balanced, &x.inv() - &(&x + &int(7)).inv());
        assert!(RatFunc::sum_all(vec![]).is_zero());
    }
}
