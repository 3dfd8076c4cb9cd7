use crate::error::AlgError;
use crate::monomial::Monomial;
use crate::symbol::Symbol;
use crate::Scalar;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Sparse multivariate Laurent polynomial over ℚ.
///
/// No zero coefficients are stored. Map keys use the storage order of
/// [`Monomial`]; canonical output order is computed by
/// [`MPoly::terms_print_order`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

pub(crate) fn scalar_pow(c: &Scalar, e: i32) -> Result<Scalar, AlgError> {
    if e == 0 {
        return Ok(Scalar::one());
    }
    if c.is_zero() {
        if e < 0 {
            return Err(AlgError::Domain("0 raised to a negative power".into()));
        }
        return Ok(Scalar::zero());
    }
    let p = num_traits::pow(c.clone(), e.unsigned_abs() as usize);
    Ok(if e < 0 { p.recip() } else { p })
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(s: Symbol) -> MPoly {
        MPoly::term(Monomial::var(s), Scalar::one())
    }

    pub fn var_pow(s: Symbol, e: i32) -> MPoly {
        MPoly::term(Monomial::var_pow(s, e), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, Scalar)>) -> MPoly {
        let mut p = MPoly::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Some(c) iff the polynomial is the constant c (including 0).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Some((m, c)) iff the polynomial is the single term c·m.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Scalar)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms.keys().flat_map(|m| m.symbols()).collect()
    }

    /// Max total degree over terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> i64 {
        self.terms.keys().map(|m| m.exp_of(s) as i64).max().unwrap_or(0)
    }

    pub fn min_exp_in(&self, s: Symbol) -> i64 {
        self.terms.keys().map(|m| m.exp_of(s) as i64).min().unwrap_or(0)
    }

    /// Per-symbol minimum exponent over all terms (absent = 0); dividing by
    /// it makes the polynomial exponent-nonnegative with 0 attained per symbol.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Monomial::one(),
            Some(m) => m.clone(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    pub fn mul_scalar(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn div_scalar(&self, c: &Scalar) -> MPoly {
        assert!(!c.is_zero(), "division by zero scalar");
        self.mul_scalar(&c.clone().recip())
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Terms sorted by the canonical print order.
    pub fn terms_print_order(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp_print(b.0));
        v
    }

    /// First term in print order; None for zero.
    pub fn print_first(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .min_by(|a, b| a.0.cmp_print(b.0))
    }

    /// Last term in print order (the graded-lex maximum used as the leading
    /// term for exponent-nonnegative division).
    pub fn print_max(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.cmp_print(b.0))
    }

    /// Exact division self / d; None if d does not divide self.
    /// Both arguments may be Laurent: monomial contents are stripped first.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some((dm, dc)) = d.as_monomial() {
            return Some(self.mul_monomial(&dm.inv()).div_scalar(dc));
        }
        let cs = self.monomial_content();
        let cd = d.monomial_content();
        let a = self.mul_monomial(&cs.inv());
        let b = d.mul_monomial(&cd.inv());
        let q = a.exact_div_nonneg(&b)?;
        Some(q.mul_monomial(&cs.div(&cd)))
    }

    fn exact_div_nonneg(&self, d: &MPoly) -> Option<MPoly> {
        let (dm, dc) = d.print_max().unwrap();
        let mut rem = self.clone();
        let mut q = MPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.print_max().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(dm);
            if !qm.is_nonneg() {
                return None;
            }
            let qc = rc / dc;
            q.add_term(qm.clone(), qc.clone());
            rem = &rem - &d.mul_monomial(&qm).mul_scalar(&qc);
        }
        Some(q)
    }

    /// d/ds, termwise: c·sᵉ·rest ↦ c·e·s^{e−1}·rest.
    pub fn derivative_in(&self, s: Symbol) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp_of(s);
            if e != 0 {
                out.add_term(
                    m.mul(&Monomial::var_pow(s, -1)),
                    c * Scalar::from_integer(e.into()),
                );
            }
        }
        out
    }

    /// Dense coefficient list in the variable s: returns (offset, coeffs)
    /// with coeffs[k] = coefficient polynomial of s^(offset+k).
    /// The zero polynomial yields (0, []).
    pub fn collect_univariate(&self, s: Symbol) -> (i64, Vec<MPoly>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_exp_in(s);
        let hi = self.degree_in(s);
        let mut coeffs = vec![MPoly::zero(); (hi - lo + 1) as usize];
        for (m, c) in &self.terms {
            let e = m.exp_of(s) as i64;
            let rest = m.mul(&Monomial::var_pow(s, -m.exp_of(s)));
            coeffs[(e - lo) as usize].add_term(rest, c.clone());
        }
        (lo, coeffs)
    }

    pub fn from_univariate(s: Symbol, offset: i64, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let e = offset + k as i64;
            out += &c.mul_monomial(&Monomial::var_pow(s, i32::try_from(e).expect("exponent fits i32")));
        }
        out
    }

    /// Evaluate with a total assignment of all symbols.
    pub fn eval(&self, assignment: &BTreeMap<Symbol, Scalar>) -> Result<Scalar, AlgError> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(s, e) in m.factors() {
                let x = assignment.get(&s).ok_or_else(|| {
                    AlgError::Domain(format!("unassigned symbol {s} in eval"))
                })?;
                if x.is_zero() && e < 0 {
                    return Err(AlgError::Pole {
                        assignment: format!("{s}=0"),
                    });
                }
                v *= scalar_pow(x, e)?;
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms_print_order().into_iter().enumerate() {
            let neg = c < &Scalar::zero();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let a = if neg { -c.clone() } else { c.clone() };
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
