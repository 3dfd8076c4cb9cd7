//! Finite q-Pochhammer products and the gamma-factor product identities.
//!
//! (u; base)_n = ∏_{i=1}^{n} (1 − u·base^{i−1}), together with six closed
//! forms for products of the coupling factors
//!
//! ```text
//! γ₊(z,w) = (z − q^{-1}w)(z − q t^{-1}w) / ((z − w)(z − t^{-1}w)),
//! γ₋(z,w) = (z − q w)(z − q^{-1}t w) / ((z − w)(z − t w)),
//! ```
//!
//! over triangular index sets {1 ≤ i < j ≤ θ} and rectangles {1..θ}×{1..ρ}
//! with geometrically shifted arguments (q^{-i}z, q^{-j}w). Each identity is
//! exposed as an (lhs, rhs) pair of rational functions in (z, w, q, t) so
//! callers can assert exact equality.
//!
//! Every factor on either side is a binomial z − c·w with monomial c, so the
//! products are assembled as factor multisets: telescoping cancellation is an
//! exact multiset operation and no polynomial gcd is ever needed.

use crate::error::AlgError;
use crate::monomial::Monomial;
use crate::poly::MPoly;
use crate::ratfunc::RatFunc;
use crate::scalar;
use crate::symbol::{sym, Symbol};
use std::collections::BTreeMap;

/// (u; base)_n = ∏_{i=1}^{n} (1 − u·base^{i−1}); n must be ≥ 0.
pub fn pochhammer(u: &RatFunc, n: i64, base: &RatFunc) -> Result<RatFunc, AlgError> {
    if n < 0 {
        return Err(AlgError::Domain(format!(
            "pochhammer length must be nonnegative, got {n}"
        )));
    }
    let one = RatFunc::one();
    let mut shift = u.clone();
    let mut out = RatFunc::one();
    for _ in 0..n {
        out = &out * &(&one - &shift);
        shift = &shift * base;
    }
    Ok(out)
}

/// Which way a Pochhammer argument couples the two series variables.
#[derive(Clone, Copy)]
enum Orient {
    /// u = c·w/z, so 1 − u·q^{i−1} = (z − c q^{i−1} w)/z
    WOverZ,
    /// u = c·z/w, so 1 − u·q^{i−1} = −c q^{i−1}·(z − c^{-1}q^{1−i} w)/w
    ZOverW,
}

/// A product of binomial factors (z − c·w), c a Laurent monomial in q and t,
/// with an overall signed monomial prefactor. Factors shared by numerator
/// and denominator cancel exactly on insertion.
struct BinomialProduct {
    z: Symbol,
    w: Symbol,
    negative: bool,
    scale: Monomial,
    num: BTreeMap<Monomial, u32>,
    den: BTreeMap<Monomial, u32>,
}

impl BinomialProduct {
    fn one() -> BinomialProduct {
        BinomialProduct {
            z: sym("z"),
            w: sym("w"),
            negative: false,
            scale: Monomial::one(),
            num: BTreeMap::new(),
            den: BTreeMap::new(),
        }
    }

    /// Multiply by (z − c·w) in the numerator (or denominator).
    fn push(&mut self, c: Monomial, to_num: bool) {
        let (mine, other) = if to_num {
            (&mut self.num, &mut self.den)
        } else {
            (&mut self.den, &mut self.num)
        };
        if let Some(m) = other.get_mut(&c) {
            *m -= 1;
            if *m == 0 {
                other.remove(&c);
            }
        } else {
            *mine.entry(c).or_insert(0) += 1;
        }
    }

    /// Multiply the whole product by ±m or its inverse.
    fn push_scale(&mut self, m: Monomial, negative: bool, to_num: bool) {
        self.negative ^= negative;
        self.scale = if to_num {
            self.scale.mul(&m)
        } else {
            self.scale.mul(&m.inv())
        };
    }

    /// Multiply by (c0·v; q)_n where v is w/z or z/w by orientation.
    fn poch(&mut self, c0: Monomial, orient: Orient, n: i64, to_num: bool) {
        let q = Monomial::var_pow(sym("q"), 1);
        let mut c = c0;
        for _ in 0..n {
            match orient {
                Orient::WOverZ => {
                    self.push(c.clone(), to_num);
                    self.push_scale(Monomial::var_pow(self.z, 1), false, !to_num);
                }
                Orient::ZOverW => {
                    self.push(c.inv(), to_num);
                    self.push_scale(c.clone(), true, to_num);
                    self.push_scale(Monomial::var_pow(self.w, 1), false, !to_num);
                }
            }
            c = c.mul(&q);
        }
    }

    /// Multiply by γ₊ or γ₋ at arguments (q^{-l}z, q^{-k}w); the common
    /// q^{-l} in each of the four factors cancels between num and den.
    fn gamma(&mut self, plus: bool, l: i64, k: i64) {
        let d = (l - k) as i32;
        let qt = |a: i32, b: i32| Monomial::from_factors([(sym("q"), a), (sym("t"), b)]);
        let (n1, n2, d1, d2) = if plus {
            (qt(d - 1, 0), qt(d + 1, -1), qt(d, 0), qt(d, -1))
        } else {
            (qt(d + 1, 0), qt(d - 1, 1), qt(d, 0), qt(d, 1))
        };
        self.push(n1, true);
        self.push(n2, true);
        self.push(d1, false);
        self.push(d2, false);
    }

    fn side_poly(&self, side: &BTreeMap<Monomial, u32>) -> MPoly {
        let z = MPoly::var(self.z);
        let mut p = MPoly::one();
        for (c, &mult) in side {
            let f = &z - &MPoly::term(c.mul(&Monomial::var_pow(self.w, 1)), scalar(1));
            for _ in 0..mult {
                p = &p * &f;
            }
        }
        p
    }

    fn into_ratfunc(self) -> RatFunc {
        let sign = if self.negative { scalar(-1) } else { scalar(1) };
        let num = self.side_poly(&self.num).mul_monomial(&self.scale);
        let den = self.side_poly(&self.den);
        // distinct binomials are pairwise coprime, so no gcd pass is needed
        RatFunc::scaled_after_monomial(num.mul_scalar(&sign), den)
    }
}

/// Identifiers of the six product identities: triangular index set or
/// rectangular index set (two equivalent closed forms each) for each sign.
pub fn pochhammer_lemma_ids() -> [&'static str; 6] {
    [
        "gamma-plus-tri",
        "gamma-minus-tri",
        "gamma-plus-rect-1",
        "gamma-plus-rect-2",
        "gamma-minus-rect-1",
        "gamma-minus-rect-2",
    ]
}

/// Both sides of the named product identity, as exact rational functions in
/// (z, w, q, t). `rho` is ignored by the triangular identities.
pub fn pochhammer_lemma(id: &str, theta: i64, rho: i64) -> Result<(RatFunc, RatFunc), AlgError> {
    if theta < 0 || rho < 0 {
        return Err(AlgError::Domain(format!(
            "product bounds must be nonnegative, got theta={theta}, rho={rho}"
        )));
    }
    let qt = |a: i32, b: i32| Monomial::from_factors([(sym("q"), a), (sym("t"), b)]);
    let th = theta as i32;
    let rh = rho as i32;

    let tri_lhs = |plus: bool| {
        let mut p = BinomialProduct::one();
        for i in 1..=theta {
            for j in (i + 1)..=theta {
                p.gamma(plus, i, j);
            }
        }
        p.into_ratfunc()
    };
    let rect_lhs = |plus: bool| {
        let mut p = BinomialProduct::one();
        for l in 1..=theta {
            for k in 1..=rho {
                p.gamma(plus, l, k);
            }
        }
        p.into_ratfunc()
    };

    let pair = match id {
        "gamma-plus-tri" => {
            let mut r = BinomialProduct::one();
            for _ in 0..theta {
                r.poch(qt(0, 1), Orient::ZOverW, 1, true); // (1 − t·z/w)
                r.poch(qt(1, 0), Orient::ZOverW, 1, false); // (1 − q·z/w)
            }
            r.poch(qt(1, 0), Orient::ZOverW, theta, true);
            r.poch(qt(0, 1), Orient::ZOverW, theta, false);
            (tri_lhs(true), r.into_ratfunc())
        }
        "gamma-minus-tri" => {
            let mut r = BinomialProduct::one();
            for _ in 0..theta {
                r.poch(qt(0, 0), Orient::ZOverW, 1, true); // (1 − z/w)
                r.poch(qt(1, -1), Orient::ZOverW, 1, false); // (1 − q t^{-1} z/w)
            }
            r.poch(qt(1, -1), Orient::ZOverW, theta, true);
            r.poch(qt(0, 0), Orient::ZOverW, theta, false);
            (tri_lhs(false), r.into_ratfunc())
        }
        "gamma-plus-rect-1" => {
            let mut r = BinomialProduct::one();
            r.poch(qt(-rh, 0), Orient::WOverZ, theta, true);
            r.poch(qt(0, 0), Orient::WOverZ, theta, false);
            r.poch(qt(1, -1), Orient::WOverZ, theta, true);
            r.poch(qt(1 - rh, -1), Orient::WOverZ, theta, false);
            (rect_lhs(true), r.into_ratfunc())
        }
        "gamma-plus-rect-2" => {
            let mut r = BinomialProduct::one();
            r.poch(qt(rh - th + 1, 0), Orient::ZOverW, theta, true);
            r.poch(qt(1 - th, 0), Orient::ZOverW, theta, false);
            r.poch(qt(-th, 1), Orient::ZOverW, theta, true);
            r.poch(qt(rh - th, 1), Orient::ZOverW, theta, false);
            (rect_lhs(true), r.into_ratfunc())
        }
        "gamma-minus-rect-1" => {
            let mut r = BinomialProduct::one();
            r.poch(qt(1, 0), Orient::WOverZ, theta, true);
            r.poch(qt(1 - rh, 0), Orient::WOverZ, theta, false);
            r.poch(qt(-rh, 1), Orient::WOverZ, theta, true);
            r.poch(qt(0, 1), Orient::WOverZ, theta, false);
            (rect_lhs(false), r.into_ratfunc())
        }
        "gamma-minus-rect-2" => {
            let mut r = BinomialProduct::one();
            r.poch(qt(-th, 0), Orient::ZOverW, theta, true);
            r.poch(qt(rh - th, 0), Orient::ZOverW, theta, false);
            r.poch(qt(rh - th + 1, -1), Orient::ZOverW, theta, true);
            r.poch(qt(1 - th, -1), Orient::ZOverW, theta, false);
            (rect_lhs(false), r.into_ratfunc())
        }
        other => {
            return Err(AlgError::Domain(format!(
                "unknown product identity id {other:?}"
            )))
        }
    };
    Ok(pair)
}
