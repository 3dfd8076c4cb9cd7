//! Coefficient rings for mode expansions.
//!
//! Everything a boson mode carries is a Laurent "monomial function" of the
//! mode number n: products of q^n, t^n and quarter powers p^{n/4} of
//! p := q/t.  We encode these as honest rational functions in two symbols,
//!
//! ```text
//! Qn := q^{n/4},    Tn := t^{n/4},
//! ```
//!
//! so q^n = Qn^4, t^{-n} = Tn^{-4}, p^{n/4} = Qn/Tn.  This "mode ring" keeps
//! the dependence on n exact and lets formal denominators such as
//! p^{-mn/2} - p^{mn/2} cancel by ordinary rational arithmetic.
//!
//! When a mode coefficient is instantiated at a concrete n (series
//! truncations) or a structure function is rebuilt as a rational function of
//! its expansion variable, we land in the "half ring" with symbols
//!
//! ```text
//! qh := q^{1/2},    th := t^{1/2}.
//! ```
//!
//! Half powers suffice for every instantiated quantity here because all slot
//! coefficients carry even quarter-power shifts.

use exactalg::{var, MPoly, Monomial, RatFunc, Scalar};
use num_traits::{One, Signed, ToPrimitive};

/// q^{kn} in the mode ring.
pub(crate) fn qpow(k: i64) -> RatFunc {
    var("Qn").pow(4 * k)
}

/// t^{kn} in the mode ring.
pub(crate) fn tpow(k: i64) -> RatFunc {
    var("Tn").pow(4 * k)
}

/// p^{sn/4} in the mode ring (s counts quarter-power units of p = q/t).
pub(crate) fn ppow4(s: i64) -> RatFunc {
    &var("Qn").pow(s) * &var("Tn").pow(-s)
}

/// Commutator weight (1 - q^n)/(1 - t^n) of the deformed Heisenberg pairing
/// [a_n, a_{-n}] = n (1 - q^n)/(1 - t^n).
pub(crate) fn bracket() -> RatFunc {
    (&RatFunc::one() - &qpow(1)).checked_div(&(&RatFunc::one() - &tpow(1))).unwrap()
}

/// q^{k/2} in the half ring.
pub(crate) fn qh(k: i64) -> RatFunc {
    var("qh").pow(k)
}

/// t^{k/2} in the half ring.
pub(crate) fn th(k: i64) -> RatFunc {
    var("th").pow(k)
}

/// p^{e/2} in the half ring.
pub(crate) fn p_half(e: i64) -> RatFunc {
    &qh(e) * &th(-e)
}

/// One factor Qn^a Tn^b of a mode-ring Laurent polynomial, with an integer
/// multiplicity; the building block of product forms Π (1 - μ x)^{±1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModeMonomial {
    pub q_exp: i64,
    pub t_exp: i64,
}

impl ModeMonomial {
    /// The monomial evaluated per mode, i.e. Qn^a Tn^b as a mode-ring value.
    pub fn mode_value(&self) -> RatFunc {
        &var("Qn").pow(self.q_exp) * &var("Tn").pow(self.t_exp)
    }

    /// The monomial at n = 1 in the half ring: q^{a/4} t^{b/4} = qh^{a/2} th^{b/2}.
    /// Requires even exponents; odd quarter powers never reach this point.
    pub fn half_value(&self) -> RatFunc {
        assert!(
            self.q_exp % 2 == 0 && self.t_exp % 2 == 0,
            "monomial q^{}/4 t^{}/4 is not expressible with half powers",
            self.q_exp,
            self.t_exp
        );
        &qh(self.q_exp / 2) * &th(self.t_exp / 2)
    }

    /// Is this μ = 1?
    pub fn is_one(&self) -> bool {
        self.q_exp == 0 && self.t_exp == 0
    }
}

/// Write a mode-ring Laurent polynomial as Σ s · Qn^a Tn^b with integer s.
/// Returns None when the value has a genuine (non-monomial) denominator or
/// non-integer coefficients — that is, when it is not a finite sum of mode
/// monomials.
pub fn mono_decompose(f: &RatFunc) -> Option<Vec<(ModeMonomial, i64)>> {
    if f.is_zero() {
        return Some(Vec::new());
    }
    let (dm, dc) = f.denom().as_monomial()?;
    let mut out = Vec::new();
    for (m, c) in f.numer().iter() {
        let ratio = m.div(dm);
        let mut q_exp = 0i64;
        let mut t_exp = 0i64;
        for &(s, e) in ratio.factors() {
            if s == exactalg::sym("Qn") {
                q_exp = e as i64;
            } else if s == exactalg::sym("Tn") {
                t_exp = e as i64;
            } else {
                return None;
            }
        }
        let coeff = c / dc;
        if !coeff.denom().is_one() {
            return None;
        }
        let s = coeff.numer().to_i64()?;
        out.push((ModeMonomial { q_exp, t_exp }, s));
    }
    Some(out)
}

/// Instantiate a mode-ring value at the concrete mode number n, landing in
/// the half ring: Qn^a ↦ qh^{an/2}, Tn^b ↦ th^{bn/2}.
pub fn instantiate_mode(f: &RatFunc, n: i64) -> RatFunc {
    assert!(n >= 1, "mode numbers are positive");
    let map_poly = |p: &MPoly| -> MPoly {
        MPoly::from_terms(p.iter().map(|(m, c)| {
            let mut qe = 0i64;
            let mut te = 0i64;
            for &(s, e) in m.factors() {
                if s == exactalg::sym("Qn") {
                    qe = e as i64;
                } else if s == exactalg::sym("Tn") {
                    te = e as i64;
                } else {
                    panic!("mode-ring value mentions foreign symbol {s}");
                }
            }
            assert!(
                (qe * n) % 2 == 0 && (te * n) % 2 == 0,
                "mode value needs quarter powers at n = {n}"
            );
            let mono = Monomial::from_factors([
                (exactalg::sym("qh"), (qe * n / 2) as i32),
                (exactalg::sym("th"), (te * n / 2) as i32),
            ]);
            (mono, c.clone())
        }))
    };
    RatFunc::from_num_den(map_poly(f.numer()), map_poly(f.denom()))
        .expect("denominator stays nonzero under monomial substitution")
}

/// Render a half-ring value using whole symbols q, t when every half power
/// is even, falling back to the raw qh/th form otherwise.
pub fn half_display(f: &RatFunc) -> String {
    let all_even = f
        .numer()
        .iter()
        .chain(f.denom().iter())
        .all(|(m, _)| m.factors().iter().all(|&(_, e)| e % 2 == 0));
    if !all_even {
        return f.to_string();
    }
    let map_poly = |p: &MPoly| -> MPoly {
        MPoly::from_terms(p.iter().map(|(m, c)| {
            let mono = Monomial::from_factors(
                m.factors().iter().map(|&(s, e)| {
                    let whole = if s == exactalg::sym("qh") {
                        exactalg::sym("q")
                    } else if s == exactalg::sym("th") {
                        exactalg::sym("t")
                    } else {
                        s
                    };
                    (whole, e / 2)
                }),
            );
            (mono, c.clone())
        }))
    };
    RatFunc::from_num_den(map_poly(f.numer()), map_poly(f.denom()))
        .expect("monomial relabeling keeps the denominator nonzero")
        .to_string()
}

/// Exponential of a log series: given the values S(1), …, S(N) of the log
/// coefficient (universal 1/n implicit), return the series coefficients
/// f_0, …, f_N of exp(Σ_{n≥1} S(n)/n · x^n).
pub fn exp_series(log_values: &[RatFunc]) -> Vec<RatFunc> {
    let n = log_values.len();
    let mut f = Vec::with_capacity(n + 1);
    f.push(RatFunc::one());
    for j in 1..=n {
        // j·f_j = Σ_{k=1}^{j} S(k) f_{j-k}, the derivative recurrence for exp
        let mut s = RatFunc::zero();
        for k in 1..=j {
            s += &(&log_values[k - 1] * &f[j - k]);
        }
        let inv_j = RatFunc::from_scalar(Scalar::new(1.into(), (j as i64).into()));
        f.push(&s * &inv_j);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::parse_ratfunc as rf;

    #[test]
    fn mode_monomials_multiply_cleanly() {
        // p^{n/4}·p^{n/4} = p^{n/2} and q^n·t^{-n} = p^n
        assert_eq!(&ppow4(1) * &ppow4(1), ppow4(2));
        assert_eq!(&qpow(1) * &tpow(-1), ppow4(4));
    }

    #[test]
    fn decompose_recovers_a_laurent_polynomial() {
        // 1 - q^n t^{-n} + 2 p^{-n/2}
        let f = &(&RatFunc::one() - &ppow4(4)) + &(&ppow4(-2) * &rf("2").unwrap());
        let terms = mono_decompose(&f).unwrap();
        assert_eq!(terms.len(), 3);
        let total: RatFunc = terms.iter().fold(RatFunc::zero(), |acc, (m, s)| {
            &acc + &(&m.mode_value() * &rf(&s.to_string()).unwrap())
        });
        assert_eq!(total, f);
    }

    #[test]
    fn decompose_rejects_true_denominators() {
        let f = (&RatFunc::one() - &qpow(1)).inv();
        assert!(mono_decompose(&f).is_none());
    }

    #[test]
    fn instantiation_squares_the_half_symbols() {
        // q^n at n = 3 is qh^6
        assert_eq!(instantiate_mode(&qpow(1), 3), qh(6));
        // p^{n/2} at n = 3 is qh^3 th^-3
        assert_eq!(instantiate_mode(&ppow4(2), 3), p_half(3));
    }

    #[test]
    fn display_prefers_whole_powers() {
        let f = &(&RatFunc::one() - &qh(2)) * &th(-2);
        assert_eq!(half_display(&f), "(1-q)/t");
        assert_eq!(half_display(&qh(1)), "qh");
    }

    #[test]
    fn exp_series_matches_a_geometric_log() {
        // exp(Σ x^n/n) = 1/(1-x): S(n) = 1
        let coeffs = exp_series(&vec![RatFunc::one(); 5]);
        for c in &coeffs {
            assert_eq!(*c, RatFunc::one());
        }
    }
}
