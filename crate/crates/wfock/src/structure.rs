//! Structure functions of operator exchange.
//!
//! Moving one vertex operator across another multiplies the pair by a scalar
//! series exp(Σ_{n>0} S(n)/n · x^n) in the ratio x of the two arguments.  The
//! whole series is determined by its log coefficient S(n), an element of the
//! mode ring.  When S is a finite sum of mode monomials Σ s·μ^n the series is
//! the expansion of the rational function Π_μ (1 - μx)^{-s}, and exchange
//! relations become statements about rational functions with simple poles.

use crate::ring::{
    exp_series, instantiate_mode, mono_decompose, ppow4, qpow, tpow, ModeMonomial,
};
use exactalg::{series_expand, sym, RatFunc, SeriesEnd};

/// A scalar exchange series exp(Σ_{n>0} S(n)/n · x^n).
///
/// `log_coeff` is S(n) in the mode ring (the universal 1/n stays implicit).
/// `product_form` lists the factors (μ, s) of Π (1 - μx)^{-s} when S(n) is
/// the finite sum Σ s μ^n; series whose log has a true mode-ring denominator
/// (infinite products) carry `None`.
#[derive(Clone, PartialEq, Debug)]
pub struct StructureFunction {
    pub log_coeff: RatFunc,
    pub product_form: Option<Vec<(ModeMonomial, i64)>>,
}

/// The named exchange series of the current algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructureKind {
    /// Ascending exchange factor (z - q^{-1}w)(z - qp^{-1}w) / ((z - w)(z - p^{-1}w)).
    GammaPlus,
    /// Descending exchange factor (z - qw)(z - q^{-1}pw) / ((z - w)(z - pw)).
    GammaMinus,
    /// Numerator half (1 - qz)(1 - t^{-1}z)(1 - p^{-1}z) of the Heisenberg weight.
    GPlus,
    /// Denominator half (1 - q^{-1}z)(1 - tz)(1 - pz) of the Heisenberg weight.
    GMinus,
    /// Full Heisenberg weight g = G⁺/G⁻.
    GRatio,
    /// Current exchange series with indices (k, l):
    /// S(n) = (1 - q^n)(1 - t^{-n})(p^{(k-1)n} - p^{(l-1)n}) / (1 - p^{ln}).
    Exchange { k: u32, l: u32 },
    /// Exchange series of the fundamental current pair, at the given level.
    CurrentExchange { level: u32 },
    /// Exchange series of the current/dual-current pair, at the given level.
    DualExchange { level: u32 },
}

impl StructureFunction {
    /// Build from a mode-ring log coefficient, attaching the product form
    /// whenever the log is a finite sum of mode monomials.
    pub fn from_log(log_coeff: RatFunc) -> StructureFunction {
        let product_form = mono_decompose(&log_coeff);
        StructureFunction { log_coeff, product_form }
    }

    /// Build from explicit product factors (μ, s) of Π (1 - μx)^{-s}.
    pub fn from_product(factors: Vec<(ModeMonomial, i64)>) -> StructureFunction {
        let log_coeff = factors.iter().fold(RatFunc::zero(), |acc, (m, s)| {
            &acc + &(&m.mode_value() * &RatFunc::from_scalar(exactalg::scalar(*s)))
        });
        StructureFunction { log_coeff, product_form: Some(factors) }
    }

    /// The series with its argument scaled by p^{s/4}: log coefficient gains
    /// a factor p^{sn/4}.
    pub fn shifted(&self, quarter_units: i64) -> StructureFunction {
        StructureFunction::from_log(&self.log_coeff * &ppow4(quarter_units))
    }

    /// The series of the reciprocal argument x ↦ 1/x, i.e. S(n) with each
    /// mode monomial inverted.
    pub fn argument_inverted(&self) -> StructureFunction {
        let inv = |f: &RatFunc| -> RatFunc {
            let assign = std::collections::BTreeMap::from([
                (sym("Qn"), exactalg::var("Qn").inv()),
                (sym("Tn"), exactalg::var("Tn").inv()),
            ]);
            f.evaluate(&assign).expect("monomial inversion cannot hit a pole")
        };
        StructureFunction::from_log(inv(&self.log_coeff))
    }

    /// The rational function Π (1 - μx)^{-s} in the half ring, with the given
    /// value substituted for x.  None when no product form exists or a factor
    /// needs odd quarter powers.
    pub fn rational_at(&self, x: &RatFunc) -> Option<RatFunc> {
        let factors = self.product_form.as_ref()?;
        let mut out = RatFunc::one();
        for (m, s) in factors {
            if m.q_exp % 2 != 0 || m.t_exp % 2 != 0 {
                return None;
            }
            let factor = &RatFunc::one() - &(&m.half_value() * x);
            out = &out * &factor.pow(-s);
        }
        Some(out)
    }

    /// First `order + 1` series coefficients (from x^0) in the half ring.
    pub fn series_coeffs(&self, order: usize) -> Vec<RatFunc> {
        let logs: Vec<RatFunc> = (1..=order as i64)
            .map(|n| instantiate_mode(&self.log_coeff, n))
            .collect();
        exp_series(&logs)
    }

    /// Does the product form expand to the same series as exp of the log?
    /// Vacuously true (None product form) only when `require_product` is off.
    pub fn exp_log_consistent(&self, order: usize) -> bool {
        let Some(rat) = self.rational_at(&exactalg::var("x")) else {
            return self.product_form.is_none();
        };
        let series = series_expand(&rat, sym("x"), SeriesEnd::Zero, order as i64)
            .expect("product forms have no pole at x = 0");
        let coeffs = self.series_coeffs(order);
        (0..=order as i64).all(|k| {
            let got = series.coeff(k).cloned().unwrap_or_else(RatFunc::zero);
            got == coeffs[k as usize]
        })
    }
}

/// The named structure series.  Level-dependent kinds fold the value
/// γ = p^{-level/2} of the central element into the log coefficient.
pub fn structure_log(kind: StructureKind) -> StructureFunction {
    let one = RatFunc::one;
    let mono = |q_exp: i64, t_exp: i64| ModeMonomial { q_exp, t_exp };
    match kind {
        StructureKind::GammaPlus => StructureFunction::from_product(vec![
            // 1 + p^{-n} - q^{-n} - t^n   (t^n = q^n p^{-n})
            (mono(0, 0), 1),
            (mono(-4, 4), 1),
            (mono(-4, 0), -1),
            (mono(0, 4), -1),
        ]),
        StructureKind::GammaMinus => StructureFunction::from_product(vec![
            // 1 + p^n - q^n - t^{-n}   (t^{-n} = q^{-n} p^n)
            (mono(0, 0), 1),
            (mono(4, -4), 1),
            (mono(4, 0), -1),
            (mono(0, -4), -1),
        ]),
        StructureKind::GPlus => StructureFunction::from_product(vec![
            // -(q^n + t^{-n} + p^{-n})
            (mono(4, 0), -1),
            (mono(0, -4), -1),
            (mono(-4, 4), -1),
        ]),
        StructureKind::GMinus => StructureFunction::from_product(vec![
            (mono(-4, 0), -1),
            (mono(0, 4), -1),
            (mono(4, -4), -1),
        ]),
        StructureKind::GRatio => StructureFunction::from_product(vec![
            (mono(4, 0), -1),
            (mono(0, -4), -1),
            (mono(-4, 4), -1),
            (mono(-4, 0), 1),
            (mono(0, 4), 1),
            (mono(4, -4), 1),
        ]),
        StructureKind::Exchange { k, l } => {
            assert!(k >= 1 && l >= 1, "exchange indices are positive");
            let num = &(&(&one() - &qpow(1)) * &(&one() - &tpow(-1)))
                * &(&ppow4(4 * (k as i64 - 1)) - &ppow4(4 * (l as i64 - 1)));
            let den = &one() - &ppow4(4 * l as i64);
            StructureFunction::from_log(num.checked_div(&den).unwrap())
        }
        StructureKind::CurrentExchange { level } => {
            // (1 - q^n)(1 - t^{-n}) (1 - p^{-n} γ^{-2n}) / (1 - γ^{-2n}),  γ^{-2n} = p^{level·n}
            let g2 = ppow4(4 * level as i64);
            let num = &(&(&one() - &qpow(1)) * &(&one() - &tpow(-1)))
                * &(&one() - &(&ppow4(-4) * &g2));
            let den = &one() - &g2;
            StructureFunction::from_log(num.checked_div(&den).unwrap())
        }
        StructureKind::DualExchange { level } => {
            // (1 - q^n)(1 - t^{-n}) (p^{-2n} - p^{-n}) γ^{-2n} / (1 - γ^{-2n})
            let g2 = ppow4(4 * level as i64);
            let num = &(&(&one() - &qpow(1)) * &(&one() - &tpow(-1)))
                * &(&(&ppow4(-8) - &ppow4(-4)) * &g2);
            let den = &one() - &g2;
            StructureFunction::from_log(num.checked_div(&den).unwrap())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_product_form_exponentiates_its_log() {
        for kind in [
            StructureKind::GammaPlus,
            StructureKind::GammaMinus,
            StructureKind::GPlus,
            StructureKind::GMinus,
            StructureKind::GRatio,
        ] {
            assert!(
                structure_log(kind).exp_log_consistent(8),
                "exp-log drift for {kind:?}"
            );
        }
    }

    #[test]
    fn weight_is_unitary_under_argument_inversion() {
        // g(1/z) = g(z)^{-1}: the log coefficients cancel
        let g = structure_log(StructureKind::GRatio);
        let sum = &g.log_coeff + &g.argument_inverted().log_coeff;
        assert!(sum.is_zero(), "g(z)·g(1/z) should have log 0, got {sum}");
    }

    #[test]
    fn weight_splits_into_its_two_halves() {
        let g = structure_log(StructureKind::GRatio);
        let plus = structure_log(StructureKind::GPlus);
        let minus = structure_log(StructureKind::GMinus);
        assert_eq!(g.log_coeff, &plus.log_coeff - &minus.log_coeff);
    }

    #[test]
    fn descending_factor_is_the_ascending_one_shifted_by_p() {
        // γ₋(x) = γ₊(px)
        let plus = structure_log(StructureKind::GammaPlus).shifted(4);
        let minus = structure_log(StructureKind::GammaMinus);
        assert_eq!(plus.log_coeff, minus.log_coeff);
    }

    #[test]
    fn current_exchange_series_reduce_to_indexed_ones() {
        for m in 2..=4u32 {
            let a = structure_log(StructureKind::CurrentExchange { level: m });
            let f1m = structure_log(StructureKind::Exchange { k: 1, l: m });
            assert_eq!(a.log_coeff, f1m.log_coeff, "fundamental exchange at level {m}");
            let b = structure_log(StructureKind::DualExchange { level: m });
            let fmm = structure_log(StructureKind::Exchange { k: m - 1, l: m });
            assert_eq!(b.log_coeff, fmm.log_coeff, "dual exchange at level {m}");
        }
    }

    #[test]
    fn coinciding_indices_give_the_trivial_series() {
        let f = structure_log(StructureKind::Exchange { k: 1, l: 1 });
        assert!(f.log_coeff.is_zero());
        assert_eq!(f.product_form, Some(Vec::new()));
    }

    #[test]
    fn exchange_series_with_distinct_indices_is_an_infinite_product() {
        let f = structure_log(StructureKind::Exchange { k: 1, l: 2 });
        assert!(f.product_form.is_none());
    }

    #[test]
    fn ascending_factor_matches_its_named_rational_form() {
        // (1 - q^{-1}x)(1 - qp^{-1}x) / ((1 - x)(1 - p^{-1}x)) in half symbols
        let got = structure_log(StructureKind::GammaPlus)
            .rational_at(&exactalg::var("x"))
            .unwrap();
        let want = exactalg::parse_ratfunc(
            "((1 - qh^-2*x)*(1 - th^2*x)) / ((1 - x)*(1 - qh^-2*th^2*x))",
        )
        .unwrap();
        assert_eq!(got, want);
    }
}
