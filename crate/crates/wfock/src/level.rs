//! Free-field realization of the deformed current algebra at level m.
//!
//! The construction runs over m independent Heisenberg copies.  The basic
//! currents Λ_1(z), …, Λ_m(z) and their duals Λ*_i(z) are products of three
//! normal-ordered exponentials: a creation-only prefix (the α image), a
//! middle factor Λ̃_i touching slots 1..i, and an annihilation-only suffix
//! (the β image).  The composite currents are
//!
//! ```text
//!   T_i(z)  = Σ_{j_1<…<j_i} y_{j_1}…y_{j_i} :Λ_{j_1}(z) Λ_{j_2}(pz) … Λ_{j_i}(p^{i-1}z):,
//!   T*_i(z) = Σ_{j_1<…<j_i} (y_{j_1}…y_{j_i})^{-1} :Λ*_{j_1}(z) … Λ*_{j_i}(p^{-i+1}z):,
//! ```
//!
//! with p = q/t.  Slot coefficients are stored in the mode ring, so every
//! mode n is handled by a single exact computation.

use crate::oper::{OperatorSum, VertexOperator};
use crate::ring::ppow4;
use exactalg::{AlgError, RatFunc};
use itertools::Itertools;

/// 1 - t^{sign·n} in the mode ring.
fn one_minus_t(sign: i64) -> RatFunc {
    &RatFunc::one() - &crate::ring::tpow(sign)
}

/// 1 - p^{-n} in the mode ring.
fn one_minus_p_inv() -> RatFunc {
    &RatFunc::one() - &ppow4(-4)
}

/// p^{-mn/2} - p^{mn/2}, the denominator of the α and β slot coefficients.
fn central_denominator(m: u32) -> RatFunc {
    &ppow4(-2 * m as i64) - &ppow4(2 * m as i64)
}

/// Middle factor Λ̃_i: slots below i carry the creation-only tail, slot i the
/// full level-one pair, slots above i are untouched.
fn lambda_tilde(m: u32, i: u32) -> VertexOperator {
    let mut op = VertexOperator::identity(m as usize);
    for k in 1..=i {
        let slot = &mut op.slots[(k - 1) as usize];
        if k < i {
            slot.creation =
                &(&one_minus_t(-1) * &one_minus_p_inv()) * &ppow4(2 - 2 * k as i64);
        } else {
            slot.creation = &one_minus_t(-1) * &ppow4(-2 * (i as i64 - 1));
            slot.annihilation =
                &(&RatFunc::zero() - &one_minus_t(1)) * &ppow4(2 * (i as i64 - 1));
        }
    }
    op
}

/// Middle factor Λ̃*_i: slot i carries the dual level-one pair, slots above i
/// the annihilation-only tail.
fn lambda_tilde_star(m: u32, i: u32) -> VertexOperator {
    let mut op = VertexOperator::identity(m as usize);
    for k in i..=m {
        let slot = &mut op.slots[(k - 1) as usize];
        if k == i {
            slot.creation = &(&RatFunc::zero() - &one_minus_t(-1))
                * &ppow4(-2 * (m as i64 - i as i64 + 1));
            slot.annihilation =
                &one_minus_t(1) * &ppow4(2 * (m as i64 - i as i64) - 2);
        } else {
            slot.annihilation = &(&RatFunc::zero()
                - &(&one_minus_t(1) * &one_minus_p_inv()))
                * &ppow4(2 * (m as i64 - k as i64) + 2);
        }
    }
    op
}

/// Creation-only image of the generating series α(z).
fn alpha_image(m: u32) -> VertexOperator {
    let den = central_denominator(m);
    let mut op = VertexOperator::identity(m as usize);
    for k in 1..=m {
        op.slots[(k - 1) as usize].creation = (&(&one_minus_t(-1)
            * &one_minus_p_inv())
            * &ppow4(2 * (m as i64 - k as i64 + 1)))
            .checked_div(&den)
            .expect("central denominator is nonzero");
    }
    op
}

/// Annihilation-only image of the generating series β(z).
fn beta_image(m: u32) -> VertexOperator {
    let den = central_denominator(m);
    let mut op = VertexOperator::identity(m as usize);
    for k in 1..=m {
        op.slots[(k - 1) as usize].annihilation = (&(&(&RatFunc::zero()
            - &one_minus_t(1))
            * &one_minus_p_inv())
            * &ppow4(2 * (m as i64 - k as i64 + 1)))
            .checked_div(&den)
            .expect("central denominator is nonzero");
    }
    op
}

/// Annihilation-only image of the Cartan series ψ⁺(z).
fn psi_plus_image(m: u32) -> VertexOperator {
    let mut op = VertexOperator::identity(m as usize);
    for k in 1..=m {
        op.slots[(k - 1) as usize].annihilation = &(&(&RatFunc::zero()
            - &one_minus_t(1))
            * &one_minus_p_inv())
            * &ppow4(2 * (m as i64 - k as i64 + 1) - m as i64);
    }
    op
}

/// Creation-only image of the Cartan series ψ⁻(z).
fn psi_minus_image(m: u32) -> VertexOperator {
    let mut op = VertexOperator::identity(m as usize);
    for k in 1..=m {
        op.slots[(k - 1) as usize].creation = &(&one_minus_t(-1)
            * &one_minus_p_inv())
            * &ppow4(2 * (m as i64 - k as i64 + 1) - m as i64);
    }
    op
}

/// The assembled current family at a fixed level m.
pub struct LevelM {
    pub m: u32,
    lambda: Vec<VertexOperator>,
    lambda_star: Vec<VertexOperator>,
    alpha: VertexOperator,
    beta: VertexOperator,
    psi_plus: VertexOperator,
    psi_minus: VertexOperator,
}

/// Build the current family at level m ≥ 2.
pub fn build_level_m(m: u32) -> Result<LevelM, AlgError> {
    if m < 2 {
        return Err(AlgError::Domain(format!(
            "current family needs level at least 2, got {m}"
        )));
    }
    Ok(LevelM::assemble(m))
}

impl LevelM {
    fn assemble(m: u32) -> LevelM {
        let alpha = alpha_image(m);
        let beta = beta_image(m);
        // Λ_i(z) = α-image(z) Λ̃_i(z) β-image(z)
        let lambda: Vec<VertexOperator> = (1..=m)
            .map(|i| alpha.normal_product(&lambda_tilde(m, i)).normal_product(&beta))
            .collect();
        // Λ*_i(z) = α-image(p^{-1}z)^{-1} Λ̃*_i(p^{(m-2)/2}z) β-image(p^{m-1}z)^{-1}
        let lambda_star: Vec<VertexOperator> = (1..=m)
            .map(|i| {
                alpha
                    .shifted(-4)
                    .inverse()
                    .normal_product(&lambda_tilde_star(m, i).shifted(2 * (m as i64 - 2)))
                    .normal_product(&beta.shifted(4 * (m as i64 - 1)).inverse())
            })
            .collect();
        LevelM {
            m,
            lambda,
            lambda_star,
            alpha,
            beta,
            psi_plus: psi_plus_image(m),
            psi_minus: psi_minus_image(m),
        }
    }

    /// Basic current Λ_i(z), 1-based index.
    pub fn lambda(&self, i: u32) -> &VertexOperator {
        assert!(1 <= i && i <= self.m, "current index out of range");
        &self.lambda[(i - 1) as usize]
    }

    /// Dual basic current Λ*_i(z), 1-based index.
    pub fn lambda_star(&self, i: u32) -> &VertexOperator {
        assert!(1 <= i && i <= self.m, "current index out of range");
        &self.lambda_star[(i - 1) as usize]
    }

    pub fn alpha_image(&self) -> &VertexOperator {
        &self.alpha
    }

    pub fn beta_image(&self) -> &VertexOperator {
        &self.beta
    }

    pub fn psi_plus(&self) -> &VertexOperator {
        &self.psi_plus
    }

    pub fn psi_minus(&self) -> &VertexOperator {
        &self.psi_minus
    }

    /// The weight variable y_j attached to the j-th basic current.
    pub fn weight(j: u32) -> RatFunc {
        exactalg::var(&format!("y{j}"))
    }

    /// Composite current T_i(z) as a sum of normal-ordered products.
    pub fn current(&self, i: u32) -> OperatorSum {
        assert!(1 <= i && i <= self.m, "composite index out of range");
        let mut sum = OperatorSum::zero();
        for combo in (1..=self.m).combinations(i as usize) {
            let mut op = VertexOperator::identity(self.m as usize);
            for (r, &j) in combo.iter().enumerate() {
                op = op.normal_product(&self.lambda(j).shifted(4 * r as i64));
                op = op.scaled(&LevelM::weight(j));
            }
            sum.push(op);
        }
        sum
    }

    /// Composite dual current T*_i(z).
    pub fn dual_current(&self, i: u32) -> OperatorSum {
        assert!(1 <= i && i <= self.m, "composite index out of range");
        let mut sum = OperatorSum::zero();
        for combo in (1..=self.m).combinations(i as usize) {
            let mut op = VertexOperator::identity(self.m as usize);
            for (r, &j) in combo.iter().enumerate() {
                op = op.normal_product(&self.lambda_star(j).shifted(-4 * r as i64));
                op = op.scaled(&LevelM::weight(j).inv());
            }
            sum.push(op);
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{qpow, tpow};

    #[test]
    fn level_below_two_is_rejected() {
        assert!(matches!(build_level_m(1), Err(AlgError::Domain(_))));
        assert!(matches!(build_level_m(0), Err(AlgError::Domain(_))));
    }

    #[test]
    fn single_slot_family_collapses_to_scalars() {
        // With one Heisenberg copy the α and β images cancel the middle
        // factor exactly, leaving the identity.
        let fam = LevelM::assemble(1);
        assert!(fam.lambda(1).is_scalar());
        assert!(fam.lambda_star(1).is_scalar());
    }

    #[test]
    fn cartan_images_at_level_one_match_the_basic_vertex_pair() {
        // ψ±(z) at a single slot reduce to the level-one operators
        //   φ⁻: creation (1-t^{-n})(1-p^{-n})p^{n/4},
        //   φ⁺: annihilation -(1-t^n)(1-p^{-n})p^{n/4}.
        let fam = LevelM::assemble(1);
        let p_quarter = ppow4(1);
        let cre = &(&one_minus_t(-1) * &one_minus_p_inv()) * &p_quarter;
        assert_eq!(fam.psi_minus().slots[0].creation, cre);
        assert!(fam.psi_minus().slots[0].annihilation.is_zero());
        let ann = &(&(&RatFunc::zero() - &one_minus_t(1)) * &one_minus_p_inv())
            * &p_quarter;
        assert_eq!(fam.psi_plus().slots[0].annihilation, ann);
        assert!(fam.psi_plus().slots[0].creation.is_zero());
    }

    #[test]
    fn first_current_slot_coefficients_at_level_two() {
        // Λ_1 slot 1: creation (1-t^{-n})/(1+p^n), annihilation -(1-t^n)/(1+p^n)
        let fam = build_level_m(2).unwrap();
        let p_full = &qpow(1) * &tpow(-1);
        let den = &RatFunc::one() + &p_full;
        let cre = one_minus_t(-1).checked_div(&den).unwrap();
        assert_eq!(fam.lambda(1).slots[0].creation, cre);
        let ann = (&RatFunc::zero() - &one_minus_t(1)).checked_div(&den).unwrap();
        assert_eq!(fam.lambda(1).slots[0].annihilation, ann);
    }

    #[test]
    fn duals_permute_the_basic_currents_at_level_two() {
        // At m = 2 the duals coincide with the opposite basic currents:
        // Λ*_1(z) = Λ_2(z) and Λ*_2(z) = Λ_1(z).
        let fam = build_level_m(2).unwrap();
        assert_eq!(fam.lambda_star(1).slots, fam.lambda(2).slots);
        assert_eq!(fam.lambda_star(2).slots, fam.lambda(1).slots);
    }

    #[test]
    fn top_composite_current_is_the_weight_monomial() {
        for m in 2..=3u32 {
            let fam = build_level_m(m).unwrap();
            let top = fam.current(m).canonicalized();
            assert_eq!(top.terms.len(), 1, "T_m has a single term at level {m}");
            let term = &top.terms[0];
            assert!(term.is_scalar(), "T_m collapses to a scalar at level {m}");
            let want = (1..=m).fold(RatFunc::one(), |acc, j| &acc * &LevelM::weight(j));
            assert_eq!(term.prefactor, want);
        }
    }

    #[test]
    fn composite_current_term_count_is_binomial() {
        let fam = build_level_m(4).unwrap();
        assert_eq!(fam.current(2).terms.len(), 6);
        assert_eq!(fam.dual_current(3).terms.len(), 4);
    }
}
