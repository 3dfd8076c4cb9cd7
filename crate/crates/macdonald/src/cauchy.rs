//! The reproducing-kernel identity in two alphabets.
//!
//! The kernel
//!
//! ```text
//!     Pi(x, y; q, t) = prod_{i,j} (t x_i y_j; q)_infty / (x_i y_j; q)_infty
//! ```
//!
//! has the graded expansions
//!
//! ```text
//!     Pi_d = sum_{mu |- d} z_mu^{-1} prod_i (1-t^{mu_i})/(1-q^{mu_i}) p_mu(x) p_mu(y)
//!          = sum_{la |- d} m_la(x) g_la(y)
//!          = sum_{la |- d} P_la(x) Q_la(y).
//! ```
//!
//! This module evaluates all three sums as explicit polynomials in two
//! finite alphabets and compares them degree by degree. The power-sum form
//! serves as the reference; it is nothing but the exponential of the
//! defining series of the g family evaluated on products x_i y_j.

use crate::inner::z_lambda;
use crate::vars::{power_sum_poly_named, restrict_to_named_vars};
use crate::{macdonald_p, macdonald_q, Basis, SymFunc};
use exactalg::{var, RatFunc};
use partitions::{partitions_of, Partition};

fn power_sum_weight(mu: &Partition) -> RatFunc {
    let (q, t) = (var("q"), var("t"));
    let mut w = RatFunc::from_scalar(exactalg::Scalar::from_integer(1.into()) / z_lambda(mu));
    for &part in mu.parts() {
        let num = &RatFunc::one() - &t.pow(part as i64);
        let den = &RatFunc::one() - &q.pow(part as i64);
        w = &w * &(&num * &den.inv());
    }
    w
}

/// The degree-d component of the kernel in alphabets of sizes mx and my,
/// computed from the power-sum expansion.
fn kernel_component(d: u32, mx: u32, my: u32) -> RatFunc {
    let mut acc = RatFunc::zero();
    for mu in partitions_of(d) {
        let mut term = power_sum_weight(&mu);
        for &part in mu.parts() {
            let px = RatFunc::from_mpoly(power_sum_poly_named(part, mx, "x"));
            let py = RatFunc::from_mpoly(power_sum_poly_named(part, my, "y"));
            term = &term * &(&px * &py);
        }
        acc = &acc + &term;
    }
    acc
}

/// Verifies, for every degree d <= degree, that the three graded expansions
/// of the kernel agree in alphabets x1..xmx and y1..ymy. Returns the first
/// failing degree, or None when all match.
pub fn cauchy_check(degree: u32, mx: u32, my: u32) -> Option<u32> {
    for d in 0..=degree {
        let reference = kernel_component(d, mx, my);

        let mut monomial_side = RatFunc::zero();
        let mut orthogonal_side = RatFunc::zero();
        for la in partitions_of(d) {
            let m_x = restrict_to_named_vars(&SymFunc::basis_element(Basis::M, la.clone()), mx, "x");
            let g_y = restrict_to_named_vars(&SymFunc::basis_element(Basis::G, la.clone()), my, "y");
            monomial_side = &monomial_side + &(&m_x * &g_y);

            let p_x = restrict_to_named_vars(&macdonald_p(&la), mx, "x");
            let q_y = restrict_to_named_vars(&macdonald_q(&la), my, "y");
            orthogonal_side = &orthogonal_side + &(&p_x * &q_y);
        }

        if monomial_side != reference || orthogonal_side != reference {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::parse_ratfunc;

    #[test]
    fn degree_zero_component_is_one() {
        assert!(kernel_component(0, 2, 2).is_one());
    }

    #[test]
    fn degree_one_component() {
        // Pi_1 = (1-t)/(1-q) * sum_{i,j} x_i y_j.
        let got = kernel_component(1, 2, 2);
        let expected = &parse_ratfunc("(1-t)/(1-q)").unwrap()
            * &parse_ratfunc("(x1+x2)*(y1+y2)").unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn expansions_agree_in_small_alphabets() {
        assert_eq!(cauchy_check(2, 2, 2), None);
    }
}
