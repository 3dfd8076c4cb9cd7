//! Evaluation in finitely many variables.
//!
//! A degree-n symmetric function becomes a concrete polynomial in
//! x1, .., xm by expanding each monomial symmetric function as its orbit
//! sum. Shapes with more rows than variables contribute nothing.

use crate::{convert_basis, Basis, SymFunc};
use exactalg::{sym, MPoly, Monomial, RatFunc};
use partitions::Partition;

fn named_var(prefix: &str, i: usize) -> exactalg::Symbol {
    sym(&format!("{prefix}{i}"))
}

/// The orbit sum m_lambda(x1..xm): one monomial per distinct rearrangement
/// of the parts of lambda padded with zeros to length m.
pub fn monomial_sym_poly(lambda: &Partition, m: u32) -> MPoly {
    monomial_sym_poly_named(lambda, m, "x")
}

pub(crate) fn monomial_sym_poly_named(lambda: &Partition, m: u32, prefix: &str) -> MPoly {
    let m = m as usize;
    if lambda.len() > m {
        return MPoly::zero();
    }
    let mut padded: Vec<u32> = lambda.parts().to_vec();
    padded.resize(m, 0);

    // Starting from the sorted vector, the next-permutation stepper visits
    // each distinct rearrangement of the multiset exactly once.
    let mut acc = MPoly::zero();
    let mut perm = padded.clone();
    perm.sort_unstable();
    loop {
        let mono = Monomial::from_factors(
            perm.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (named_var(prefix, i + 1), e as i32)),
        );
        acc = &acc + &MPoly::term(mono, exactalg::Scalar::from_integer(1.into()));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

/// Advances `v` to the lexicographically next permutation; false at the end.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The power sum p_k(x1..xm).
pub fn power_sum_poly(k: u32, m: u32) -> MPoly {
    power_sum_poly_named(k, m, "x")
}

pub(crate) fn power_sum_poly_named(k: u32, m: u32, prefix: &str) -> MPoly {
    let mut acc = MPoly::zero();
    for i in 1..=m as usize {
        acc = &acc + &MPoly::var_pow(named_var(prefix, i), k as i32);
    }
    acc
}

/// Expands a symmetric function as a polynomial in x1..xm with coefficients
/// in Q(q, t).
pub fn restrict_to_vars(f: &SymFunc, m: u32) -> RatFunc {
    restrict_to_named_vars(f, m, "x")
}

pub(crate) fn restrict_to_named_vars(f: &SymFunc, m: u32, prefix: &str) -> RatFunc {
    let in_m = convert_basis(f, Basis::M);
    let mut acc = RatFunc::zero();
    for (lambda, c) in in_m.iter() {
        let orbit = monomial_sym_poly_named(lambda, m, prefix);
        if orbit.is_zero() {
            continue;
        }
        acc = &acc + &(c * &RatFunc::from_mpoly(orbit));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::parse_ratfunc;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn orbit_sums_in_three_variables() {
        let m21 = monomial_sym_poly(&pt("2,1"), 3);
        // Six ordered choices of (square, single) among three variables.
        assert_eq!(m21.num_terms(), 6);
        let m11 = monomial_sym_poly(&pt("1,1"), 3);
        assert_eq!(m11.num_terms(), 3);
        assert!(monomial_sym_poly(&pt("1,1,1,1"), 3).is_zero());
    }

    #[test]
    fn power_sums_expand_to_diagonal_sums() {
        let p2 = power_sum_poly(2, 2);
        assert_eq!(
            RatFunc::from_mpoly(p2),
            parse_ratfunc("x1^2+x2^2").unwrap()
        );
    }

    #[test]
    fn restriction_agrees_with_hand_expansion() {
        // e_2 in three variables is the sum of the three products of pairs.
        let e2 = SymFunc::basis_element(Basis::E, pt("2"));
        assert_eq!(
            restrict_to_vars(&e2, 3),
            parse_ratfunc("x1*x2+x1*x3+x2*x3").unwrap()
        );
        // p_2 restricted must agree with the direct power sum.
        let p2 = SymFunc::basis_element(Basis::P, pt("2"));
        assert_eq!(
            restrict_to_vars(&p2, 4),
            RatFunc::from_mpoly(power_sum_poly(2, 4))
        );
    }

    #[test]
    fn permutation_stepper_counts_orbits() {
        let mut v = vec![0, 1, 1];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 3);
    }
}
