//! Structural properties of the orthogonal pair: triangularity, pairwise
//! orthogonality, duality of P against Q, the two routes to the norm
//! reciprocal, and the monomial expansion over the Q family.

use exactalg::RatFunc;
use macdonald::{
    b_norm, convert_basis, macdonald_p, macdonald_q, scalar_product, BNormMethod, Basis, SymFunc,
};
use partitions::{dominance_leq, partitions_of, partitions_up_to};

#[test]
fn p_family_is_unitriangular() {
    for n in 0..=5u32 {
        for la in partitions_of(n) {
            let p = macdonald_p(&la);
            assert!(p.coeff(&la).is_one(), "leading coefficient of P_{la}");
            for mu in p.support() {
                assert!(
                    dominance_leq(&mu, &la),
                    "P_{la} contains m_{mu} outside the dominance ideal"
                );
            }
        }
    }
}

#[test]
fn p_family_is_orthogonal() {
    for n in 0..=5u32 {
        let parts = partitions_of(n);
        for (i, la) in parts.iter().enumerate() {
            let pa = macdonald_p(la);
            for mu in &parts[i + 1..] {
                let pb = macdonald_p(mu);
                let pairing = scalar_product(&pa, &pb).unwrap();
                assert!(pairing.is_zero(), "<P_{la}, P_{mu}> should vanish");
            }
        }
    }
}

#[test]
fn p_against_q_is_kronecker() {
    for n in 0..=5u32 {
        let parts = partitions_of(n);
        for la in &parts {
            let p = macdonald_p(la);
            for mu in &parts {
                let q = macdonald_q(mu);
                let pairing = scalar_product(&p, &q).unwrap();
                if la == mu {
                    assert!(pairing.is_one(), "<P_{la}, Q_{la}> should be 1");
                } else {
                    assert!(pairing.is_zero(), "<P_{la}, Q_{mu}> should vanish");
                }
            }
        }
    }
}

#[test]
fn norm_reciprocal_routes_agree() {
    for la in partitions_up_to(5) {
        let via_pairing = b_norm(&la, BNormMethod::InnerProduct);
        let via_cells = b_norm(&la, BNormMethod::Factorized);
        assert_eq!(via_pairing, via_cells, "b_{la} computed two ways");
    }
}

#[test]
fn monomials_expand_over_q_with_transposed_coefficients() {
    // m_lambda = sum_{mu <= lambda} c_{mu,lambda} Q_mu, where c_{mu,lambda}
    // is the g-coefficient of P_mu at lambda.
    for n in 0..=4u32 {
        for la in partitions_of(n) {
            let mut acc = SymFunc::zero(Basis::M, n);
            for mu in partitions_of(n) {
                if !dominance_leq(&mu, &la) {
                    continue;
                }
                let c = convert_basis(&macdonald_p(&mu), Basis::G).coeff(&la);
                if c.is_zero() {
                    continue;
                }
                acc = acc.add(&macdonald_q(&mu).scale(&c));
            }
            let expected = convert_basis(&SymFunc::basis_element(Basis::M, la.clone()), Basis::M);
            assert_eq!(acc, expected, "monomial expansion over Q at {la}");
        }
    }
}

#[test]
fn q_normalization_matches_pairing() {
    // Q_lambda = b_lambda P_lambda, so <Q_lambda, Q_lambda> = b_lambda.
    for la in partitions_of(4) {
        let q = macdonald_q(&la);
        let self_pairing = scalar_product(&q, &q).unwrap();
        let b: RatFunc = b_norm(&la, BNormMethod::Factorized);
        assert_eq!(self_pairing, b);
    }
}
