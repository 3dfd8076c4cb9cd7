//! The distinguished elements: agreement of the two F expansions, wheel
//! vanishing, existence of the boundary operators, and multiplicativity
//! of the transport map on elementary generators.

use exactalg::{PointSampler, RatFunc};
use partitions::{partitions_of, Partition};
use shuffle::{
    boundary_check, f_element, iota_e, routes_agree, star_eval, wheel_check_seeded, Route,
};

fn pt(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn the_two_f_expansions_agree_everywhere_sampled() {
    for n in 1..=4u32 {
        for la in partitions_of(n) {
            assert!(routes_agree(&la, 3, 101 + u64::from(n)), "shape {la}");
        }
    }
}

#[test]
fn epsilon_blocks_vanish_on_wheels() {
    use shuffle::{AElement, EpsParam};
    for n in 3..=4u32 {
        for la in partitions_of(n) {
            for param in [EpsParam::Q, EpsParam::T] {
                let e = AElement::eps_basis(&la, param);
                assert!(
                    wheel_check_seeded(&e, 2, 301),
                    "eps_{}[{la}] fails a wheel",
                    param.letter()
                );
            }
        }
    }
}

#[test]
fn f_elements_vanish_on_wheels() {
    for n in 3..=4u32 {
        for la in partitions_of(n) {
            let f = f_element(&la, Route::ViaG);
            assert!(wheel_check_seeded(&f, 2, 307), "F_{la} fails a wheel");
        }
    }
}

#[test]
fn f_elements_have_boundaries_of_every_order() {
    for n in 1..=3u32 {
        for la in partitions_of(n) {
            let f = f_element(&la, Route::ViaG);
            for k in 0..=n {
                assert!(
                    boundary_check(&f, k, 401 + u64::from(k)),
                    "order-{k} boundary of F_{la}"
                );
            }
        }
    }
}

#[test]
fn transport_of_elementary_generators_is_multiplicative() {
    // iota(e_lambda) = iota(e_{lambda_1}) * ... * iota(e_{lambda_l}): each
    // factor is a scaled one-row block, so the product equals the star of
    // the bare blocks times the product of the scales. The star is split
    // as (first l-1 rows merged) * (last row); the merge step itself is
    // certified in block_products_merge_shapes.
    use shuffle::{AElement, EpsParam};
    let mut sampler = PointSampler::new(53);
    for n in 2..=3u32 {
        for la in partitions_of(n) {
            if la.len() < 2 {
                continue;
            }
            let pts: Vec<RatFunc> = sampler
                .distinct_rationals(n as usize)
                .into_iter()
                .map(RatFunc::from_scalar)
                .collect();
            let scale = la
                .parts()
                .iter()
                .map(|&r| {
                    let row = Partition::from_parts([r]);
                    iota_e(&row).coeff(&row)
                })
                .fold(RatFunc::one(), |acc, c| &acc * &c);
            let head = Partition::from_parts(la.parts()[..la.len() - 1].to_vec());
            let tail = Partition::from_parts([la.parts()[la.len() - 1]]);
            let blocks = star_eval(
                &AElement::eps_basis(&head, EpsParam::Q),
                &AElement::eps_basis(&tail, EpsParam::Q),
                &pts,
            )
            .unwrap();
            let closed = iota_e(&la).eval(&pts).unwrap();
            assert_eq!(&scale * &blocks, closed, "shape {la}");
        }
    }
}
