//! Agreement of the three kernel expressions at seeded rational points,
//! across every degree and variable count in the desk-scale window.

use exactalg::{PointSampler, RatFunc};
use shuffle::{kernel_k, KernelForm};

#[test]
fn the_three_kernel_forms_agree() {
    let mut sampler = PointSampler::new(97);
    for n in 1..=3u32 {
        for m in 1..=3u32 {
            for round in 0..5 {
                let x: Vec<RatFunc> = sampler
                    .distinct_rationals(m as usize)
                    .into_iter()
                    .map(RatFunc::from_scalar)
                    .collect();
                let z: Vec<RatFunc> = sampler
                    .distinct_rationals(n as usize)
                    .into_iter()
                    .map(RatFunc::from_scalar)
                    .collect();
                let gamma = kernel_k(n, m, KernelForm::GammaSum, &x, &z).unwrap();
                let eps = kernel_k(n, m, KernelForm::EpsSum, &x, &z).unwrap();
                let qf = kernel_k(n, m, KernelForm::QfSum, &x, &z).unwrap();
                assert_eq!(gamma, eps, "gamma vs eps at n={n}, m={m}, round {round}");
                assert_eq!(eps, qf, "eps vs QF at n={n}, m={m}, round {round}");
            }
        }
    }
}

#[test]
fn kernel_values_stay_symmetric_in_both_alphabets() {
    // swapping two x's or two z's leaves every form unchanged
    let mut sampler = PointSampler::new(98);
    let x: Vec<RatFunc> = sampler
        .distinct_rationals(2)
        .into_iter()
        .map(RatFunc::from_scalar)
        .collect();
    let z: Vec<RatFunc> = sampler
        .distinct_rationals(2)
        .into_iter()
        .map(RatFunc::from_scalar)
        .collect();
    let xs = [x[1].clone(), x[0].clone()];
    let zs = [z[1].clone(), z[0].clone()];
    for form in [KernelForm::GammaSum, KernelForm::EpsSum, KernelForm::QfSum] {
        let base = kernel_k(2, 2, form, &x, &z).unwrap();
        assert_eq!(base, kernel_k(2, 2, form, &xs, &z).unwrap(), "{form:?} in x");
        assert_eq!(base, kernel_k(2, 2, form, &x, &zs).unwrap(), "{form:?} in z");
    }
}
