//! The string-specialization limits: the delta property of the F family
//! and the norm/weight identities over every shape in the window.

use partitions::{partitions_of, Partition};
use shuffle::{verify_b_psi, verify_tableau_theorem};

#[test]
fn f_limits_are_delta_on_shape_pairs() {
    for n in 1..=4u32 {
        for la in partitions_of(n) {
            for mu in partitions_of(n) {
                assert!(
                    verify_tableau_theorem(&la, &mu, 211),
                    "limit of F_{mu} on the strings of {la}"
                );
            }
        }
    }
}

#[test]
fn f_limits_are_stable_across_seeds() {
    let la: Partition = "2,1".parse().unwrap();
    let mu: Partition = "3".parse().unwrap();
    for seed in [1, 2, 3] {
        assert!(verify_tableau_theorem(&la, &la, seed), "seed {seed} diagonal");
        assert!(verify_tableau_theorem(&la, &mu, seed), "seed {seed} off-diagonal");
    }
}

#[test]
fn norms_and_weights_match_over_the_window() {
    for n in 1..=4u32 {
        for la in partitions_of(n) {
            for m in la.len() as u32..=4 {
                if m == 0 {
                    continue;
                }
                let report = verify_b_psi(&la, m, 97 + u64::from(m));
                assert!(report.norm_matches, "norm limit for {la} with m={m}");
                for check in &report.checks {
                    assert!(
                        check.matches,
                        "weight of word {:?} on {la}, m={m}: {}",
                        check.word, check.detail
                    );
                }
            }
        }
    }
}
