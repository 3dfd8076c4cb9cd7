use partitions::{
    dominance_leq, enumerate_fillings, partitions_of, partitions_up_to, FillingFamily, Partition,
};
use std::collections::BTreeSet;

#[test]
fn word_family_counts_are_powers() {
    for la in partitions_up_to(5) {
        for m in 1..=4u32 {
            let all = enumerate_fillings(&la, m, FillingFamily::All);
            assert_eq!(
                all.len(),
                (m as usize).pow(la.size()),
                "shape ({la}) m={m}"
            );
            // duplicate-free
            let distinct: BTreeSet<Vec<u32>> = all.iter().map(|f| f.word().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
        }
    }
}

#[test]
fn families_are_nested() {
    for la in partitions_up_to(4) {
        for m in 1..=3u32 {
            let all: BTreeSet<Vec<u32>> = enumerate_fillings(&la, m, FillingFamily::All)
                .iter()
                .map(|f| f.word().to_vec())
                .collect();
            let weak: BTreeSet<Vec<u32>> = enumerate_fillings(&la, m, FillingFamily::RowWeak)
                .iter()
                .map(|f| f.word().to_vec())
                .collect();
            let semi: BTreeSet<Vec<u32>> = enumerate_fillings(&la, m, FillingFamily::Semistandard)
                .iter()
                .map(|f| f.word().to_vec())
                .collect();
            assert!(semi.is_subset(&weak), "shape ({la}) m={m}");
            assert!(weak.is_subset(&all), "shape ({la}) m={m}");
        }
    }
}

#[test]
fn conjugate_is_an_involution() {
    for la in partitions_up_to(8) {
        assert_eq!(la.conjugate().conjugate(), la);
        assert_eq!(la.conjugate().size(), la.size());
    }
}

#[test]
fn dominance_dualizes_under_conjugation() {
    for n in 0..=6u32 {
        let ps = partitions_of(n);
        for mu in &ps {
            for la in &ps {
                assert_eq!(
                    dominance_leq(mu, la),
                    dominance_leq(&la.conjugate(), &mu.conjugate()),
                    "mu=({mu}) la=({la})"
                );
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    let ps = partitions_of(6);
    for a in &ps {
        assert!(dominance_leq(a, a));
        for b in &ps {
            if dominance_leq(a, b) && dominance_leq(b, a) {
                assert_eq!(a, b);
            }
            for c in &ps {
                if dominance_leq(a, b) && dominance_leq(b, c) {
                    assert!(dominance_leq(a, c));
                }
            }
        }
    }
}

#[test]
fn arm_leg_covers_exactly_the_diagram() {
    for la in partitions_up_to(6) {
        let mut count = 0;
        for i in 1..=(la.len() + 1) {
            for j in 1..=(la.part(1) as usize + 1) {
                match la.arm_leg(i, j) {
                    Ok((a, l)) => {
                        count += 1;
                        // arm counts boxes strictly right, leg strictly below
                        assert_eq!(a, la.part(i) - j as u32);
                        assert_eq!(l, la.conjugate().part(j) - i as u32);
                    }
                    Err(_) => {
                        assert!(j > la.part(i) as usize, "({i},{j}) in ({la})");
                    }
                }
            }
        }
        assert_eq!(count, la.size() as usize);
    }
}

#[test]
fn semistandard_counts_single_column_and_row() {
    // columns: strictly increasing entries, C(m, ℓ) fillings; rows: weakly
    // increasing entries, C(m+k−1, k) fillings
    let binom = |n: u32, k: u32| -> usize {
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) as usize / (i + 1) as usize;
        }
        r
    };
    for m in 1..=4u32 {
        for k in 1..=3u32 {
            let col = Partition::from_parts(vec![1; k as usize]);
            let expected_col = if k <= m { binom(m, k) } else { 0 };
            assert_eq!(
                enumerate_fillings(&col, m, FillingFamily::Semistandard).len(),
                expected_col
            );
            let row = Partition::from_parts(vec![k]);
            assert_eq!(
                enumerate_fillings(&row, m, FillingFamily::Semistandard).len(),
                binom(m + k - 1, k)
            );
        }
    }
}
