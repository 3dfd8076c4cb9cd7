use exactalg::{parse_ratfunc, scalar, MPoly, Monomial, RatFunc, Scalar, Symbol};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn symbols() -> Vec<Symbol> {
    vec![exactalg::sym("q"), exactalg::sym("t"), exactalg::sym("x")]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..3, 3).prop_map(|es| {
        Monomial::from_factors(
            symbols()
                .into_iter()
                .zip(es)
                .map(|(s, e)| (s, e as i32))
                .collect::<Vec<_>>(),
        )
    })
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((arb_monomial(), -4i64..=4), 0..4).prop_map(|terms| {
        MPoly::from_terms(terms.into_iter().map(|(m, c)| (m, scalar(c))))
    })
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_poly(), arb_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| &RatFunc::from_mpoly(n) / &RatFunc::from_mpoly(d))
}

fn arb_point() -> impl Strategy<Value = BTreeMap<Symbol, Scalar>> {
    proptest::collection::vec((2i64..7, 1i64..5), 3).prop_map(|vals| {
        symbols()
            .into_iter()
            .zip(vals)
            .map(|(s, (n, d))| (s, exactalg::scalar_frac(n, d)))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_is_associative_and_commutative(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_is_associative_and_commutative(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_distributes(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn subtraction_inverts_addition(a in arb_ratfunc(), b in arb_ratfunc()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn division_inverts_multiplication(a in arb_ratfunc(), b in arb_ratfunc()) {
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn printed_form_round_trips(a in arb_ratfunc()) {
        let s = a.to_string();
        let back = parse_ratfunc(&s).expect("canonical print must parse");
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_commutes_with_arithmetic(a in arb_ratfunc(), b in arb_ratfunc(), pt in arb_point()) {
        // evaluating after an exact operation equals operating on the evaluations,
        // whenever neither side hits a pole
        let sum = &a + &b;
        let prod = &a * &b;
        if let (Ok(ea), Ok(eb)) = (a.eval_scalars(&pt), b.eval_scalars(&pt)) {
            if let Ok(es) = sum.eval_scalars(&pt) {
                prop_assert_eq!(es, &ea + &eb);
            }
            if let Ok(ep) = prod.eval_scalars(&pt) {
                prop_assert_eq!(ep, &ea * &eb);
            }
        }
    }
}
