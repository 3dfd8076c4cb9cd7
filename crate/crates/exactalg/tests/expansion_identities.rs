//! End-to-end checks of the expansion machinery: the gamma-factor product
//! identities as exact rational-function equalities, and reassembly of
//! delta decompositions against the two boundary expansions.

use exactalg::{
    delta_decompose, parse_ratfunc, pochhammer_lemma, pochhammer_lemma_ids, series_expand, sym,
    RatFunc, SeriesEnd,
};

#[test]
fn gamma_product_identities_up_to_five() {
    for id in pochhammer_lemma_ids() {
        for theta in 1..=5 {
            for rho in 1..=5 {
                let (lhs, rhs) = pochhammer_lemma(id, theta, rho).unwrap();
                assert_eq!(lhs, rhs, "{id} fails at theta={theta}, rho={rho}");
                if id.ends_with("tri") {
                    break; // triangular identities do not involve rho
                }
            }
        }
    }
}

#[test]
fn delta_terms_reproduce_expansion_difference() {
    let x = sym("x");
    let cases = [
        "1/(1-x)",
        "1/((1-x)*(1-p*x))",
        "(1+x)/((1-q*x)*(1-t*x))",
        "x/((1-x)*(2-x))",
    ];
    for src in cases {
        let f = parse_ratfunc(src).unwrap();
        let dec = delta_decompose(&f, x, 8).unwrap();
        // re-expand both ends and compare coefficientwise well past the
        // internal verification window
        for k in -10..=10i64 {
            let lo = coeff_at_zero(&f, k);
            let hi = coeff_at_infinity(&f, k);
            assert_eq!(&lo - &hi, dec.coeff(k), "{src} at exponent {k}");
        }
    }
}

fn coeff_at_zero(f: &RatFunc, k: i64) -> RatFunc {
    let s = series_expand(f, sym("x"), SeriesEnd::Zero, k).ok();
    s.and_then(|s| s.coeff(k).cloned()).unwrap_or_else(RatFunc::zero)
}

fn coeff_at_infinity(f: &RatFunc, k: i64) -> RatFunc {
    let s = series_expand(f, sym("x"), SeriesEnd::Infinity, k).ok();
    s.and_then(|s| s.coeff(k).cloned()).unwrap_or_else(RatFunc::zero)
}

#[test]
fn product_of_series_is_series_of_product() {
    let x = sym("x");
    let f = parse_ratfunc("1/(1-x)").unwrap();
    let g = parse_ratfunc("(1-t*x)/(1-q*x)").unwrap();
    let fg = &f * &g;
    let sf = series_expand(&f, x, SeriesEnd::Zero, 6).unwrap();
    let sg = series_expand(&g, x, SeriesEnd::Zero, 6).unwrap();
    let sfg = series_expand(&fg, x, SeriesEnd::Zero, 6).unwrap();
    for k in 0..=6i64 {
        let mut conv = RatFunc::zero();
        for j in 0..=k {
            conv += &(sf.coeff(j).unwrap() * sg.coeff(k - j).unwrap());
        }
        assert_eq!(&conv, sfg.coeff(k).unwrap(), "coefficient of x^{k}");
    }
}
