//! The symmetrized product against a brute-force oracle, plus its algebra
//! laws at seeded points. The oracle averages over every permutation of
//! the combined point tuple, so it exercises none of the coset grouping
//! or factorial bookkeeping of the fast path.

use exactalg::{frac, var, PointSampler, RatFunc};
use itertools::Itertools;
use partitions::Partition;
use shuffle::{omega_eval, star_eval, AElement, EpsParam};

fn pt(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sample_points(sampler: &mut PointSampler, k: usize) -> Vec<RatFunc> {
    sampler
        .distinct_rationals(k)
        .into_iter()
        .map(RatFunc::from_scalar)
        .collect()
}

/// (f*g) at fixed points as the full permutation average
/// 1/(m+n)! sum_sigma f(x_sigma(1..m)) g(x_sigma(m+1..)) prod omega.
fn star_by_permutations(f: &AElement, g: &AElement, pts: &[RatFunc]) -> RatFunc {
    let m = f.arity() as usize;
    let n = g.arity() as usize;
    assert_eq!(pts.len(), m + n);
    let q1 = var("q").inv();
    let q2 = var("t");
    let q3 = &var("q") * &var("t").inv();
    let mut terms = Vec::new();
    for perm in (0..m + n).permutations(m + n) {
        let left: Vec<RatFunc> = perm[..m].iter().map(|&i| pts[i].clone()).collect();
        let right: Vec<RatFunc> = perm[m..].iter().map(|&i| pts[i].clone()).collect();
        let mut term = &f.eval(&left).unwrap() * &g.eval(&right).unwrap();
        for &a in &perm[..m] {
            for &b in &perm[m..] {
                term = &term * &omega_eval(&pts[a], &pts[b], &q1, &q2, &q3).unwrap();
            }
        }
        terms.push(term);
    }
    let count: i64 = (1..=(m + n) as i64).product();
    &RatFunc::sum_all(terms) * &frac(1, count)
}

/// The product of two basis blocks is the block of the merged shape.
fn merged(a: &Partition, b: &Partition, param: EpsParam) -> AElement {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    AElement::eps_basis(&Partition::from_parts(parts), param)
}

#[test]
fn coset_formula_matches_the_permutation_average() {
    let mut sampler = PointSampler::new(41);
    let cases = [
        ("1", EpsParam::Q, "1", EpsParam::Q),
        ("2", EpsParam::Q, "1", EpsParam::Q),
        ("2", EpsParam::T, "2", EpsParam::T),
        ("1", EpsParam::Q, "2", EpsParam::T),
        ("2,1", EpsParam::T, "2", EpsParam::T),
    ];
    for (a, pa, b, pb) in cases {
        let f = AElement::eps_basis(&pt(a), pa);
        let g = AElement::eps_basis(&pt(b), pb);
        let pts = sample_points(&mut sampler, (f.arity() + g.arity()) as usize);
        let fast = star_eval(&f, &g, &pts).unwrap();
        let slow = star_by_permutations(&f, &g, &pts);
        assert_eq!(fast, slow, "eps[{a}; {pa}] * eps[{b}; {pb}]");
    }
}

#[test]
fn star_is_commutative_at_seeded_points() {
    let mut sampler = PointSampler::new(42);
    let cases = [
        ("1", "1,1"),
        ("2", "2"),
        ("2,1", "1,1"),
        ("3", "2"),
        ("2,2", "1"),
    ];
    for (a, b) in cases {
        let f = AElement::eps_basis(&pt(a), EpsParam::Q);
        let g = AElement::eps_basis(&pt(b), EpsParam::Q);
        let pts = sample_points(&mut sampler, (f.arity() + g.arity()) as usize);
        let fg = star_eval(&f, &g, &pts).unwrap();
        let gf = star_eval(&g, &f, &pts).unwrap();
        assert_eq!(fg, gf, "blocks {a} and {b}");
    }
}

#[test]
fn block_products_merge_shapes() {
    // eps_a * eps_b = eps_{a union b}: the defining recursion of the
    // multi-part blocks, reproduced through the standalone product.
    let mut sampler = PointSampler::new(43);
    for (a, b) in [("1", "1"), ("2", "1"), ("2", "2"), ("3", "2"), ("2,1", "1,1")] {
        let f = AElement::eps_basis(&pt(a), EpsParam::T);
        let g = AElement::eps_basis(&pt(b), EpsParam::T);
        let whole = merged(&pt(a), &pt(b), EpsParam::T);
        let pts = sample_points(&mut sampler, whole.arity() as usize);
        let product = star_eval(&f, &g, &pts).unwrap();
        let direct = whole.eval(&pts).unwrap();
        assert_eq!(product, direct, "blocks {a} and {b}");
    }
}

#[test]
fn star_is_associative_at_seeded_points() {
    // (f*g)*h vs f*(g*h), the inner product expanded through the merged
    // shape (itself certified by block_products_merge_shapes).
    let mut sampler = PointSampler::new(44);
    for (a, b, c) in [("1", "1", "1"), ("2", "1", "1"), ("2", "2", "1"), ("3", "1", "1")] {
        let (fa, fb, fc) = (pt(a), pt(b), pt(c));
        let h = AElement::eps_basis(&fc, EpsParam::Q);
        let f = AElement::eps_basis(&fa, EpsParam::Q);
        let pts = sample_points(&mut sampler, (fa.size() + fb.size() + fc.size()) as usize);
        let left = star_eval(&merged(&fa, &fb, EpsParam::Q), &h, &pts).unwrap();
        let right = star_eval(&f, &merged(&fb, &fc, EpsParam::Q), &pts).unwrap();
        assert_eq!(left, right, "blocks {a}, {b}, {c}");
    }
}

#[test]
fn constants_are_central_for_the_product() {
    let mut sampler = PointSampler::new(45);
    let c = AElement::constant(frac(3, 7));
    let f = AElement::eps_basis(&pt("2,1"), EpsParam::T);
    let pts = sample_points(&mut sampler, 3);
    let left = star_eval(&c, &f, &pts).unwrap();
    let right = star_eval(&f, &c, &pts).unwrap();
    let plain = &frac(3, 7) * &f.eval(&pts).unwrap();
    assert_eq!(left, plain);
    assert_eq!(right, plain);
}
