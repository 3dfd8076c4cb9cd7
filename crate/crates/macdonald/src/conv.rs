//! Basis conversions through the power-sum pivot.
//!
//! For each degree n we build, once, the expansion matrices between the
//! classical bases:
//!
//! ```text
//!     p_lambda = sum_mu  A[lambda][mu] m_mu        (integer entries)
//!     e_lambda = sum_mu  B[lambda][mu] p_mu        (rational entries)
//!     g_lambda = sum_mu  C[lambda][mu] p_mu        (entries in Q(q, t))
//! ```
//!
//! and their inverses by Gauss-Jordan elimination over Q(q, t). The rows
//! of p-in-m come from iterating the multiplication rule
//!
//! ```text
//!     m_mu * p_k = sum_{v in distinct(mu) + {0}}  mult(v+k) * m_{mu with one v -> v+k},
//! ```
//!
//! where mult counts the multiplicity of the new part v+k in the resulting
//! shape; the single-row expansions of e_k and g_k are the classical
//! z-weighted sums over partitions of k,
//!
//! ```text
//!     e_k = sum_{mu |- k} (-1)^{k - l(mu)} z_mu^{-1} p_mu,
//!     g_k = sum_{mu |- k} z_mu^{-1} prod_i (1-t^{mu_i})/(1-q^{mu_i}) p_mu,
//! ```
//!
//! and products of generators concatenate part multisets in the p basis.
//! Tables are cached per degree behind a lock; the first caller builds,
//! later callers clone an `Arc`.

use crate::inner::z_lambda;
use crate::pq::ptables;
use crate::{Basis, SymFunc};
use exactalg::{int, var, RatFunc, Scalar};
use partitions::{partitions_of, Partition};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Expansion matrices for one degree. Row index = source partition, column
/// index = target partition, both in the order of `parts`.
pub(crate) struct ClassicalTables {
    pub parts: Vec<Partition>,
    pub index: BTreeMap<Partition, usize>,
    pub p_to_m: Vec<Vec<RatFunc>>,
    pub m_to_p: Vec<Vec<RatFunc>>,
    pub e_to_p: Vec<Vec<RatFunc>>,
    pub p_to_e: Vec<Vec<RatFunc>>,
    pub g_to_p: Vec<Vec<RatFunc>>,
    pub p_to_g: Vec<Vec<RatFunc>>,
    // Composed one-hop routes in and out of the monomial basis, so a
    // conversion never applies two matrices where the product would do.
    pub m_to_e: Vec<Vec<RatFunc>>,
    pub e_to_m: Vec<Vec<RatFunc>>,
    pub m_to_g: Vec<Vec<RatFunc>>,
    pub g_to_m: Vec<Vec<RatFunc>>,
}

static TABLES: OnceLock<Mutex<BTreeMap<u32, Arc<ClassicalTables>>>> = OnceLock::new();

pub(crate) fn tables(degree: u32) -> Arc<ClassicalTables> {
    let lock = TABLES.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut map = lock.lock().expect("transition table lock poisoned");
    map.entry(degree)
        .or_insert_with(|| Arc::new(build_tables(degree)))
        .clone()
}

fn build_tables(degree: u32) -> ClassicalTables {
    let parts = partitions_of(degree);
    let index: BTreeMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let k = parts.len();

    let p_to_m: Vec<Vec<RatFunc>> = parts
        .iter()
        .map(|la| row_from_map(&power_sum_in_m(la), &index))
        .collect();
    let e_to_p: Vec<Vec<RatFunc>> = parts
        .iter()
        .map(|la| row_from_map(&generator_product_in_p(la, elementary_gen_in_p), &index))
        .collect();
    let g_to_p: Vec<Vec<RatFunc>> = parts
        .iter()
        .map(|la| row_from_map(&generator_product_in_p(la, deformed_gen_in_p), &index))
        .collect();

    let m_to_p = invert_matrix(&p_to_m).expect("p-in-m expansion is invertible");
    let p_to_e = invert_matrix(&e_to_p).expect("e-in-p expansion is invertible");
    let p_to_g = invert_matrix(&g_to_p).expect("g-in-p expansion is invertible");

    // Round trips must be the identity; this seals the inversion step.
    for (name, a, b) in [
        ("m", &p_to_m, &m_to_p),
        ("e", &e_to_p, &p_to_e),
        ("g", &g_to_p, &p_to_g),
    ] {
        let prod = mat_mul(a, b);
        for (i, row) in prod.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expect_one = i == j;
                assert!(
                    if expect_one { entry.is_one() } else { entry.is_zero() },
                    "round trip through {name} at degree {degree} is not the identity"
                );
            }
        }
    }
    assert_eq!(p_to_m.len(), k);

    let m_to_e = mat_mul(&m_to_p, &p_to_e);
    let e_to_m = mat_mul(&e_to_p, &p_to_m);
    let m_to_g = mat_mul(&m_to_p, &p_to_g);
    let g_to_m = mat_mul(&g_to_p, &p_to_m);

    ClassicalTables {
        parts,
        index,
        p_to_m,
        m_to_p,
        e_to_p,
        p_to_e,
        g_to_p,
        p_to_g,
        m_to_e,
        e_to_m,
        m_to_g,
        g_to_m,
    }
}

fn row_from_map(map: &BTreeMap<Partition, RatFunc>, index: &BTreeMap<Partition, usize>) -> Vec<RatFunc> {
    let mut row = vec![RatFunc::zero(); index.len()];
    for (mu, c) in map {
        row[index[mu]] = c.clone();
    }
    row
}

/// Expands p_lambda over the monomial basis by multiplying one power sum at
/// a time with the part-merging rule.
fn power_sum_in_m(lambda: &Partition) -> BTreeMap<Partition, RatFunc> {
    let mut acc: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    acc.insert(Partition::empty(), RatFunc::one());
    for &k in lambda.parts() {
        let mut next: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (mu, c) in &acc {
            // Merge k into one part of mu (or append it as a new part).
            let mut choices: Vec<u32> = mu.parts().to_vec();
            choices.dedup();
            choices.push(0);
            for v in choices {
                let mut parts: Vec<u32> = mu.parts().to_vec();
                if v == 0 {
                    parts.push(k);
                } else {
                    let pos = parts.iter().position(|&p| p == v).expect("part present");
                    parts[pos] = v + k;
                }
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let grown = Partition::from_parts(parts);
                let mult = grown.parts().iter().filter(|&&p| p == v + k).count() as i64;
                let entry = next.entry(grown).or_insert_with(RatFunc::zero);
                *entry = &*entry + &(c * &int(mult));
            }
        }
        acc = next;
    }
    acc
}

/// p-expansion of the degree-k elementary generator.
fn elementary_gen_in_p(k: u32) -> BTreeMap<Partition, RatFunc> {
    partitions_of(k)
        .into_iter()
        .map(|mu| {
            let sign = if (k as usize - mu.len()) % 2 == 0 { 1 } else { -1 };
            let coeff = RatFunc::from_scalar(Scalar::from_integer(sign.into()) / z_lambda(&mu));
            (mu, coeff)
        })
        .collect()
}

/// p-expansion of the degree-k deformed homogeneous generator.
fn deformed_gen_in_p(k: u32) -> BTreeMap<Partition, RatFunc> {
    let (q, t) = (var("q"), var("t"));
    partitions_of(k)
        .into_iter()
        .map(|mu| {
            let mut coeff = RatFunc::from_scalar(Scalar::from_integer(1.into()) / z_lambda(&mu));
            for &part in mu.parts() {
                let num = &RatFunc::one() - &t.pow(part as i64);
                let den = &RatFunc::one() - &q.pow(part as i64);
                coeff = &coeff * &(&num * &den.inv());
            }
            (mu, coeff)
        })
        .collect()
}

/// p-expansion of a product of generators, one per part of lambda; the
/// p basis multiplies by concatenating part multisets.
fn generator_product_in_p(
    lambda: &Partition,
    gen: fn(u32) -> BTreeMap<Partition, RatFunc>,
) -> BTreeMap<Partition, RatFunc> {
    let mut acc: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    acc.insert(Partition::empty(), RatFunc::one());
    for &k in lambda.parts() {
        let factor = gen(k);
        let mut next: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (alpha, a) in &acc {
            for (beta, b) in &factor {
                let mut parts: Vec<u32> =
                    alpha.parts().iter().chain(beta.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let joined = Partition::from_parts(parts);
                let entry = next.entry(joined).or_insert_with(RatFunc::zero);
                *entry = &*entry + &(a * b);
            }
        }
        acc = next;
    }
    acc
}

/// Gauss-Jordan inversion over the rational-function field.
pub(crate) fn invert_matrix(mat: &[Vec<RatFunc>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = mat.len();
    let mut work: Vec<Vec<RatFunc>> = mat.to_vec();
    let mut inv: Vec<Vec<RatFunc>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = work[col][col].inv();
        for j in 0..n {
            work[col][j] = &work[col][j] * &scale;
            inv[col][j] = &inv[col][j] * &scale;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for j in 0..n {
                work[r][j] = &work[r][j] - &(&factor * &work[col][j]);
                inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
            }
        }
    }
    Some(inv)
}

pub(crate) fn mat_mul(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = RatFunc::zero();
                    for (k, row_b) in b.iter().enumerate() {
                        if a[i][k].is_zero() || row_b[j].is_zero() {
                            continue;
                        }
                        s = &s + &(&a[i][k] * &row_b[j]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Converts between any two of the six bases. Classical conversions pivot
/// through the power sums; when the orthogonal pair is involved the route
/// goes through the monomial basis instead, where its triangular coefficient
/// tables live, so no stage is traversed and immediately undone.
pub fn convert_basis(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis() == target {
        return f.clone();
    }
    let n = f.degree();
    let is_mac = |b: Basis| matches!(b, Basis::MacP | Basis::MacQ);

    let t = tables(n);
    let as_vec = |f: &SymFunc| -> Vec<RatFunc> {
        let mut v = vec![RatFunc::zero(); t.parts.len()];
        for (la, c) in f.iter() {
            v[t.index[la]] = c.clone();
        }
        v
    };
    let apply = |v: &[RatFunc], mat: &[Vec<RatFunc>]| -> Vec<RatFunc> {
        let mut cols: Vec<Vec<RatFunc>> = vec![Vec::new(); t.parts.len()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, e) in mat[i].iter().enumerate() {
                if !e.is_zero() {
                    cols[j].push(c * e);
                }
            }
        }
        cols.into_iter().map(RatFunc::sum_all).collect()
    };

    let out_vec: Vec<RatFunc> = if is_mac(f.basis()) && is_mac(target) {
        // Q_lambda = b_lambda P_lambda: a diagonal rescaling, no tables.
        let pt = ptables(n);
        let v = as_vec(f);
        let scale = |b: &RatFunc| if target == Basis::MacQ { b.inv() } else { b.clone() };
        v.into_iter()
            .enumerate()
            .map(|(i, c)| if c.is_zero() { c } else { &c * &scale(&pt.b[i]) })
            .collect()
    } else if is_mac(f.basis()) || is_mac(target) {
        // Pivot through the monomial basis.
        let m_vec: Vec<RatFunc> = match f.basis() {
            Basis::M => as_vec(f),
            Basis::E => apply(&as_vec(f), &t.e_to_m),
            Basis::P => apply(&as_vec(f), &t.p_to_m),
            Basis::G => apply(&as_vec(f), &t.g_to_m),
            Basis::MacP | Basis::MacQ => {
                let pt = ptables(n);
                let mut v = as_vec(f);
                if f.basis() == Basis::MacQ {
                    for (i, c) in v.iter_mut().enumerate() {
                        *c = &*c * &pt.b[i];
                    }
                }
                apply(&v, &pt.p_in_m)
            }
        };
        match target {
            Basis::M => m_vec,
            Basis::E => apply(&m_vec, &t.m_to_e),
            Basis::P => apply(&m_vec, &t.m_to_p),
            Basis::G => apply(&m_vec, &t.m_to_g),
            Basis::MacP | Basis::MacQ => {
                let pt = ptables(n);
                let mut v = apply(&m_vec, &pt.m_in_bigp);
                if target == Basis::MacQ {
                    for (i, c) in v.iter_mut().enumerate() {
                        if !c.is_zero() {
                            *c = &*c * &pt.b[i].inv();
                        }
                    }
                }
                v
            }
        }
    } else {
        // Pivot through the power sums.
        let p_vec: Vec<RatFunc> = match f.basis() {
            Basis::P => as_vec(f),
            Basis::M => apply(&as_vec(f), &t.m_to_p),
            Basis::E => apply(&as_vec(f), &t.e_to_p),
            Basis::G => apply(&as_vec(f), &t.g_to_p),
            Basis::MacP | Basis::MacQ => unreachable!("handled above"),
        };
        match target {
            Basis::P => p_vec,
            Basis::M => apply(&p_vec, &t.p_to_m),
            Basis::E => apply(&p_vec, &t.p_to_e),
            Basis::G => apply(&p_vec, &t.p_to_g),
            Basis::MacP | Basis::MacQ => unreachable!("handled above"),
        }
    };

    let coeffs = out_vec
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (t.parts[i].clone(), c));
    SymFunc::from_coeffs(target, n, coeffs).expect("partition sizes match the degree")
}
