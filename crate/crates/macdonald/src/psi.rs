//! Skew coefficients, tableau weights, and the tableau-sum expansion.
//!
//! The one-step coefficient attached to a pair of shapes mu -> la is a
//! finite product of four infinite-product ratios,
//!
//! ```text
//!     psi_{la/mu} = prod_{i <= j}  f(q^{mu_i-mu_j} t^{j-i})   f(q^{la_i-la_{j+1}} t^{j-i})
//!                                  -------------------------------------------------------
//!                                  f(q^{la_i-mu_j} t^{j-i})   f(q^{mu_i-la_{j+1}} t^{j-i})
//! ```
//!
//! with f(u) = (tu; q)_infty / (qu; q)_infty. Each ratio of two f's at the
//! same power of t telescopes to a finite product,
//!
//! ```text
//!     f(q^a t^b) / f(q^c t^b) = prod_{k=a}^{c-1} (1 - q^k t^{b+1}) / (1 - q^{k+1} t^b)    (a <= c),
//! ```
//!
//! so psi is a signed multiset of binomials 1 - q^x t^y. The index range
//! stabilizes once i and j pass the last nonzero row: every further factor
//! is exactly 1. Crucially, the formula applies verbatim to weakly
//! row-increasing fillings whose intermediate shapes are not partitions or
//! not interleaved; the telescoped product then contains the vanishing
//! binomial 1 - q^0 t^0, and the weight is zero. Zero binomials are counted
//! on each side instead of being multiplied in, so 0/0 and poles are
//! detected rather than silently cancelled.

use crate::MacError;
use exactalg::{sym, Monomial, RatFunc};
use partitions::{
    enumerate_fillings, filling_to_chain, FillingFamily, Partition, RowFilling,
};
use std::collections::BTreeMap;

/// Exponent multiset of a product of binomials (1 - q^x t^y), with the
/// vanishing binomial (x, y) = (0, 0) tallied separately per side.
struct BinomialTally {
    factors: BTreeMap<(i64, i64), i64>,
    zeros_num: u32,
    zeros_den: u32,
}

impl BinomialTally {
    fn new() -> BinomialTally {
        BinomialTally {
            factors: BTreeMap::new(),
            zeros_num: 0,
            zeros_den: 0,
        }
    }

    fn push(&mut self, x: i64, y: i64, count: i64) {
        if x == 0 && y == 0 {
            // 1 - q^0 t^0 = 0: never cancel these against each other.
            if count > 0 {
                self.zeros_num += count as u32;
            } else {
                self.zeros_den += (-count) as u32;
            }
            return;
        }
        let e = self.factors.entry((x, y)).or_insert(0);
        *e += count;
        if *e == 0 {
            self.factors.remove(&(x, y));
        }
    }

    /// The telescoped ratio f(q^a t^b) / f(q^c t^b).
    fn push_ratio(&mut self, a: i64, c: i64, b: i64) {
        let (lo, hi, sign) = if a <= c { (a, c, 1) } else { (c, a, -1) };
        for k in lo..hi {
            self.push(k, b + 1, sign);
            self.push(k + 1, b, -sign);
        }
    }

    fn finish(self) -> ChainPsi {
        let mut value = RatFunc::one();
        for (&(x, y), &count) in &self.factors {
            let mono = Monomial::from_factors([(sym("q"), x as i32), (sym("t"), y as i32)]);
            let binom = &RatFunc::one() - &RatFunc::from_monomial(mono);
            value = &value * &binom.pow(count);
        }
        ChainPsi {
            value,
            zeros: self.zeros_num,
            poles: self.zeros_den,
        }
    }
}

/// Outcome of evaluating the telescoped product along a chain of shapes.
/// `value` is the product of the nonvanishing binomials; the coefficient
/// itself is `value` when no vanishing binomial appeared, zero when they
/// appeared only upstairs, and indeterminate otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPsi {
    pub value: RatFunc,
    pub zeros: u32,
    pub poles: u32,
}

impl ChainPsi {
    /// The coefficient the tally represents, or an error when the product
    /// had a pole or an indeterminate 0/0.
    pub fn coefficient(&self) -> Result<RatFunc, MacError> {
        if self.poles > 0 {
            return Err(MacError::UndefinedPsi {
                zeros: self.zeros,
                poles: self.poles,
            });
        }
        if self.zeros > 0 {
            return Ok(RatFunc::zero());
        }
        Ok(self.value.clone())
    }

    /// True when the product vanished cleanly (zeros upstairs, none down).
    pub fn is_clean_zero(&self) -> bool {
        self.zeros > 0 && self.poles == 0
    }
}

fn entry(row: &[u32], i: usize) -> i64 {
    if i >= 1 && i <= row.len() {
        row[i - 1] as i64
    } else {
        0
    }
}

/// Evaluates the telescoped product over consecutive pairs of a chain of
/// row-length sequences (not necessarily partitions). The chain lists the
/// shapes lambda^(0), ..., lambda^(m) as equal-length rows.
pub fn psi_of_chain(shapes: &[Vec<u32>]) -> ChainPsi {
    let rows = shapes.iter().map(Vec::len).max().unwrap_or(0) + 1;
    let mut tally = BinomialTally::new();
    for step in shapes.windows(2) {
        let (mu, la) = (&step[0], &step[1]);
        for i in 1..=rows {
            for j in i..=rows {
                let b = (j - i) as i64;
                // f(q^{mu_i-mu_j}) / f(q^{la_i-mu_j}) at t^b ...
                tally.push_ratio(entry(mu, i) - entry(mu, j), entry(la, i) - entry(mu, j), b);
                // ... times f(q^{la_i-la_{j+1}}) / f(q^{mu_i-la_{j+1}}).
                tally.push_ratio(
                    entry(la, i) - entry(la, j + 1),
                    entry(mu, i) - entry(la, j + 1),
                    b,
                );
            }
        }
    }
    tally.finish()
}

/// The weight of one filling: the chain product over its column slices.
pub fn psi_of_filling(filling: &RowFilling) -> ChainPsi {
    psi_of_chain(&filling_to_chain(filling).shapes)
}

/// The skew coefficient for nested partitions mu inside la. Returns zero
/// when the pair is not a horizontal strip.
pub fn psi_skew(la: &Partition, mu: &Partition) -> Result<RatFunc, MacError> {
    for i in 1..=mu.len() {
        if mu.part(i) > la.part(i) {
            return Err(MacError::NotNested {
                outer: la.to_string(),
                inner: mu.to_string(),
            });
        }
    }
    let rows = la.len().max(1);
    let pad = |p: &Partition| (1..=rows).map(|i| p.part(i)).collect::<Vec<u32>>();
    psi_of_chain(&[pad(mu), pad(la)]).coefficient()
}

/// Report from scanning all weakly row-increasing fillings of a shape.
#[derive(Debug, Clone)]
pub struct VanishingReport {
    /// Fillings outside the tableau family, all checked to have weight zero.
    pub vanishing_checked: usize,
    /// Tableau fillings, all checked to have a clean nonzero weight.
    pub tableau_checked: usize,
    /// First filling violating the expectation, with a description.
    pub counterexample: Option<(RowFilling, String)>,
}

impl VanishingReport {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that the chain-product weight vanishes exactly on the fillings
/// that fail the tableau condition, over all weakly row-increasing fillings
/// of `lambda` in the alphabet 1..=m.
pub fn psi_vanishing_check(lambda: &Partition, m: u32) -> VanishingReport {
    let mut report = VanishingReport {
        vanishing_checked: 0,
        tableau_checked: 0,
        counterexample: None,
    };
    for filling in enumerate_fillings(lambda, m, FillingFamily::RowWeak) {
        let psi = psi_of_filling(&filling);
        if filling.is_semistandard() {
            if psi.zeros > 0 || psi.poles > 0 || psi.value.is_zero() {
                let msg = format!(
                    "tableau weight should be finite and nonzero, got {} zero / {} pole binomials",
                    psi.zeros, psi.poles
                );
                report.counterexample = Some((filling, msg));
                return report;
            }
            report.tableau_checked += 1;
        } else {
            if !psi.is_clean_zero() {
                let msg = format!(
                    "non-tableau weight should vanish, got {} zero / {} pole binomials with value {}",
                    psi.zeros, psi.poles, psi.value
                );
                report.counterexample = Some((filling, msg));
                return report;
            }
            report.vanishing_checked += 1;
        }
    }
    report
}

/// The tableau-sum expansion of P_lambda in m variables: the sum of
/// x^T psi_T over all tableau fillings with alphabet 1..=m. The result is a
/// polynomial in x1..xm with coefficients in Q(q, t).
pub fn tableau_expand(lambda: &Partition, m: u32) -> RatFunc {
    let mut acc = RatFunc::zero();
    for filling in enumerate_fillings(lambda, m, FillingFamily::Semistandard) {
        let psi = psi_of_filling(&filling)
            .coefficient()
            .expect("tableau weights are finite");
        let mut counts = vec![0i32; m as usize];
        for &letter in filling.word() {
            counts[(letter - 1) as usize] += 1;
        }
        let mono = Monomial::from_factors(
            counts
                .iter()
                .enumerate()
                .map(|(i, &c)| (sym(&format!("x{}", i + 1)), c)),
        );
        acc = &acc + &(&psi * &RatFunc::from_monomial(mono));
    }
    acc
}
