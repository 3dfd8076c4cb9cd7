//! Row fillings of a partition diagram with entries in {1, …, m}, the three
//! nested families used throughout, and the prefix-sum chain encoding.
//!
//! A filling assigns one entry to each box, read row by row left to right
//! (English reading order). The box counts θ_{i,j} = #{boxes of row i with
//! entry j} determine a filling with weakly increasing rows uniquely; the
//! partial sums λ^{(j)}_i = Σ_{k≤j} θ_{i,k} form a chain of integer sequences
//! interpolating ∅ → λ.

use crate::{Partition, PartitionError};
use itertools::Itertools;

/// A filling of `shape` with entries from {1, …, m}, stored as the reading
/// word (row-major, left to right).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowFilling {
    shape: Partition,
    m: u32,
    word: Vec<u32>,
}

/// The three filling families, each contained in the next:
/// semistandard ⊆ row-weak ⊆ all words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FillingFamily {
    /// Every word in {1..m}^{|λ|}.
    All,
    /// Entries weakly increase along each row.
    RowWeak,
    /// Row-weak fillings whose box counts satisfy θ_{i,j} = 0 for i > j and
    /// θ_{i,j} ≤ λ_i − λ_{i+1} − Σ_{k>j} (θ_{i,k} − θ_{i+1,k}).
    Semistandard,
}

impl RowFilling {
    pub fn from_word(
        shape: Partition,
        m: u32,
        word: Vec<u32>,
    ) -> Result<RowFilling, PartitionError> {
        if word.len() != shape.size() as usize {
            return Err(PartitionError::BadWord(format!(
                "word length {} does not match |shape| = {}",
                word.len(),
                shape.size()
            )));
        }
        if let Some(&bad) = word.iter().find(|&&e| e == 0 || e > m) {
            return Err(PartitionError::BadWord(format!(
                "entry {bad} outside 1..={m}"
            )));
        }
        Ok(RowFilling { shape, m, word })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Size m of the entry alphabet {1, …, m}.
    pub fn alphabet_size(&self) -> u32 {
        self.m
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Entry in row i, column j (both 1-indexed).
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        assert!(
            i >= 1 && j >= 1 && j <= self.shape.part(i) as usize,
            "cell ({i},{j}) outside shape ({})",
            self.shape
        );
        let offset: usize = (1..i).map(|r| self.shape.part(r) as usize).sum();
        self.word[offset + j - 1]
    }

    /// The i-th row of the word, 1-indexed.
    pub fn row(&self, i: usize) -> &[u32] {
        let start: usize = (1..i).map(|r| self.shape.part(r) as usize).sum();
        &self.word[start..start + self.shape.part(i) as usize]
    }

    /// Box counts θ with θ[i−1][j−1] = #{boxes of row i holding entry j};
    /// ℓ(λ) rows and m columns.
    pub fn theta(&self) -> Vec<Vec<u32>> {
        let mut th = vec![vec![0u32; self.m as usize]; self.shape.len()];
        for i in 1..=self.shape.len() {
            for &e in self.row(i) {
                th[i - 1][e as usize - 1] += 1;
            }
        }
        th
    }

    pub fn is_row_weak(&self) -> bool {
        (1..=self.shape.len()).all(|i| self.row(i).windows(2).all(|w| w[0] <= w[1]))
    }

    /// The box-count criterion for semistandardness (column-strictness).
    pub fn is_semistandard(&self) -> bool {
        if !self.is_row_weak() {
            return false;
        }
        let th = self.theta();
        let ell = self.shape.len();
        let at = |i: usize, j: usize| -> i64 {
            if i >= 1 && i <= ell && j >= 1 && j <= self.m as usize {
                th[i - 1][j - 1] as i64
            } else {
                0
            }
        };
        for i in 1..=ell {
            for j in 1..=self.m as usize {
                if i > j && at(i, j) != 0 {
                    return false;
                }
                let tail: i64 = ((j + 1)..=self.m as usize)
                    .map(|k| at(i, k) - at(i + 1, k))
                    .sum();
                let bound = self.shape.part(i) as i64 - self.shape.part(i + 1) as i64 - tail;
                if at(i, j) > bound {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustive, duplicate-free list of fillings of `shape` in the family, in
/// lexicographic order of reading words. m ≥ 1.
pub fn enumerate_fillings(shape: &Partition, m: u32, family: FillingFamily) -> Vec<RowFilling> {
    assert!(m >= 1, "alphabet must be nonempty");
    let n = shape.size() as usize;
    if n == 0 {
        return vec![RowFilling {
            shape: shape.clone(),
            m,
            word: Vec::new(),
        }];
    }
    match family {
        FillingFamily::All => (0..n)
            .map(|_| 1..=m)
            .multi_cartesian_product()
            .map(|word| RowFilling {
                shape: shape.clone(),
                m,
                word,
            })
            .collect(),
        FillingFamily::RowWeak => {
            let mut rows_choices: Vec<Vec<Vec<u32>>> = Vec::new();
            for &len in shape.parts() {
                let choices: Vec<Vec<u32>> = (1..=m)
                    .combinations_with_replacement(len as usize)
                    .collect();
                rows_choices.push(choices);
            }
            let mut out = Vec::new();
            let mut word = Vec::with_capacity(n);
            fn rec(
                rows: &[Vec<Vec<u32>>],
                word: &mut Vec<u32>,
                shape: &Partition,
                m: u32,
                out: &mut Vec<RowFilling>,
            ) {
                match rows.split_first() {
                    None => out.push(RowFilling {
                        shape: shape.clone(),
                        m,
                        word: word.clone(),
                    }),
                    Some((first, rest)) => {
                        for choice in first {
                            word.extend_from_slice(choice);
                            rec(rest, word, shape, m, out);
                            word.truncate(word.len() - choice.len());
                        }
                    }
                }
            }
            rec(&rows_choices, &mut word, shape, m, &mut out);
            out
        }
        FillingFamily::Semistandard => enumerate_fillings(shape, m, FillingFamily::RowWeak)
            .into_iter()
            .filter(RowFilling::is_semistandard)
            .collect(),
    }
}

/// The prefix-sum chain λ^{(0)}, …, λ^{(m)} of a filling, with per-shape
/// partition flags and per-step horizontal-strip flags.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauChain {
    /// shapes[j] = λ^{(j)} as a raw integer sequence of length ℓ(λ); it may
    /// fail to be a partition.
    pub shapes: Vec<Vec<u32>>,
    /// is_partition[j] ⟺ shapes[j] is weakly decreasing.
    pub is_partition: Vec<bool>,
    /// horizontal_strip[j−1] ⟺ shapes[j] / shapes[j−1] is a horizontal
    /// strip: ν_i ≥ μ_i for all i and μ_i ≥ ν_{i+1} for all i.
    pub horizontal_strip: Vec<bool>,
}

impl TableauChain {
    pub fn all_steps_horizontal(&self) -> bool {
        self.horizontal_strip.iter().all(|&b| b)
    }

    pub fn all_shapes_partitions(&self) -> bool {
        self.is_partition.iter().all(|&b| b)
    }
}

/// Chain of partial shapes λ^{(j)}_i = Σ_{k≤j} θ_{i,k} for j = 0..m.
pub fn filling_to_chain(t: &RowFilling) -> TableauChain {
    let th = t.theta();
    let ell = t.shape().len();
    let m = t.alphabet_size() as usize;
    let mut shapes = Vec::with_capacity(m + 1);
    shapes.push(vec![0u32; ell]);
    for j in 1..=m {
        let prev = shapes.last().unwrap().clone();
        let next: Vec<u32> = (0..ell).map(|i| prev[i] + th[i][j - 1]).collect();
        shapes.push(next);
    }
    let is_partition = shapes
        .iter()
        .map(|s| s.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    let horizontal_strip = (1..=m)
        .map(|j| {
            let (mu, nu) = (&shapes[j - 1], &shapes[j]);
            let grows = (0..ell).all(|i| nu[i] >= mu[i]);
            let interleaves = (0..ell.saturating_sub(1)).all(|i| mu[i] >= nu[i + 1]);
            grows && interleaves
        })
        .collect();
    TableauChain {
        shapes,
        is_partition,
        horizontal_strip,
    }
}
