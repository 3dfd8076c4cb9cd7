//! Integer partitions with the dominance order, arm/leg statistics, and the
//! three families of row fillings (arbitrary, row-weakly-increasing, and
//! semistandard) encoded by box-count matrices θ_{i,j} and their prefix-sum
//! chains.

mod filling;

pub use filling::{
    enumerate_fillings, filling_to_chain, FillingFamily, RowFilling, TableauChain,
};

use std::fmt;
use std::str::FromStr;

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Errors from partition and filling constructors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PartitionError {
    NotWeaklyDecreasing(Vec<u32>),
    CellOutside { i: usize, j: usize, shape: String },
    BadWord(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotWeaklyDecreasing(p) => {
                write!(f, "parts must be weakly decreasing, got {p:?}")
            }
            PartitionError::CellOutside { i, j, shape } => {
                write!(f, "cell ({i},{j}) lies outside the diagram of ({shape})")
            }
            PartitionError::BadWord(msg) => write!(f, "invalid filling word: {msg}"),
        }
    }
}

impl std::error::Error for PartitionError {}

impl Partition {
    /// Build from parts; trailing zeros are dropped. Errors if the sequence
    /// increases anywhere.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Partition, PartitionError> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Build from parts known to be weakly decreasing; panics otherwise.
    pub fn from_parts(parts: impl Into<Vec<u32>>) -> Partition {
        Partition::new(parts).expect("weakly decreasing parts")
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ| = Σ λ_i.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// λ_i with 1-indexed i; zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Multiplicity of each part value, as (value, count) pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose of the diagram: λ′_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Arm and leg of the cell s = (i, j), 1-indexed: a(s) = λ_i − j boxes to
    /// the right, ℓ(s) = λ′_j − i boxes below.
    pub fn arm_leg(&self, i: usize, j: usize) -> Result<(u32, u32), PartitionError> {
        if i == 0 || j == 0 || j > self.part(i) as usize {
            return Err(PartitionError::CellOutside {
                i,
                j,
                shape: self.to_string(),
            });
        }
        let arm = self.part(i) - j as u32;
        let leg = self.conjugate().part(j) - i as u32;
        Ok((arm, leg))
    }

    /// All cells (i, j) of the diagram in row-major order, 1-indexed.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=(p as usize) {
                out.push((i + 1, j));
            }
        }
        out
    }
}

/// μ ≤ λ in dominance: equal size and every prefix sum of μ is at most the
/// corresponding prefix sum of λ.
pub fn dominance_leq(mu: &Partition, la: &Partition) -> bool {
    if mu.size() != la.size() {
        return false;
    }
    let rows = mu.len().max(la.len());
    let (mut su, mut sl) = (0u32, 0u32);
    for i in 1..=rows {
        su += mu.part(i);
        sl += la.part(i);
        if su > sl {
            return false;
        }
    }
    true
}

/// All partitions of n, in descending lexicographic order of parts
/// ((n) first, (1,…,1) last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most n (including ∅), grouped by ascending size.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    /// Comma-joined parts, e.g. "3,1"; the empty partition prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(v),
            Err(_) => Err(PartitionError::BadWord(format!(
                "cannot parse {s:?} as a partition"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            Partition::from_parts([3, 1]).conjugate(),
            Partition::from_parts([2, 1, 1])
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let square = Partition::from_parts([2, 2]);
        assert_eq!(square.conjugate(), square);
    }

    #[test]
    fn dominance_examples() {
        let a = Partition::from_parts([2, 2]);
        let b = Partition::from_parts([3, 1]);
        assert!(dominance_leq(&a, &b));
        assert!(!dominance_leq(&b, &a));
        assert!(dominance_leq(&b, &b));
        // different sizes are incomparable
        assert!(!dominance_leq(&Partition::from_parts([1]), &a));
    }

    #[test]
    fn arm_leg_examples() {
        let one = Partition::from_parts([1]);
        assert_eq!(one.arm_leg(1, 1).unwrap(), (0, 0));
        assert_eq!(Partition::from_parts([3, 1]).arm_leg(1, 1).unwrap(), (2, 1));
        assert_eq!(Partition::from_parts([2, 2]).arm_leg(1, 2).unwrap(), (0, 1));
        assert!(one.arm_leg(1, 2).is_err());
        assert!(one.arm_leg(2, 1).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        // first is the single row, last the single column
        let ps = partitions_of(4);
        assert_eq!(ps[0], Partition::from_parts([4]));
        assert_eq!(ps[4], Partition::from_parts([1, 1, 1, 1]));
    }

    #[test]
    fn parse_print_roundtrip() {
        for s in ["", "1", "3,1", "4,4,2,1"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("1,3".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        // trailing zeros normalize away
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap().to_string(), "2,1");
    }

    #[test]
    fn multiplicities_group_equal_parts() {
        let p = Partition::from_parts([3, 3, 2, 1, 1, 1]);
        assert_eq!(p.multiplicities(), vec![(3, 2), (2, 1), (1, 3)]);
    }
}
