use crate::{scalar_frac, Scalar};
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded source of small-height rational sample points.
///
/// Values avoid 0 and ±1 so that substituting them for q, t, or a coordinate
/// never collapses the standard denominators (1 − q^k), (1 − t^k). All draws
/// are reproducible from the seed.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> PointSampler {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// One rational with numerator in [−9, 9]∖{0} and denominator in [1, 9],
    /// rejected and redrawn while the reduced value lies in {0, ±1}.
    pub fn rational(&mut self) -> Scalar {
        loop {
            let n: i64 = self.rng.random_range(-9..=9);
            if n == 0 {
                continue;
            }
            let d: i64 = self.rng.random_range(1..=9);
            let r = scalar_frac(n, d);
            if r.numer().magnitude() == r.denom().magnitude() {
                continue; // reduced to ±1
            }
            return r;
        }
    }

    /// k pairwise distinct sample points.
    pub fn distinct_rationals(&mut self, k: usize) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::with_capacity(k);
        while out.len() < k {
            let r = self.rational();
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    /// A (q, t) pair avoiding the degenerate loci q = ±t and q·t = ±1, on
    /// top of the per-value exclusions of `rational`.
    pub fn qt_pair(&mut self) -> (Scalar, Scalar) {
        loop {
            let q = self.rational();
            let t = self.rational();
            if q == t || q == -t.clone() {
                continue;
            }
            let prod = q.clone() * t.clone();
            if prod.is_one() || (-prod).is_one() {
                continue;
            }
            return (q, t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar;
    use num_traits::Zero;

    #[test]
    fn reproducible_and_nondegenerate() {
        let mut a = PointSampler::new(7);
        let mut b = PointSampler::new(7);
        for _ in 0..50 {
            let x = a.rational();
            assert_eq!(x, b.rational());
            assert!(!x.is_zero());
            assert_ne!(x, scalar(1));
            assert_ne!(x, scalar(-1));
        }
    }

    #[test]
    fn distinct_points() {
        let mut s = PointSampler::new(1);
        let v = s.distinct_rationals(12);
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                assert_ne!(v[i], v[j]);
            }
        }
    }

    #[test]
    fn qt_avoids_degeneracies() {
        let mut s = PointSampler::new(3);
        for _ in 0..30 {
            let (q, t) = s.qt_pair();
            assert_ne!(q, t);
            assert_ne!(q, -t.clone());
            let p = q * t;
            assert_ne!(p, scalar(1));
            assert_ne!(p, scalar(-1));
        }
    }
}
