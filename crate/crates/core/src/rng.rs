//! Seeded random numbers.
//!
//! The generator is xoshiro256** whose state is expanded from the 64-bit
//! seed by SplitMix64. Uniform doubles take the top 53 bits of each output.
//! Normal variates use the Kinderman–Monahan ratio-of-uniforms method:
//! draw `u ∈ (0,1]`, `v ∈ [-√(2/e), √(2/e)]`, accept `x = v/u` when
//! `x² ≤ -4 ln u`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::grid::C64;

#[derive(Debug, Clone)]
pub struct SeededRng {
    inner: Xoshiro256StarStar,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn normal(&mut self) -> f64 {
        let scale = (2.0 / std::f64::consts::E).sqrt();
        loop {
            let u = 1.0 - self.uniform();
            let v = (2.0 * self.uniform() - 1.0) * scale;
            let x = v / u;
            if x * x <= -4.0 * u.ln() {
                return x;
            }
        }
    }

    /// Real and imaginary parts independent standard normals.
    pub fn complex_normal(&mut self) -> C64 {
        let re = self.normal();
        C64::new(re, self.normal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut a = SeededRng::new(42);
        let mut b = SeededRng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        assert_ne!(SeededRng::new(1).next_u64(), SeededRng::new(2).next_u64());
    }

    #[test]
    fn normal_moments() {
        let mut r = SeededRng::new(7);
        let n = 200_000;
        let xs: Vec<f64> = (0..n).map(|_| r.normal()).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.01);
        assert!((var - 1.0).abs() < 0.02);
    }

    #[test]
    fn uniform_range() {
        let mut r = SeededRng::new(3);
        for _ in 0..1000 {
            let u = r.uniform();
            assert!((0.0..1.0).contains(&u));
            assert!(r.below(10) < 10);
        }
    }
}
