//! Coefficient sequences, decay estimates and Hausdorff–Young on the torus.

use std::collections::BTreeMap;

use crate::error::{invalid, Error, Result};
use crate::grid::{dft_analyze, SpectrumT, TorusSignal, C64, ZERO};
use crate::norms::{check_exponent, conjugate, lp_norm};

/// Finitely supported `n ↦ a(n)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoeffSequence {
    terms: BTreeMap<i64, C64>,
}

impl CoeffSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(n: i64) -> Self {
        let mut s = Self::new();
        s.insert(n, C64::new(1.0, 0.0));
        s
    }

    pub fn insert(&mut self, n: i64, v: C64) {
        if v == ZERO {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, v);
        }
    }

    pub fn get(&self, n: i64) -> C64 {
        self.terms.get(&n).copied().unwrap_or(ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.terms.iter().map(|(&n, &v)| (n, v))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|v| v.norm()).sum()
    }

    /// Nonzero coefficients of a spectrum.
    pub fn from_spectrum(s: &SpectrumT) -> Self {
        let mut out = Self::new();
        for (n, v) in s.iter() {
            out.insert(n, v);
        }
        out
    }

    /// Place the sequence in a spectrum of size `size`.
    pub fn to_spectrum(&self, size: usize) -> Result<SpectrumT> {
        let mut s = SpectrumT::zeros(size)?;
        for (n, v) in self.iter() {
            s.set(n, v)?;
        }
        Ok(s)
    }
}

/// `(a*b)(n) = Σ_m a(m) b(n-m)`.
pub fn seq_convolve(a: &CoeffSequence, b: &CoeffSequence) -> CoeffSequence {
    let mut acc: BTreeMap<i64, C64> = BTreeMap::new();
    for (m, x) in a.iter() {
        for (k, y) in b.iter() {
            *acc.entry(m + k).or_insert(ZERO) += x * y;
        }
    }
    let mut out = CoeffSequence::new();
    for (n, v) in acc {
        out.insert(n, v);
    }
    out
}

/// Least-squares slope of `log max_{2^k ≤ |n| < 2^{k+1}} |f̂(n)|` against the
/// log of the frequency where each block maximum sits.
///
/// Uses the blocks `k ≥ 1` and drops the two highest blocks. Taking the
/// argmax rather than `2^k` as abscissa keeps functions with odd-only
/// spectra (maximum at `2^k + 1`) from biasing the fit.
pub fn decay_exponent(f: &TorusSignal) -> Result<f64> {
    let size = f.grid().size();
    if size < 256 {
        return Err(invalid("N", format!("{size} is below 256")));
    }
    let c = dft_analyze(f);
    if c.coeffs().iter().all(|v| *v == ZERO) {
        return Err(Error::Precondition("all-zero spectrum".into()));
    }
    let half = size / 2;
    let blocks = (half.trailing_zeros() + 1) as usize;
    let mut pts = Vec::new();
    for k in 1..blocks.saturating_sub(2) {
        let lo = 1i64 << k;
        let hi = lo << 1;
        let (at, m) = c
            .iter()
            .filter(|(n, _)| n.abs() >= lo && n.abs() < hi)
            .map(|(n, v)| (n.abs(), v.norm()))
            .fold((lo, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if m > 0.0 {
            pts.push(((at as f64).ln(), m.ln()));
        }
    }
    slope(&pts).ok_or_else(|| Error::Precondition("fewer than two nonzero dyadic blocks".into()))
}

/// Least-squares slope through `(x, y)` points.
pub fn slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// `‖f̂‖_{ℓ^{p'}} / ‖f‖_{L^p}`; at most one for `1 ≤ p ≤ 2`.
pub fn hausdorff_young_ratio(f: &TorusSignal, p: f64) -> Result<f64> {
    check_exponent(p)?;
    if p > 2.0 {
        return Err(invalid("p", "the inequality fails for p > 2"));
    }
    let q = conjugate(p);
    let c = dft_analyze(f);
    let lhs = crate::norms::lp_of_magnitudes(c.coeffs().iter().map(|v| v.norm()), 1.0, q);
    Ok(lhs / lp_norm(f, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::TorusFunction;
    use crate::grid::TorusGrid;

    #[test]
    fn identity_element() {
        let mut b = CoeffSequence::new();
        b.insert(-2, C64::new(1.0, 2.0));
        b.insert(5, C64::new(-0.5, 0.0));
        assert_eq!(seq_convolve(&CoeffSequence::unit(0), &b), b);
    }

    #[test]
    fn decay_of_catalog_functions() {
        let g = TorusGrid::new(1024).unwrap();
        let saw = decay_exponent(&TorusFunction::Sawtooth.sample(g)).unwrap();
        assert!((saw + 1.0).abs() < 0.1, "{saw}");
        let tri = decay_exponent(&TorusFunction::Triangle.sample(g)).unwrap();
        assert!((tri + 2.0).abs() < 0.1, "{tri}");
        let lac = decay_exponent(&TorusFunction::Lacunary { alpha: 0.5, terms: 10 }.sample(g)).unwrap();
        assert!((lac + 0.5).abs() < 0.05, "{lac}");
    }

    #[test]
    fn decay_rejects_zero_and_small() {
        let g = TorusGrid::new(256).unwrap();
        assert!(decay_exponent(&TorusSignal::constant(g, ZERO)).is_err());
        let g = TorusGrid::new(128).unwrap();
        assert!(decay_exponent(&TorusSignal::constant(g, C64::new(1.0, 0.0))).is_err());
    }
}
