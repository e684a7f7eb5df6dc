//! `L^p` norms, distribution functions and the layer-cake integral.
//!
//! Torus norms use the normalized measure `dt/2π`; line norms use
//! Lebesgue measure. `p = f64::INFINITY` is the max of the sample moduli.

use crate::error::{invalid, Error, Result};
use crate::grid::{LineSignal, TorusSignal, C64};

/// A sampled function together with the measure of one grid cell.
pub trait Measured {
    fn samples(&self) -> &[C64];
    fn cell_measure(&self) -> f64;

    fn total_measure(&self) -> f64 {
        self.cell_measure() * self.samples().len() as f64
    }
}

impl Measured for TorusSignal {
    fn samples(&self) -> &[C64] {
        self.values()
    }

    fn cell_measure(&self) -> f64 {
        1.0 / self.grid().size() as f64
    }
}

impl Measured for LineSignal {
    fn samples(&self) -> &[C64] {
        self.values()
    }

    fn cell_measure(&self) -> f64 {
        self.grid().cell_measure()
    }
}

/// Raw slice with an explicit cell measure.
#[derive(Debug, Clone, Copy)]
pub struct Samples<'a> {
    pub values: &'a [C64],
    pub cell: f64,
}

impl Measured for Samples<'_> {
    fn samples(&self) -> &[C64] {
        self.values
    }

    fn cell_measure(&self) -> f64 {
        self.cell
    }
}

pub(crate) fn check_exponent(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(invalid("p", format!("{p} is below 1")));
    }
    Ok(())
}

/// `‖v‖_p` of raw magnitudes with cell weight `w`.
pub fn lp_of_magnitudes(mags: impl Iterator<Item = f64>, w: f64, p: f64) -> f64 {
    if p.is_infinite() {
        return mags.fold(0.0, f64::max);
    }
    if p == 1.0 {
        return w * mags.sum::<f64>();
    }
    if p == 2.0 {
        return (w * mags.map(|m| m * m).sum::<f64>()).sqrt();
    }
    // factor out the max so large exponents do not overflow
    let mags: Vec<f64> = mags.collect();
    let top = mags.iter().copied().fold(0.0, f64::max);
    if top == 0.0 || !top.is_finite() {
        return top;
    }
    top * (w * mags.iter().map(|m| (m / top).powf(p)).sum::<f64>()).powf(1.0 / p)
}

pub fn lp_norm<F: Measured + ?Sized>(f: &F, p: f64) -> Result<f64> {
    check_exponent(p)?;
    Ok(lp_of_magnitudes(
        f.samples().iter().map(|v| v.norm()),
        f.cell_measure(),
        p,
    ))
}

/// Measure of `{|f| > λ}`.
pub fn distribution_function<F: Measured + ?Sized>(f: &F, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(invalid("lambda", format!("{lambda} must be positive")));
    }
    let count = f.samples().iter().filter(|v| v.norm() > lambda).count();
    Ok(count as f64 * f.cell_measure())
}

/// `∫_0^{λ_max} p λ^{p-1} μ{|f| > λ} dλ` over the span of `lambda_grid`.
///
/// The distribution function of a sampled signal is a step function that
/// jumps at the sample moduli, so those are merged into the grid and each
/// piece is integrated in closed form. Mass above the last grid point is
/// not counted.
pub fn layercake_lp<F: Measured + ?Sized>(f: &F, p: f64, lambda_grid: &[f64]) -> Result<f64> {
    check_exponent(p)?;
    if p.is_infinite() {
        return Err(invalid("p", "layer-cake needs finite p"));
    }
    if lambda_grid.is_empty() {
        return Err(Error::InvalidParameter {
            name: "lambda_grid",
            reason: "empty grid".into(),
        });
    }
    if lambda_grid.iter().any(|l| !(*l > 0.0)) {
        return Err(invalid("lambda_grid", "grid points must be positive"));
    }
    let top = lambda_grid.iter().cloned().fold(0.0, f64::max);
    let mut mags: Vec<f64> = f.samples().iter().map(|v| v.norm()).collect();
    mags.sort_by(f64::total_cmp);
    let mut cuts: Vec<f64> = lambda_grid.to_vec();
    cuts.extend(mags.iter().copied().filter(|&m| m > 0.0 && m < top));
    cuts.push(0.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let w = f.cell_measure();
    let mut total = 0.0;
    for pair in cuts.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let mid = 0.5 * (a + b);
        let above = mags.len() - mags.partition_point(|&m| m <= mid);
        if above == 0 {
            break;
        }
        total += (b.powf(p) - a.powf(p)) * above as f64 * w;
    }
    Ok(total)
}

/// Log-spaced grid of `count` points from `lo` to `hi`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![hi];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

/// Conjugate exponent `p'` with `1/p + 1/p' = 1`.
pub fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_exponent_is_finite() {
        let v = [3.0, 50.0, 7.0];
        let n = lp_of_magnitudes(v.iter().copied(), 0.5, 800.0);
        assert!((n - 50.0 * 0.5f64.powf(1.0 / 800.0)).abs() < 1e-12);
    }
    use crate::grid::TorusGrid;
    use std::f64::consts::PI;

    fn half_indicator() -> TorusSignal {
        let g = TorusGrid::new(64).unwrap();
        TorusSignal::from_real_fn(g, |t| if (0.0..PI).contains(&t) { 1.0 } else { 0.0 })
    }

    #[test]
    fn norm_examples() {
        let g = TorusGrid::new(32).unwrap();
        let c = TorusSignal::constant(g, C64::new(0.0, -2.5));
        for p in [1.0, 1.5, 2.0, 7.0, f64::INFINITY] {
            assert!((lp_norm(&c, p).unwrap() - 2.5).abs() < 1e-14);
        }
        let e = TorusSignal::from_fn(g, |t| C64::from_polar(1.0, 5.0 * t));
        assert!((lp_norm(&e, 3.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((lp_norm(&half_indicator(), 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(lp_norm(&c, 0.5).is_err());
    }

    #[test]
    fn distribution_examples() {
        let g = TorusGrid::new(16).unwrap();
        let two = TorusSignal::constant(g, C64::new(2.0, 0.0));
        assert_eq!(distribution_function(&two, 1.0).unwrap(), 1.0);
        assert_eq!(distribution_function(&two, 3.0).unwrap(), 0.0);
        assert_eq!(distribution_function(&half_indicator(), 0.5).unwrap(), 0.5);
        assert!(distribution_function(&two, 0.0).is_err());
    }

    #[test]
    fn layercake_examples() {
        let grid = log_grid(1e-3, 1.0, 20);
        let v = layercake_lp(&half_indicator(), 2.0, &grid).unwrap();
        assert!((v - 0.5).abs() < 1e-14);
        let g = TorusGrid::new(16).unwrap();
        let c = TorusSignal::constant(g, C64::new(0.7, 0.0));
        let v = layercake_lp(&c, 1.0, &log_grid(1e-2, 1.0, 9)).unwrap();
        assert!((v - 0.7).abs() < 1e-14);
        assert!(layercake_lp(&c, 1.0, &[]).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(2.0), 2.0);
        assert!((conjugate(4.0 / 3.0) - 4.0).abs() < 1e-12);
        assert!(conjugate(1.0).is_infinite());
    }
}
