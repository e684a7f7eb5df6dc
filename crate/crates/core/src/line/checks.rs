//! Differentiation and Hausdorff–Young checks on the line.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::grid::{dft_line, idft_line, LineSignal, C64, ZERO};
use crate::norms::{check_exponent, conjugate, lp_norm, lp_of_magnitudes};

/// `∂_j f` through the multiplier `iξ_j`, Nyquist bins zeroed.
pub fn spectral_derivative(f: &LineSignal, axis: usize) -> Result<LineSignal> {
    let g = f.grid();
    if axis >= g.dim() {
        return Err(invalid("axis", format!("{axis} ≥ dimension {}", g.dim())));
    }
    let s = dft_line(f).without_nyquist();
    Ok(idft_line(&s.apply(|xi| C64::new(0.0, xi[axis]))))
}

/// Fourth-order central difference along `axis`, periodic at the edges.
pub fn fd_derivative(f: &LineSignal, axis: usize) -> Result<LineSignal> {
    let g = f.grid();
    if axis >= g.dim() {
        return Err(invalid("axis", format!("{axis} ≥ dimension {}", g.dim())));
    }
    let h = g.spacing();
    let shifted = |k: i64| {
        let mut step = [0i64; 2];
        step[axis] = k;
        f.shift(step)
    };
    let (m2, m1, p1, p2) = (shifted(2), shifted(1), shifted(-1), shifted(-2));
    let out = (0..g.len())
        .map(|i| (m2.values()[i] - 8.0 * m1.values()[i] + 8.0 * p1.values()[i] - p2.values()[i]) / (12.0 * h))
        .collect();
    LineSignal::new(g, out)
}

/// Max `|spectral ∂_j f - finite-difference ∂_j f|` over all nodes and axes.
pub fn derivative_multiplier_check(f: &LineSignal) -> Result<f64> {
    let mut worst = 0.0_f64;
    for axis in 0..f.grid().dim() {
        let a = spectral_derivative(f, axis)?;
        let b = fd_derivative(f, axis)?;
        worst = worst.max(a.max_abs_diff(&b));
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HausdorffYoung {
    /// `‖f̂‖_{p'} / ‖f‖_p` with Lebesgue measure on both sides.
    pub ratio: f64,
    /// Interpolated constant `(2π)^{d/p'}`.
    pub bound: f64,
}

pub fn hausdorff_young_line(f: &LineSignal, p: f64) -> Result<HausdorffYoung> {
    check_exponent(p)?;
    if !(p > 1.0 && p <= 2.0) {
        return Err(invalid("p", format!("{p} not in (1, 2]")));
    }
    let g = f.grid();
    let q = conjugate(p);
    let s = dft_line(f);
    let w = g.frequency_step().powi(g.dim() as i32);
    let top = lp_of_magnitudes(s.values().iter().map(|v| v.norm()), w, q);
    let bottom = lp_norm(f, p)?;
    if bottom == 0.0 {
        return Err(invalid("f", "zero signal"));
    }
    Ok(HausdorffYoung {
        ratio: top / bottom,
        bound: (2.0 * PI).powf(g.dim() as f64 / q),
    })
}

/// Zero signal helper for tests and callers.
pub fn zero_like(f: &LineSignal) -> LineSignal {
    f.map(|_| ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::LineGrid;

    #[test]
    fn gaussian_derivative() {
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        assert!(derivative_multiplier_check(&f).unwrap() < 1e-6);
        assert_eq!(derivative_multiplier_check(&zero_like(&f)).unwrap(), 0.0);
    }

    #[test]
    fn modulated_gaussian_symbolic() {
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp() * (3.0 * x[0]).cos());
        let d = spectral_derivative(&f, 0).unwrap();
        let want = LineSignal::from_real_fn(g, |x| {
            let x = x[0];
            -(-x * x / 2.0).exp() * (x * (3.0 * x).cos() + 3.0 * (3.0 * x).sin())
        });
        assert!(d.max_abs_diff(&want) < 1e-10);
    }

    #[test]
    fn plancherel_ratio() {
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        let r = hausdorff_young_line(&f, 2.0).unwrap();
        assert!((r.ratio - (2.0 * PI).sqrt()).abs() < 1e-8);
        assert!((r.bound - (2.0 * PI).sqrt()).abs() < 1e-15);
        assert!(hausdorff_young_line(&f, 3.0).is_err());
    }
}
