use crate::error::{invalid, Result};
use crate::fft::periodic_convolve;
use crate::grid::{LineSignal, TorusSignal, C64};
use crate::norms::{lp_norm, Measured};
use crate::torus::convolve_torus;

fn recip(p: f64) -> f64 {
    if p.is_infinite() {
        0.0
    } else {
        1.0 / p
    }
}

fn check_p(name: &'static str, p: f64) -> Result<()> {
    if !(p >= 1.0) {
        return Err(invalid(name, format!("{p} not in [1, ∞]")));
    }
    Ok(())
}

/// `‖f‖_{p0}^{1-θ} ‖f‖_{p1}^θ - ‖f‖_p` with `1/p = (1-θ)/p0 + θ/p1`.
pub fn lp_interpolation_residual<F: Measured + ?Sized>(f: &F, p0: f64, p1: f64, theta: f64) -> Result<f64> {
    check_p("p0", p0)?;
    check_p("p1", p1)?;
    if !(p0 < p1) {
        return Err(invalid("p1", format!("need p0 < p1, got {p0} and {p1}")));
    }
    if !(theta > 0.0 && theta < 1.0) {
        return Err(invalid("theta", format!("{theta} not in (0, 1)")));
    }
    let p = 1.0 / ((1.0 - theta) * recip(p0) + theta * recip(p1));
    Ok(lp_norm(f, p0)?.powf(1.0 - theta) * lp_norm(f, p1)?.powf(theta) - lp_norm(f, p)?)
}

/// Convolution on the signal's own group and measure.
pub trait Convolve: Measured + Sized {
    fn convolve(&self, other: &Self) -> Result<Self>;
}

impl Convolve for TorusSignal {
    fn convolve(&self, other: &Self) -> Result<Self> {
        convolve_torus(self, other)
    }
}

impl Convolve for LineSignal {
    fn convolve(&self, other: &Self) -> Result<Self> {
        convolve_line(self, other)
    }
}

/// `Σ_y h^d f(x-y) g(y)` over the grid nodes `y`, periodic in `[-L, L)^d`.
pub fn convolve_line(f: &LineSignal, g: &LineSignal) -> Result<LineSignal> {
    let grid = f.grid();
    if grid != g.grid() {
        return Err(crate::error::Error::GridMismatch("convolution operands".into()));
    }
    let n = grid.points();
    let d = grid.dim();
    // node x_k = (k - n/2)h, so g at offset o lives at index o + n/2
    let rot = g.shift([-(n as i64) / 2, -(n as i64) / 2 * (d as i64 - 1)]);
    let w = grid.cell_measure();
    let out: Vec<C64> = periodic_convolve(f.values(), rot.values(), n, d).iter().map(|v| v * w).collect();
    LineSignal::new(grid, out)
}

/// `‖f‖_p ‖g‖_q - ‖f * g‖_r` with `1/p + 1/q = 1/r + 1`.
pub fn young_residual<S: Convolve>(f: &S, g: &S, p: f64, q: f64, r: f64) -> Result<f64> {
    for (name, v) in [("p", p), ("q", q), ("r", r)] {
        check_p(name, v)?;
    }
    if (recip(p) + recip(q) - recip(r) - 1.0).abs() > 1e-12 {
        return Err(invalid("r", format!("1/{p} + 1/{q} ≠ 1/{r} + 1")));
    }
    Ok(lp_norm(f, p)? * lp_norm(g, q)? - lp_norm(&f.convolve(g)?, r)?)
}

/// `2 p^{1/p} (1/(p-p0) + 1/(p1-p))^{1/p} A0^{1-θ} A1^θ`.
///
/// `p1 = ∞` takes the limit, where the second fraction vanishes and `θ = 1 - p0/p`.
pub fn marcinkiewicz_ceiling(p0: f64, p1: f64, p: f64, a0: f64, a1: f64) -> Result<f64> {
    check_p("p0", p0)?;
    if !(p0 < p && p < p1) || p.is_infinite() {
        return Err(invalid("p", format!("need {p0} < p < {p1}, got {p}")));
    }
    if !(a0 > 0.0 && a1 > 0.0) {
        return Err(invalid("a0", "constants must be positive"));
    }
    let theta = (1.0 / p0 - 1.0 / p) / (1.0 / p0 - recip(p1));
    let s = 1.0 / (p - p0) + recip(p1 - p);
    Ok(2.0 * p.powf(1.0 / p) * s.powf(1.0 / p) * a0.powf(1.0 - theta) * a1.powf(theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::random_real_torus;
    use crate::grid::{LineGrid, TorusGrid};
    use std::f64::consts::PI;

    #[test]
    fn interpolation_exact_cases() {
        let g = TorusGrid::new(64).unwrap();
        let c = TorusSignal::constant(g, C64::new(2.5, 0.0));
        assert!(lp_interpolation_residual(&c, 1.0, 4.0, 0.3).unwrap().abs() < 1e-14);
        let ind = TorusSignal::from_real_fn(g, |t| if t < -1.0 { 1.0 } else { 0.0 });
        assert!(lp_interpolation_residual(&ind, 1.5, f64::INFINITY, 0.6).unwrap().abs() < 1e-14);
        let f = random_real_torus(g, 3);
        assert!(lp_interpolation_residual(&f, 1.0, 3.0, 0.5).unwrap() >= -1e-12);
        assert!(lp_interpolation_residual(&f, 2.0, 2.0, 0.5).is_err());
        assert!(lp_interpolation_residual(&f, 1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn line_convolution_of_gaussians() {
        let g = LineGrid::new(1, 16.0, 512).unwrap();
        let a = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        let c = convolve_line(&a, &a).unwrap();
        let want = LineSignal::from_real_fn(g, |x| PI.sqrt() * (-x[0] * x[0] / 4.0).exp());
        assert!(c.max_abs_diff(&want) < 1e-12);
        let g2 = LineGrid::new(2, 12.0, 128).unwrap();
        let a2 = LineSignal::from_real_fn(g2, |x| (-(x[0] * x[0] + x[1] * x[1]) / 2.0).exp());
        let c2 = convolve_line(&a2, &a2).unwrap();
        let want2 = LineSignal::from_real_fn(g2, |x| PI * (-(x[0] * x[0] + x[1] * x[1]) / 4.0).exp());
        assert!(c2.max_abs_diff(&want2) < 1e-10, "{}", c2.max_abs_diff(&want2));
    }

    #[test]
    fn young_on_gaussians() {
        // p = q = 4/3, r = 2: ‖e^{-x²/2}‖_p = (2π/p)^{1/2p}, the convolution is √π e^{-x²/4}
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let a = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        let p = 4.0 / 3.0;
        let np = (2.0 * PI / p).powf(1.0 / (2.0 * p));
        let nconv = PI.sqrt() * (2.0 * PI).powf(0.25);
        let want = np * np - nconv;
        let r = young_residual(&a, &a, p, p, 2.0).unwrap();
        assert!((r - want).abs() < 1e-9 && r > 0.0);
        assert!(young_residual(&a, &a, 2.0, 2.0, 2.0).is_err());
        let t = TorusGrid::new(128).unwrap();
        let (f, h) = (random_real_torus(t, 1), random_real_torus(t, 2));
        assert!(young_residual(&f, &h, 3.0, 1.0, 3.0).unwrap() >= -1e-10);
        assert!(young_residual(&f, &h, 2.0, 2.0, f64::INFINITY).unwrap() >= -1e-10);
    }

    #[test]
    fn ceiling_values() {
        let c = marcinkiewicz_ceiling(1.0, f64::INFINITY, 2.0, 3.0, 1.0).unwrap();
        assert!((c - 2.0 * 6f64.sqrt()).abs() < 1e-12);
        let v: Vec<f64> = [1.9, 1.5, 1.2, 1.05, 1.01]
            .iter()
            .map(|&p| marcinkiewicz_ceiling(1.0, 4.0, p, 3.0, 1.0).unwrap())
            .collect();
        assert!(v.windows(2).all(|w| w[1] > w[0]));
        assert!(marcinkiewicz_ceiling(1.0, 4.0, 1.0, 3.0, 1.0).is_err());
        assert!(marcinkiewicz_ceiling(1.0, 4.0, 4.0, 3.0, 1.0).is_err());
    }
}
