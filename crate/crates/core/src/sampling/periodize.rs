use std::f64::consts::PI;

use gauss_quad::GaussLegendre;
use serde::Serialize;

use crate::catalog::LineFunction;
use crate::error::{invalid, Error, Result};
use crate::grid::{LineSignal, TorusGrid, TorusSignal, C64};

/// Truncation control for wrap sums `Σ_n f(x + 2πn)` and frequency sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WrapSpec {
    pub wrap_tol: f64,
    pub max_shells: usize,
    /// Add `∫_{k+½}^∞ (f(x+2πs) + f(x-2πs)) ds` for the shells not summed.
    ///
    /// With the tail the stopping test is the midpoint error of the newest
    /// shell, which for `|f| ~ x^{-2}` decays like `k^{-4}` instead of `k^{-2}`.
    pub tail_integral: bool,
}

impl Default for WrapSpec {
    fn default() -> Self {
        Self {
            wrap_tol: 1e-12,
            max_shells: 100_000,
            tail_integral: false,
        }
    }
}

impl WrapSpec {
    fn validate(&self) -> Result<()> {
        if !(self.wrap_tol > 0.0) {
            return Err(invalid("wrap_tol", "must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeriodizationResult {
    pub signal: TorusSignal,
    /// Shells `±k` summed, `k = 1..=shells`.
    pub shells: usize,
    /// Sup over nodes of the newest shell (or of its midpoint error when a tail is added).
    pub residual: f64,
}

struct WrapSum {
    values: Vec<f64>,
    shells: usize,
    residual: f64,
}

fn gl(a: f64, b: f64, panels: usize, rule: &GaussLegendre, f: impl Fn(f64) -> f64) -> f64 {
    let w = (b - a) / panels as f64;
    (0..panels).map(|i| rule.integrate(a + w * i as f64, a + w * (i + 1) as f64, &f)).sum()
}

/// `Σ_n f(t + 2πn)` at each `t`, shells added until the newest is below tolerance.
fn wrap_sum(f: &dyn Fn(f64) -> f64, ts: &[f64], spec: WrapSpec) -> Result<WrapSum> {
    spec.validate()?;
    let rule = GaussLegendre::new(12).map_err(|e| invalid("degree", e.to_string()))?;
    let pair = |t: f64, s: f64| f(t + 2.0 * PI * s) + f(t - 2.0 * PI * s);
    let mut shells: Vec<Vec<f64>> = Vec::new();
    let mut k = 0usize;
    let residual = loop {
        k += 1;
        if k > spec.max_shells {
            return Err(Error::Precondition(format!(
                "wrap sum above {} after {} shells",
                spec.wrap_tol, spec.max_shells
            )));
        }
        let kf = k as f64;
        let shell: Vec<f64> = ts.iter().map(|&t| pair(t, kf)).collect();
        let r = ts
            .iter()
            .zip(&shell)
            .map(|(&t, v)| {
                if spec.tail_integral {
                    (v - gl(kf - 0.5, kf + 0.5, 1, &rule, |s| pair(t, s))).abs()
                } else {
                    v.abs()
                }
            })
            .fold(0.0, f64::max);
        shells.push(shell);
        if r < spec.wrap_tol {
            break r;
        }
    };
    let values = ts
        .iter()
        .enumerate()
        .map(|(j, &t)| {
            let mut acc: f64 = shells.iter().rev().map(|s| s[j]).sum();
            if spec.tail_integral {
                // s = (k+½)/v maps [k+½, ∞) onto (0, 1]
                let a = k as f64 + 0.5;
                acc += gl(0.0, 1.0, 16, &rule, |v| if v == 0.0 { 0.0 } else { pair(t, a / v) * a / (v * v) });
            }
            acc + f(t)
        })
        .collect();
    Ok(WrapSum {
        values,
        shells: k,
        residual,
    })
}

/// `Pe(f)(t) = 2π Σ_n f(t + 2πn)` on the torus nodes.
pub fn periodize(f: &dyn Fn(f64) -> f64, grid: TorusGrid, spec: WrapSpec) -> Result<PeriodizationResult> {
    let w = wrap_sum(f, &grid.nodes(), spec)?;
    let values = w.values.iter().map(|v| C64::new(2.0 * PI * v, 0.0)).collect();
    Ok(PeriodizationResult {
        signal: TorusSignal::new(grid, values)?,
        shells: w.shells,
        residual: w.residual,
    })
}

/// Fold a line signal on `[-2^q π, 2^q π)`, `q ≥ 1`, onto `N/2^q` torus nodes.
///
/// The residual is the sup of the two outermost copies; it must not exceed
/// `wrap_tol`.
pub fn periodize_signal(f: &LineSignal, wrap_tol: f64) -> Result<PeriodizationResult> {
    let g = f.grid();
    if g.dim() != 1 {
        return Err(invalid("dim", "periodization is one-dimensional"));
    }
    let ratio = g.half_width() / PI;
    let q = ratio.log2().round();
    if q < 1.0 || (ratio - 2f64.powi(q as i32)).abs() > 1e-12 * ratio {
        return Err(invalid("half_width", format!("{} is not 2^q π with q ≥ 1", g.half_width())));
    }
    let copies = 1usize << q as u32;
    let m = g.points() / copies;
    let grid = TorusGrid::new(m)?;
    let v = f.values();
    // -2^q π ≡ 0 (mod 2π), so line node `i` lands on torus node `i + m/2`
    let values: Vec<C64> = (0..m)
        .map(|t| {
            let i = (t + m / 2) % m;
            (0..copies).rev().map(|c| v[i + m * c]).sum::<C64>() * (2.0 * PI)
        })
        .collect();
    let residual = (0..m)
        .map(|i| v[i].norm().max(v[i + m * (copies - 1)].norm()))
        .fold(0.0, f64::max);
    if residual > wrap_tol {
        return Err(Error::Precondition(format!(
            "outermost copy reaches {residual:e} > {wrap_tol:e}; widen the domain"
        )));
    }
    Ok(PeriodizationResult {
        signal: TorusSignal::new(grid, values)?,
        shells: copies / 2,
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoissonSummation {
    /// `2π Σ_n f(x + 2πn)`.
    pub space: f64,
    /// `Σ_j f̂(j) e^{ijx}` (real part; the catalog entries are even).
    pub freq: f64,
    pub residual: f64,
    pub shells: usize,
    pub freq_terms: usize,
}

fn qualifies(f: &LineFunction) -> bool {
    matches!(
        f,
        LineFunction::Gaussian
            | LineFunction::GaussFn
            | LineFunction::PoissonFn
            | LineFunction::ExpAbs
            | LineFunction::Tent
            | LineFunction::FejerFn
    )
}

/// Both sides of the summation formula at `x`, each truncated by `spec`.
///
/// Only catalog entries whose function and transform both decay faster than
/// `|x|^{-1}` are accepted.
pub fn poisson_summation_residual(f: LineFunction, x: f64, spec: WrapSpec) -> Result<PoissonSummation> {
    if !qualifies(&f) {
        return Err(Error::Precondition(format!("{} fails the decay hypotheses", f.name())));
    }
    let spatial = |t: f64| f.spatial(&[t]).expect("closed form").re;
    let w = wrap_sum(&spatial, &[x], spec)?;
    let spectral = |j: f64| f.spectral(&[j]).expect("closed form").re;
    let mut terms = Vec::new();
    let mut k = 0usize;
    loop {
        k += 1;
        if k > spec.max_shells {
            return Err(Error::Precondition(format!("frequency sum above tolerance after {k} terms")));
        }
        let kf = k as f64;
        let (a, b) = (spectral(kf), spectral(-kf));
        terms.push(a * (kf * x).cos() + b * (kf * x).cos());
        if a.abs() + b.abs() < spec.wrap_tol {
            break;
        }
    }
    let space = 2.0 * PI * w.values[0];
    let freq = spectral(0.0) + terms.iter().rev().sum::<f64>();
    Ok(PoissonSummation {
        space,
        freq,
        residual: (space - freq).abs(),
        shells: w.shells,
        freq_terms: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::dft_analyze;
    use crate::norms::lp_norm;
    use crate::torus::{convolve_torus, kernel_eval, TorusKernelSpec};

    #[test]
    fn indicator_example() {
        let g = TorusGrid::new(64).unwrap();
        let f = |x: f64| if (-PI..2.0 * PI).contains(&x) { 1.0 } else { 0.0 };
        let p = periodize(&f, g, WrapSpec::default()).unwrap();
        for (j, v) in p.signal.values().iter().enumerate() {
            let want = if g.node(j) < 0.0 { 4.0 * PI } else { 2.0 * PI };
            assert_eq!(v.re, want);
        }
    }

    #[test]
    fn gaussian_coefficients() {
        let g = TorusGrid::new(64).unwrap();
        let f = |x: f64| (-x * x / 2.0).exp();
        let p = periodize(&f, g, WrapSpec::default()).unwrap();
        assert!(p.shells <= 3);
        let c = dft_analyze(&p.signal);
        for j in -10..=10i64 {
            let want = (2.0 * PI).sqrt() * (-(j * j) as f64 / 2.0).exp();
            assert!((c.get(j).re - want).abs() < 1e-10);
        }
    }

    #[test]
    fn convolution_commutes() {
        let g = TorusGrid::new(128).unwrap();
        let (a, b) = (0.7, 1.9);
        let fa = move |x: f64| (-x * x / (2.0 * a)).exp();
        let fb = move |x: f64| (-x * x / (2.0 * b)).exp();
        let conv = move |x: f64| (2.0 * PI * a * b / (a + b)).sqrt() * (-x * x / (2.0 * (a + b))).exp();
        let s = WrapSpec::default();
        let lhs = periodize(&conv, g, s).unwrap().signal;
        let rhs = convolve_torus(&periodize(&fa, g, s).unwrap().signal, &periodize(&fb, g, s).unwrap().signal).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-9);
    }

    #[test]
    fn poisson_kernel_periodizes() {
        let g = TorusGrid::new(64).unwrap();
        let spec = WrapSpec {
            tail_integral: true,
            ..WrapSpec::default()
        };
        for omega in [0.5, 2.0, 10.0] {
            let p_line = move |x: f64| (1.0 / omega) / (PI * (x * x + 1.0 / (omega * omega)));
            let p = periodize(&p_line, g, spec).unwrap();
            let r = (-1.0 / omega).exp();
            let want = TorusSignal::from_real_fn(g, |t| kernel_eval(TorusKernelSpec::Poisson(r), t));
            assert!(p.signal.max_abs_diff(&want) < 1e-8, "{omega} {}", p.signal.max_abs_diff(&want));
        }
    }

    #[test]
    fn summation_formula() {
        for x in [0.0, 1.0, PI] {
            let r = poisson_summation_residual(LineFunction::Gaussian, x, WrapSpec::default()).unwrap();
            assert!(r.residual < 1e-12);
        }
        // x = π: both sides again at ten times the terms
        let space: f64 = (-40..=40).map(|n| (-(PI + 2.0 * PI * n as f64).powi(2) / 2.0).exp()).sum::<f64>() * 2.0 * PI;
        let freq: f64 = (-100..=100)
            .map(|j| (2.0 * PI).sqrt() * (-(j * j) as f64 / 2.0).exp() * (j as f64 * PI).cos())
            .sum();
        let r = poisson_summation_residual(LineFunction::Gaussian, PI, WrapSpec::default()).unwrap();
        assert!((r.space - space).abs() < 1e-12 && (r.freq - freq).abs() < 1e-12);
        assert!(poisson_summation_residual(LineFunction::Box, 0.0, WrapSpec::default()).is_err());
    }

    #[test]
    fn signal_folding() {
        let g = crate::grid::LineGrid::new(1, 8.0 * PI, 1024).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        let p = periodize_signal(&f, 1e-12).unwrap();
        assert_eq!(p.signal.grid().size(), 128);
        let direct = periodize(&|x: f64| (-x * x / 2.0).exp(), p.signal.grid(), WrapSpec::default()).unwrap();
        assert!(p.signal.max_abs_diff(&direct.signal) < 1e-12);
        assert!(lp_norm(&p.signal, 1.0).unwrap() <= lp_norm(&f, 1.0).unwrap() * (1.0 + 1e-12));
        let narrow = crate::grid::LineGrid::new(1, 2.0 * PI, 256).unwrap();
        let wide = LineSignal::from_real_fn(narrow, |x| (-x[0] * x[0] / 20.0).exp());
        assert!(periodize_signal(&wide, 1e-12).is_err());
    }
}
