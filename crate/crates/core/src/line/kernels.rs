//! Dirichlet, Fejér, Poisson and Gauss kernels on `ℝ^d`.

use std::f64::consts::PI;

use crate::catalog::{c_d, sinc};
use crate::error::{invalid, Result};
use crate::grid::{LineGrid, LineSignal, C64};
use crate::torus::kernels::{KernelAxiomReport, TailMass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKernelKind {
    Dirichlet,
    Fejer,
    Poisson,
    Gauss,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineKernelSpec {
    pub kind: LineKernelKind,
    pub omega: f64,
    pub dim: usize,
}

impl LineKernelSpec {
    pub fn new(kind: LineKernelKind, omega: f64, dim: usize) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(invalid("omega", format!("{omega} must be positive")));
        }
        if dim != 1 && dim != 2 {
            return Err(invalid("dim", format!("{dim} not in {{1, 2}}")));
        }
        Ok(Self { kind, omega, dim })
    }

    pub fn sample(&self, grid: LineGrid) -> LineSignal {
        LineSignal::from_real_fn(grid, |x| kernel_line_eval(*self, x))
    }
}

/// `ω^d k(ωx)` for the Dirichlet, Fejér, Poisson and Gauss functions.
pub fn kernel_line_eval(spec: LineKernelSpec, x: &[f64]) -> f64 {
    let w = spec.omega;
    let d = x.len();
    let r2: f64 = x.iter().map(|v| v * v).sum();
    match spec.kind {
        LineKernelKind::Dirichlet => x.iter().map(|v| w / PI * sinc(w * v)).product(),
        LineKernelKind::Fejer => x.iter().map(|v| w / (2.0 * PI) * sinc(w * v / 2.0).powi(2)).product(),
        LineKernelKind::Poisson => c_d(d) / w / (r2 + 1.0 / (w * w)).powf((d as f64 + 1.0) / 2.0),
        LineKernelKind::Gauss => w.powi(d as i32) / (2.0 * PI).powf(d as f64 / 2.0) * (-w * w * r2 / 2.0).exp(),
    }
}

/// Kernel quantities by the Riemann sum over `grid`; tails use `|x| > δ`.
pub fn kernel_axioms_line(spec: LineKernelSpec, deltas: &[f64], grid: LineGrid) -> Result<KernelAxiomReport> {
    if grid.dim() != spec.dim {
        return Err(invalid("grid", "dimension differs from the kernel"));
    }
    if let Some(d) = deltas.iter().find(|d| !(**d > 0.0)) {
        return Err(invalid("delta", format!("{d} must be positive")));
    }
    let w = grid.cell_measure();
    let vals: Vec<(f64, f64)> = (0..grid.len())
        .map(|k| {
            let p = grid.point(k);
            let x = &p[..grid.dim()];
            (x.iter().map(|v| v * v).sum::<f64>().sqrt(), kernel_line_eval(spec, x))
        })
        .collect();
    let s1 = vals.iter().map(|v| v.1).sum::<f64>() * w;
    let s2 = vals.iter().map(|v| v.1.abs()).sum::<f64>() * w;
    let tails = deltas
        .iter()
        .map(|&delta| {
            let (mut s3, mut s4) = (0.0, 0.0_f64);
            for (_, k) in vals.iter().filter(|(r, _)| *r > delta) {
                s3 += k.abs() * w;
                s4 = s4.max(k.abs());
            }
            TailMass { delta, s3, s4 }
        })
        .collect();
    Ok(KernelAxiomReport {
        s1: C64::new(s1, 0.0),
        s2,
        tails,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_at_zero() {
        let s = LineKernelSpec::new(LineKernelKind::Dirichlet, 3.0, 1).unwrap();
        assert!((kernel_line_eval(s, &[0.0]) - 3.0 / PI).abs() < 1e-15);
        assert!(LineKernelSpec::new(LineKernelKind::Gauss, 0.0, 1).is_err());
    }

    #[test]
    fn fejer_mass() {
        // tail beyond L is about 2/(πωL)
        let s = LineKernelSpec::new(LineKernelKind::Fejer, 8.0, 1).unwrap();
        let g = LineGrid::new(1, (1 << 17) as f64, 1 << 20).unwrap();
        let r = kernel_axioms_line(s, &[1.0], g).unwrap();
        assert!((r.s1.re - 1.0).abs() < 1e-6, "{}", r.s1);
    }

    #[test]
    fn gauss_tail_sup_shrinks() {
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let sups: Vec<f64> = [4.0, 8.0, 16.0, 32.0]
            .iter()
            .map(|&w| {
                let s = LineKernelSpec::new(LineKernelKind::Gauss, w, 1).unwrap();
                kernel_axioms_line(s, &[0.5], g).unwrap().tails[0].s4
            })
            .collect();
        assert!(sups.windows(2).all(|w| w[1] < w[0]));
    }
}
