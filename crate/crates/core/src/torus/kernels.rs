//! Dirichlet, Fejér, Poisson and Gauss kernels on the torus.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::grid::{TorusGrid, TorusSignal, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TorusKernelSpec {
    Dirichlet(usize),
    Fejer(usize),
    /// Radius `r ∈ (0, 1)`.
    Poisson(f64),
    /// Time `s > 0`.
    Gauss(f64),
}

impl TorusKernelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Poisson(r) if !(r > 0.0 && r < 1.0) => Err(invalid("r", format!("{r} not in (0, 1)"))),
            Self::Gauss(s) if !(s > 0.0 && s.is_finite()) => Err(invalid("s", format!("{s} must be positive"))),
            _ => Ok(()),
        }
    }

    /// Fourier coefficient of the kernel at frequency `j`.
    pub fn multiplier(&self, j: i64) -> f64 {
        let a = j.unsigned_abs() as f64;
        match *self {
            Self::Dirichlet(n) => {
                if a <= n as f64 {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Fejer(n) => (1.0 - a / (n as f64 + 1.0)).max(0.0),
            Self::Poisson(r) => r.powf(a),
            Self::Gauss(s) => (-a * a * s).exp(),
        }
    }

    pub fn sample(&self, grid: TorusGrid) -> TorusSignal {
        TorusSignal::from_real_fn(grid, |t| kernel_eval(*self, t))
    }
}

const SINGULAR: f64 = 1e-8;
const IMAGES: i32 = 8;

/// Closed form of the kernel at `t`, with limits at removable singularities.
pub fn kernel_eval(spec: TorusKernelSpec, t: f64) -> f64 {
    match spec {
        TorusKernelSpec::Dirichlet(n) => {
            let s = (t / 2.0).sin();
            if s.abs() < SINGULAR {
                2.0 * n as f64 + 1.0
            } else {
                ((n as f64 + 0.5) * t).sin() / s
            }
        }
        TorusKernelSpec::Fejer(n) => {
            let m = n as f64 + 1.0;
            let s = (t / 2.0).sin();
            if s.abs() < SINGULAR {
                m
            } else {
                ((m * t / 2.0).sin() / s).powi(2) / m
            }
        }
        TorusKernelSpec::Poisson(r) => (1.0 - r * r) / (1.0 - 2.0 * r * t.cos() + r * r),
        TorusKernelSpec::Gauss(s) => {
            let c = (PI / s).sqrt();
            c * (-IMAGES..=IMAGES)
                .map(|n| {
                    let u = t + 2.0 * PI * n as f64;
                    (-u * u / (4.0 * s)).exp()
                })
                .sum::<f64>()
        }
    }
}

/// The kernel as a (truncated) Fourier series at `t`.
pub fn kernel_series(spec: TorusKernelSpec, t: f64) -> f64 {
    let cut = 1e-16_f64;
    let terms = match spec {
        TorusKernelSpec::Dirichlet(n) | TorusKernelSpec::Fejer(n) => n,
        TorusKernelSpec::Poisson(r) => (cut.ln() / r.ln()).ceil() as usize,
        TorusKernelSpec::Gauss(s) => (-cut.ln() / s).sqrt().ceil() as usize,
    };
    1.0 + 2.0
        * (1..=terms)
            .rev()
            .map(|j| spec.multiplier(j as i64) * (j as f64 * t).cos())
            .sum::<f64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailMass {
    pub delta: f64,
    /// Normalized mass of `|k|` on `δ < |t| < π`.
    pub s3: f64,
    /// Sup of `|k|` on `δ < |t| < π`.
    pub s4: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelAxiomReport {
    pub s1: C64,
    pub s2: f64,
    pub tails: Vec<TailMass>,
}

/// Summability-kernel quantities by the N-point rule on `grid`.
pub fn kernel_axioms(spec: TorusKernelSpec, deltas: &[f64], grid: TorusGrid) -> Result<KernelAxiomReport> {
    spec.validate()?;
    if let Some(d) = deltas.iter().find(|d| !(**d > 0.0 && **d < PI)) {
        return Err(invalid("delta", format!("{d} not in (0, π)")));
    }
    let n = grid.size() as f64;
    let vals: Vec<(f64, f64)> = grid.nodes().into_iter().map(|t| (t, kernel_eval(spec, t))).collect();
    let s1 = vals.iter().map(|v| v.1).sum::<f64>() / n;
    let s2 = vals.iter().map(|v| v.1.abs()).sum::<f64>() / n;
    let tails = deltas
        .iter()
        .map(|&delta| {
            let outside = vals.iter().filter(|(t, _)| t.abs() > delta && t.abs() < PI);
            let (mut s3, mut s4) = (0.0, 0.0_f64);
            for (_, k) in outside {
                s3 += k.abs() / n;
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
    fn values_at_zero() {
        assert_eq!(kernel_eval(TorusKernelSpec::Dirichlet(5), 0.0), 11.0);
        assert_eq!(kernel_eval(TorusKernelSpec::Fejer(9), 0.0), 10.0);
        assert!((kernel_eval(TorusKernelSpec::Poisson(0.5), 0.0) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn cross_forms_agree() {
        let g = TorusGrid::new(256).unwrap();
        let specs = [
            TorusKernelSpec::Dirichlet(0),
            TorusKernelSpec::Dirichlet(17),
            TorusKernelSpec::Fejer(17),
            TorusKernelSpec::Poisson(0.9),
            TorusKernelSpec::Gauss(0.05),
        ];
        for s in specs {
            for t in g.nodes() {
                let a = kernel_eval(s, t);
                let b = kernel_series(s, t);
                assert!((a - b).abs() < 1e-10, "{s:?} at {t}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn fejer_axioms() {
        let g = TorusGrid::new(1024).unwrap();
        let r = kernel_axioms(TorusKernelSpec::Fejer(20), &[0.5, 1.0, 2.0], g).unwrap();
        assert!((r.s1.re - 1.0).abs() < 1e-12);
        assert!((r.s2 - 1.0).abs() < 1e-12);
        assert!(r.tails.windows(2).all(|w| w[1].s3 <= w[0].s3));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(TorusKernelSpec::Poisson(1.0).validate().is_err());
        assert!(TorusKernelSpec::Gauss(0.0).validate().is_err());
        let g = TorusGrid::new(8).unwrap();
        assert!(kernel_axioms(TorusKernelSpec::Fejer(1), &[4.0], g).is_err());
    }
}
