//! Lebesgue, Fejér and Poisson maximal functions on the torus.

use crate::error::{invalid, Result};
use crate::grid::{TorusSignal, C64};
use crate::torus::kernels::{kernel_eval, TorusKernelSpec};
use crate::torus::means::{summability_mean, SummabilityMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusMaximalKind {
    /// Parameter `m`: centered box of `2m + 1` nodes, half-width `(m + ½)Δ`;
    /// `m ≥ N/2` means the whole circle.
    Lebesgue,
    /// Parameter `n`: Fejér mean `σ_n`.
    Fejer,
    /// Parameter `r ∈ (0, 1)`: convolution with the sampled Poisson kernel
    /// normalized to unit mass.
    Poisson,
}

fn box_means(f: &TorusSignal, m: usize) -> Vec<C64> {
    let n = f.grid().size();
    let v = f.values();
    if 2 * m + 1 >= n {
        let mean: C64 = v.iter().sum::<C64>() / n as f64;
        return vec![mean; n];
    }
    let mut pre = vec![C64::new(0.0, 0.0); 3 * n + 1];
    for i in 0..3 * n {
        pre[i + 1] = pre[i] + v[i % n];
    }
    let w = (2 * m + 1) as f64;
    (0..n).map(|j| (pre[j + n + m + 1] - pre[j + n - m]) / w).collect()
}

fn poisson_weights(n: usize, r: f64) -> Vec<C64> {
    let h = 2.0 * std::f64::consts::PI / n as f64;
    let raw: Vec<f64> = (0..n)
        .map(|k| {
            let kk = if k <= n / 2 { k as f64 } else { k as f64 - n as f64 };
            kernel_eval(TorusKernelSpec::Poisson(r), kk * h)
        })
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|w| C64::new(w / total, 0.0)).collect()
}

/// `sup |k_param * f|` over the schedule.
pub fn torus_maximal(kind: TorusMaximalKind, f: &TorusSignal, params: &[f64]) -> Result<TorusSignal> {
    if params.is_empty() {
        return Err(invalid("params", "empty schedule"));
    }
    let n = f.grid().size();
    let mut best = vec![0.0_f64; n];
    for &p in params {
        let vals: Vec<C64> = match kind {
            TorusMaximalKind::Lebesgue => {
                if p < 0.0 || p.fract() != 0.0 {
                    return Err(invalid("m", format!("{p} is not a nonnegative integer")));
                }
                box_means(f, p as usize)
            }
            TorusMaximalKind::Fejer => {
                if p < 0.0 || p.fract() != 0.0 {
                    return Err(invalid("n", format!("{p} is not a nonnegative integer")));
                }
                summability_mean(SummabilityMethod::Cesaro(p as usize), f)?.into_values()
            }
            TorusMaximalKind::Poisson => {
                TorusKernelSpec::Poisson(p).validate()?;
                crate::fft::circular_convolve(f.values(), &poisson_weights(n, p))
            }
        };
        for (b, v) in best.iter_mut().zip(&vals) {
            *b = b.max(v.norm());
        }
    }
    TorusSignal::new(f.grid(), best.into_iter().map(|v| C64::new(v, 0.0)).collect())
}

/// Every Lebesgue box: `m = 0, ..., N/2`.
pub fn all_boxes(size: usize) -> Vec<f64> {
    (0..=size / 2).map(|m| m as f64).collect()
}
