//! Weak-type ratio tables `λ·μ{|Tf| > λ} / ‖f‖₁`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::norms::{distribution_function, Measured};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeakNormReport {
    pub lambda_grid: Vec<f64>,
    pub ratios: Vec<f64>,
    pub sup_ratio: f64,
}

/// Ratio table on a λ grid; `values` is `Tf` sampled with its measure.
pub fn weak_norm_report<F: Measured + ?Sized>(values: &F, f_l1: f64, lambda_grid: &[f64]) -> Result<WeakNormReport> {
    if !(f_l1 > 0.0) {
        return Err(invalid("f_l1", "‖f‖₁ must be positive"));
    }
    let ratios = lambda_grid
        .iter()
        .map(|&l| Ok(l * distribution_function(values, l)? / f_l1))
        .collect::<Result<Vec<_>>>()?;
    let sup_ratio = ratios.iter().cloned().fold(0.0, f64::max);
    Ok(WeakNormReport {
        lambda_grid: lambda_grid.to_vec(),
        ratios,
        sup_ratio,
    })
}

/// `sup_{λ>0} λ·μ{|Tf| > λ} / ‖f‖₁`, attained as `λ` increases to a sample modulus.
pub fn weak_ratio_sup<F: Measured + ?Sized>(values: &F, f_l1: f64) -> Result<f64> {
    if !(f_l1 > 0.0) {
        return Err(invalid("f_l1", "‖f‖₁ must be positive"));
    }
    let mut mags: Vec<f64> = values.samples().iter().map(|v| v.norm()).collect();
    mags.sort_by(|a, b| b.total_cmp(a));
    let w = values.cell_measure();
    let mut best = 0.0_f64;
    for (i, &m) in mags.iter().enumerate() {
        if m <= 0.0 {
            break;
        }
        // all of mags[..=i] are ≥ m, so μ{|Tf| > λ} for λ just below m
        let mut j = i + 1;
        while j < mags.len() && mags[j] == m {
            j += 1;
        }
        best = best.max(m * j as f64 * w);
    }
    Ok(best / f_l1)
}
