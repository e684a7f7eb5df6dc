use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Result};

const MAX_TERMS: usize = 10_000_000;

/// `ϑ(s) = Σ_n e^{-n²πs}`, direct summation until terms fall below `1e-18`.
pub fn theta(s: f64) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(invalid("s", format!("{s} must be positive")));
    }
    let mut terms = Vec::new();
    let mut n = 1usize;
    loop {
        let t = (-(n as f64).powi(2) * PI * s).exp();
        if t < 1e-18 {
            break;
        }
        terms.push(t);
        n += 1;
        if n > MAX_TERMS {
            return Err(invalid("s", format!("{s} needs more than {MAX_TERMS} terms")));
        }
    }
    Ok(1.0 + 2.0 * terms.iter().rev().sum::<f64>())
}

/// `|ϑ(s) - s^{-1/2} ϑ(1/s)|`.
pub fn theta_equation_residual(s: f64) -> Result<f64> {
    Ok((theta(s)? - theta(1.0 / s)? / s.sqrt()).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CosecantSeries {
    pub partial: f64,
    /// `π² / sin²(πx)`.
    pub target: f64,
    /// `2 / n_max`.
    pub tail_bound: f64,
}

/// `Σ_{|n| ≤ n_max} (x+n)^{-2}`, smallest terms first.
pub fn cosecant_series(x: f64, n_max: usize) -> Result<CosecantSeries> {
    if !x.is_finite() || x.fract() == 0.0 {
        return Err(invalid("x", format!("{x} must not be an integer")));
    }
    if n_max == 0 {
        return Err(invalid("n_max", "must be positive"));
    }
    let m = n_max as i64;
    let mut terms: Vec<f64> = (-m..=m).map(|n| (x + n as f64).powi(-2)).collect();
    terms.sort_by(f64::total_cmp);
    Ok(CosecantSeries {
        partial: terms.iter().sum(),
        target: (PI / (PI * x).sin()).powi(2),
        tail_bound: 2.0 / n_max as f64,
    })
}
