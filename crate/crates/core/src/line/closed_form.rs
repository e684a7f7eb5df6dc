//! Tabulated transform pairs and the Gaussian superposition integral.

use gauss_quad::GaussLegendre;

use crate::catalog::LineFunction;
use crate::error::{invalid, Error, Result};
use crate::grid::{dft_line, LineGrid, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Spatial,
    Spectral,
}

/// Evaluate a catalog entry at `point` (its length sets `d`).
pub fn closed_form(name: &str, side: Side, point: &[f64]) -> Result<C64> {
    if point.is_empty() || point.len() > 2 {
        return Err(invalid("point", "dimension must be 1 or 2"));
    }
    let f = LineFunction::parse(name)?;
    let v = match side {
        Side::Spatial => f.spatial(point),
        Side::Spectral => f.spectral(point),
    };
    v.ok_or_else(|| Error::UnknownKey {
        kind: "closed form",
        key: name.to_string(),
    })
}

/// Max `|dft_line(f) - f̂|` over frequency nodes with `|ξ_j| ≤ xi_max` on every axis.
pub fn transform_table_check(name: &str, grid: LineGrid, xi_max: f64) -> Result<f64> {
    let f = LineFunction::parse(name)?;
    if f.spectral(&vec![0.0; grid.dim()]).is_none() {
        return Err(Error::UnknownKey {
            kind: "closed form",
            key: name.to_string(),
        });
    }
    let s = dft_line(&f.sample(grid));
    let d = grid.dim();
    Ok(s.values()
        .iter()
        .enumerate()
        .filter_map(|(k, v)| {
            let xi = &grid.freq_point(k)[..d];
            if xi.iter().all(|x| x.abs() <= xi_max) {
                Some((v - f.spectral(xi).expect("tabulated")).norm())
            } else {
                None
            }
        })
        .fold(0.0, f64::max))
}

/// Composite Gauss–Legendre rule on `[0, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub upper: f64,
    pub panels: usize,
    pub degree: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            upper: 12.0,
            panels: 48,
            degree: 20,
        }
    }
}

pub(crate) fn composite_gl(a: f64, b: f64, panels: usize, degree: usize, f: impl Fn(f64) -> f64) -> Result<f64> {
    let rule = GaussLegendre::new(degree).map_err(|e| invalid("degree", e.to_string()))?;
    let w = (b - a) / panels as f64;
    Ok((0..panels)
        .map(|i| {
            let lo = a + w * i as f64;
            rule.integrate(lo, lo + w, &f)
        })
        .sum())
}

/// `(1/√(2π)) ∫_0^∞ a^{-1/2} e^{-a/2} e^{-b²/2a} da`, which equals `e^{-b}`.
///
/// With `a = u²` the integrand becomes `2 e^{-u²/2 - b²/2u²}`, smooth at 0.
pub fn gauss_superposition(b: f64, spec: QuadratureSpec) -> Result<f64> {
    if !(b >= 0.0) {
        return Err(invalid("b", format!("{b} must be nonnegative")));
    }
    let upper = spec.upper.max(2.0 * b.sqrt() + 10.0);
    let v = composite_gl(0.0, upper, spec.panels, spec.degree, |u| {
        if u == 0.0 {
            return if b == 0.0 { 2.0 } else { 0.0 };
        }
        2.0 * (-u * u / 2.0 - b * b / (2.0 * u * u)).exp()
    })?;
    Ok(v / (2.0 * std::f64::consts::PI).sqrt())
}
