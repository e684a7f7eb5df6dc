//! Summability means on the line as spectral multipliers.

use crate::error::{invalid, Error, Result};
use crate::grid::{dft_line, idft_line, LineSignal, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineMethod {
    /// `1_{[-ω,ω]^d}`
    Partial,
    /// `Π (1 - |ξ_j|/ω)_+`
    Fejer,
    /// `e^{-|ξ|/ω}`
    Poisson,
    /// `e^{-|ξ/ω|²/2}`
    Gauss,
}

impl LineMethod {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "partial" => Ok(Self::Partial),
            "fejer" | "cesaro" => Ok(Self::Fejer),
            "poisson" | "abel" => Ok(Self::Poisson),
            "gauss" => Ok(Self::Gauss),
            _ => Err(Error::UnknownKey {
                kind: "method",
                key: s.to_string(),
            }),
        }
    }

    pub fn multiplier(&self, omega: f64, xi: &[f64]) -> f64 {
        let r2: f64 = xi.iter().map(|v| v * v).sum();
        match self {
            Self::Partial => {
                if xi.iter().all(|v| v.abs() <= omega * (1.0 + 1e-12)) {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Fejer => xi.iter().map(|v| (1.0 - v.abs() / omega).max(0.0)).product(),
            Self::Poisson => (-r2.sqrt() / omega).exp(),
            Self::Gauss => (-r2 / (2.0 * omega * omega)).exp(),
        }
    }
}

pub(crate) fn check_band(omega: f64, f: &LineSignal) -> Result<()> {
    let edge = f.grid().band_edge() / 2.0;
    if !(omega > 0.0 && omega <= edge) {
        return Err(invalid("omega", format!("{omega} outside (0, {edge}], half the grid band")));
    }
    Ok(())
}

pub fn summability_mean_line(method: LineMethod, omega: f64, f: &LineSignal) -> Result<LineSignal> {
    check_band(omega, f)?;
    let s = dft_line(f);
    Ok(idft_line(&s.apply(|xi| C64::new(method.multiplier(omega, xi), 0.0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::random_band_limited_line;
    use crate::grid::LineGrid;

    #[test]
    fn partial_keeps_band_limited() {
        let g = LineGrid::new(1, 8.0, 256).unwrap();
        let f = random_band_limited_line(g, 10, 3).unwrap();
        let omega = 10.0 * g.frequency_step();
        let s = summability_mean_line(LineMethod::Partial, omega, &f).unwrap();
        assert!(s.max_abs_diff(&f) < 1e-12);
        assert!(summability_mean_line(LineMethod::Partial, g.band_edge(), &f).is_err());
    }

    #[test]
    fn gauss_mean_of_gaussian() {
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        for omega in [0.5, 1.0, 3.0] {
            let m = summability_mean_line(LineMethod::Gauss, omega, &f).unwrap();
            let v = 1.0 + 1.0 / (omega * omega);
            let want = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / (2.0 * v)).exp() / v.sqrt());
            assert!(m.max_abs_diff(&want) < 1e-8);
        }
    }
}
