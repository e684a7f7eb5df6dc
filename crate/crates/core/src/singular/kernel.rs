use std::f64::consts::PI;

use serde::Serialize;

use crate::catalog::c_d;
use crate::error::{invalid, Error, Result};
use crate::grid::LineGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularKind {
    /// Kernel `1/(πy)` on `ℝ`.
    Hilbert,
    /// Kernel `c_d y_j/|y|^{d+1}`, `j` counted from 1.
    Riesz(usize),
}

/// A truncated singular kernel on a line grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingularKernelSpec {
    pub kind: SingularKind,
    pub dim: usize,
    /// Truncation radius, a positive multiple of `h`.
    pub eps: f64,
    window: usize,
}

impl SingularKernelSpec {
    pub fn new(kind: SingularKind, grid: LineGrid, eps: f64) -> Result<Self> {
        let dim = grid.dim();
        match kind {
            SingularKind::Hilbert if dim != 1 => return Err(invalid("kind", "hilbert needs d = 1")),
            SingularKind::Riesz(j) if dim != 2 || j == 0 || j > dim => {
                return Err(invalid("kind", format!("riesz({j}) needs d = 2 and j in 1..=2")))
            }
            _ => {}
        }
        let h = grid.spacing();
        let m = (eps / h).round();
        if !(eps > 0.0) || m < 1.0 || (eps - m * h).abs() > 1e-9 * h.max(eps) {
            return Err(Error::Misaligned(format!("ε = {eps} is not a positive multiple of h = {h}")));
        }
        if m as usize >= grid.points() / 2 {
            return Err(invalid("eps", "window covers the whole grid"));
        }
        Ok(Self {
            kind,
            dim,
            eps,
            window: m as usize,
        })
    }

    /// `ε / h`.
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn c_d(&self) -> f64 {
        c_d(self.dim)
    }

    /// Kernel value at `y ≠ 0`.
    pub fn eval(&self, y: &[f64]) -> f64 {
        match self.kind {
            SingularKind::Hilbert => 1.0 / (PI * y[0]),
            SingularKind::Riesz(j) => {
                let r2: f64 = y.iter().map(|v| v * v).sum();
                self.c_d() * y[j - 1] / r2.powf((self.dim as f64 + 1.0) / 2.0)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let g1 = LineGrid::new(1, 4.0, 64).unwrap();
        let g2 = LineGrid::new(2, 4.0, 64).unwrap();
        let h = g1.spacing();
        assert!(SingularKernelSpec::new(SingularKind::Hilbert, g1, 2.0 * h).is_ok());
        assert!(SingularKernelSpec::new(SingularKind::Hilbert, g2, 2.0 * h).is_err());
        assert!(SingularKernelSpec::new(SingularKind::Riesz(3), g2, 2.0 * h).is_err());
        assert!(matches!(
            SingularKernelSpec::new(SingularKind::Riesz(1), g2, 0.3 * h),
            Err(Error::Misaligned(_))
        ));
        let s = SingularKernelSpec::new(SingularKind::Riesz(2), g2, 3.0 * h).unwrap();
        assert_eq!(s.window(), 3);
        assert!((s.eval(&[0.0, 2.0]) - 1.0 / (8.0 * PI)).abs() < 1e-15);
    }
}
