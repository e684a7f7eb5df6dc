//! Hilbert transform on `ℝ`, Riesz transforms on `ℝ²`, and related checks.
//!
//! Multiplier forms zero the `ξ = 0` and Nyquist bins. Periodic wraparound of
//! the grid means results stand for the line only when inputs are negligible
//! near `±L`.

mod hilbert;
mod hormander;
mod kernel;
mod riesz;
mod weak;

pub use hilbert::{hilbert_line, hilbert_line_pv, partial_sum_identity_check, riesz_projection_line};
pub use hormander::hormander_integral;
pub use kernel::{SingularKernelSpec, SingularKind};
pub use riesz::{lattice_window_constant, riesz_pv, riesz_transform, spectral_laplacian};
pub use weak::{bad_part_tail, weak11_singular_report, BadTail};

use crate::error::{invalid, Result};
use crate::grid::LineGrid;

pub(crate) fn require_dim(grid: LineGrid, d: usize) -> Result<()> {
    if grid.dim() != d {
        return Err(invalid("dim", format!("expected dimension {d}, got {}", grid.dim())));
    }
    Ok(())
}
