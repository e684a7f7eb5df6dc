use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fft::periodic_convolve;
use crate::grid::{dft_line, idft_line, LineSignal, C64, ZERO};
use crate::line::means::check_band;
use crate::line::{summability_mean_line, LineMethod};

use super::kernel::{SingularKernelSpec, SingularKind};
use super::require_dim;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Multiplier `-i sign(ξ)`.
pub fn hilbert_line(f: &LineSignal) -> Result<LineSignal> {
    require_dim(f.grid(), 1)?;
    let s = dft_line(f).without_nyquist();
    Ok(idft_line(&s.apply(|xi| -I * xi[0].signum() * (xi[0] != 0.0) as u8 as f64)))
}

/// `(1/π) p.v.∫ f(x-y) dy/y` by the staggered rule on odd shifts.
///
/// Each pair `(f(x-kh) - f(x+kh))/(πk)`, `k` odd, is a midpoint cell of
/// width `2h`, so the sum is a difference form and `ε` leaves it unchanged
/// once validated. Shifts wrap periodically up to `|k| < N/2`.
pub fn hilbert_line_pv(f: &LineSignal, eps: f64) -> Result<LineSignal> {
    SingularKernelSpec::new(SingularKind::Hilbert, f.grid(), eps)?;
    let n = f.grid().points();
    let w: Vec<C64> = (0..n)
        .map(|k| {
            let s = if k < n / 2 { k as i64 } else { k as i64 - n as i64 };
            if s % 2 != 0 && s != -(n as i64) / 2 {
                C64::new(2.0 / (PI * s as f64), 0.0)
            } else {
                ZERO
            }
        })
        .collect();
    LineSignal::new(f.grid(), periodic_convolve(f.values(), &w, n, 1))
}

/// Multiplier `1_{ξ > 0}`.
pub fn riesz_projection_line(f: &LineSignal) -> Result<LineSignal> {
    require_dim(f.grid(), 1)?;
    let s = dft_line(f);
    Ok(idft_line(&s.apply(|xi| if xi[0] > 0.0 { C64::new(1.0, 0.0) } else { ZERO })))
}

fn modulate(f: &LineSignal, w: f64) -> LineSignal {
    f.map_with_point(|x, v| v * C64::from_polar(1.0, w * x[0]))
}

/// Max deviation of `e^{-iωx}P(e^{iωx}f) - e^{iωx}P(e^{-iωx}f)` from `S_ω f`.
///
/// The left side has multiplier `1_{(-ω, ω]}`, the partial sum `1_{[-ω, ω]}`,
/// so the two agree exactly when `f̂(-ω) = 0`.
pub fn partial_sum_identity_check(f: &LineSignal, omega: f64) -> Result<f64> {
    require_dim(f.grid(), 1)?;
    check_band(omega, f)?;
    let step = f.grid().frequency_step();
    let k = (omega / step).round();
    if (omega - k * step).abs() > 1e-9 * step {
        return Err(Error::Misaligned(format!("ω = {omega} is not a multiple of {step}")));
    }
    let a = modulate(&riesz_projection_line(&modulate(f, omega))?, -omega);
    let b = modulate(&riesz_projection_line(&modulate(f, -omega))?, omega);
    let s = summability_mean_line(LineMethod::Partial, omega, f)?;
    Ok(a.sub(&b)?.max_abs_diff(&s))
}
