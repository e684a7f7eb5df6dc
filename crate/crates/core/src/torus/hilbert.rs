//! Hilbert transform and Riesz projection on the torus.

use crate::error::{invalid, Error, Result};
use crate::grid::{dft_analyze, dft_synthesize, TorusSignal, C64, ZERO};

use super::means::{summability_mean, SummabilityMethod};

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Multiplier `-i sign(n)`, `sign(0) = 0`.
///
/// The Nyquist bin `n = -N/2` gets `+i`, so `H² = -I + f̂(0)` holds on every
/// signal; real signals with Nyquist content map to complex output.
pub fn hilbert_torus(f: &TorusSignal) -> TorusSignal {
    let c = dft_analyze(f);
    dft_synthesize(&c.apply(|n| -I * (n.signum() as f64)))
}

/// Multiplier `1_{n ≥ 0}`.
pub fn riesz_projection_torus(f: &TorusSignal) -> TorusSignal {
    let c = dft_analyze(f);
    dft_synthesize(&c.apply(|n| if n >= 0 { C64::new(1.0, 0.0) } else { ZERO }))
}

fn window(f: &TorusSignal, eps: f64) -> Result<usize> {
    let h = f.grid().spacing();
    let m = (eps / h).round();
    if !(eps > 0.0) || m < 1.0 || (eps - m * h).abs() > 1e-9 * h.max(eps) {
        return Err(Error::Misaligned(format!("ε = {eps} is not a positive multiple of h = {h}")));
    }
    if m as usize >= f.grid().size() / 2 {
        return Err(invalid("eps", "window covers the whole circle"));
    }
    Ok(m as usize)
}

/// Principal value `(1/2π) p.v.∫ f(t-τ) cot(τ/2) dτ` by the staggered midpoint rule.
///
/// Shifts are paired symmetrically, `cot(τ/2)(f(t-τ) - f(t+τ))`, and only odd
/// multiples of `h` carry weight `2h`. The window `ε` is validated but, since
/// every pair is a difference, it does not change the sum. The rule is exact
/// for trigonometric polynomials of degree below `N/2`.
pub fn hilbert_torus_pv(f: &TorusSignal, eps: f64) -> Result<TorusSignal> {
    window(f, eps)?;
    let n = f.grid().size();
    let h = f.grid().spacing();
    let v = f.values();
    let weights: Vec<(usize, f64)> = (1..n / 2)
        .step_by(2)
        .map(|k| (k, 2.0 / n as f64 / (k as f64 * h / 2.0).tan()))
        .collect();
    let out = (0..n)
        .map(|j| {
            weights
                .iter()
                .rev()
                .map(|&(k, w)| (v[(j + n - k) % n] - v[(j + k) % n]) * w)
                .sum()
        })
        .collect();
    TorusSignal::new(f.grid(), out)
}

/// Plain truncated integral over `ε ≤ |τ| ≤ π` on all grid shifts, trapezoid weights.
///
/// Converges to the principal value only at rate `O(ε)`.
pub fn hilbert_torus_truncated(f: &TorusSignal, eps: f64) -> Result<TorusSignal> {
    let m = window(f, eps)?;
    let n = f.grid().size();
    let h = f.grid().spacing();
    let v = f.values();
    let out = (0..n)
        .map(|j| {
            (m..n / 2)
                .rev()
                .map(|k| {
                    let w = if k == m { 0.5 } else { 1.0 };
                    let c = w / n as f64 / (k as f64 * h / 2.0).tan();
                    (v[(j + n - k) % n] - v[(j + k) % n]) * c
                })
                .sum()
        })
        .collect();
    TorusSignal::new(f.grid(), out)
}

/// Max deviation of `e^{-imt}P(e^{imt}f) - e^{i(m+1)t}P(e^{-i(m+1)t}f)` from `S_m(f)`.
pub fn modulation_identity_residual(f: &TorusSignal, m: usize) -> Result<f64> {
    let mm = m as f64;
    let modulate = |g: &TorusSignal, k: f64| g.map_with_node(|t, v| v * C64::from_polar(1.0, k * t));
    let a = modulate(&riesz_projection_torus(&modulate(f, mm)), -mm);
    let b = modulate(&riesz_projection_torus(&modulate(f, -(mm + 1.0))), mm + 1.0);
    let s = summability_mean(SummabilityMethod::Partial(m), f)?;
    Ok(a.sub(&b)?.max_abs_diff(&s))
}
