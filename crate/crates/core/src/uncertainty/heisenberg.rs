use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::grid::{dft_analyze, dft_line, LineSignal, TorusSignal, C64};
use crate::line::spectral_derivative;

/// Tail thresholds for the moment checks, relative to `‖f‖₂²`.
///
/// `|x|²|f|²` is inspected on `|x| ≥ 0.9L` and `|ξ|²|f̂|²` on `|ξ| ≥ 0.9π/h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailSpec {
    pub space: f64,
    pub freq: f64,
}

impl Default for TailSpec {
    fn default() -> Self {
        Self {
            space: 1e-10,
            freq: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub alpha: C64,
    pub beta: C64,
    /// `∫|x-α|²|f|²`.
    pub position_variance: f64,
    /// `(1/2π)∫|ξ-β|²|f̂|²`.
    pub momentum_variance: f64,
    pub product: f64,
    /// `¼‖f‖₂⁴`.
    pub lower_bound: f64,
}

fn check_tails(f: &LineSignal, spec: TailSpec) -> Result<f64> {
    let g = f.grid();
    if g.dim() != 1 {
        return Err(invalid("dim", "uncertainty products are one-dimensional"));
    }
    let norm_sq: f64 = f.values().iter().map(|v| v.norm_sqr()).sum::<f64>() * g.spacing();
    if norm_sq == 0.0 {
        return Err(invalid("f", "zero signal"));
    }
    let l = g.half_width();
    let space = (0..g.len())
        .filter(|&k| g.node(k).abs() >= 0.9 * l)
        .map(|k| g.node(k).powi(2) * f.values()[k].norm_sqr())
        .fold(0.0, f64::max);
    if space > spec.space * norm_sq {
        return Err(Error::DivergentMoment(format!(
            "|x|²|f|² reaches {space:e} near |x| = L; widen the grid or use a decaying input"
        )));
    }
    let s = dft_line(f);
    let edge = g.band_edge();
    let freq = (0..g.len())
        .filter(|&k| g.frequency(k).abs() >= 0.9 * edge)
        .map(|k| g.frequency(k).powi(2) * s.values()[k].norm_sqr())
        .fold(0.0, f64::max);
    if freq > spec.freq * norm_sq {
        return Err(Error::DivergentMoment(format!(
            "|ξ|²|f̂|² reaches {freq:e} near the band edge; refine the grid or use a smoother input"
        )));
    }
    Ok(norm_sq)
}

/// Both variances of a `d = 1` signal about `(α, β)`.
pub fn heisenberg_report(f: &LineSignal, alpha: C64, beta: C64, tails: TailSpec) -> Result<UncertaintyReport> {
    let norm_sq = check_tails(f, tails)?;
    let g = f.grid();
    let h = g.spacing();
    let position_variance = (0..g.len())
        .rev()
        .map(|k| (C64::new(g.node(k), 0.0) - alpha).norm_sqr() * f.values()[k].norm_sqr())
        .sum::<f64>()
        * h;
    let s = dft_line(f);
    let momentum_variance = (0..g.len())
        .rev()
        .map(|k| (C64::new(g.frequency(k), 0.0) - beta).norm_sqr() * s.values()[k].norm_sqr())
        .sum::<f64>()
        * g.frequency_step()
        / (2.0 * PI);
    Ok(UncertaintyReport {
        alpha,
        beta,
        position_variance,
        momentum_variance,
        product: position_variance * momentum_variance,
        lower_bound: norm_sq * norm_sq / 4.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Operator {
    /// `f ↦ x f`.
    Position,
    /// `f ↦ -i f'`.
    Momentum,
}

/// `⟨Tf, f⟩ / ‖f‖²`, the minimizer of `‖Tf - αf‖`.
pub fn optimal_shift(f: &LineSignal, op: Operator) -> Result<C64> {
    let g = f.grid();
    if g.dim() != 1 {
        return Err(invalid("dim", "shifts are one-dimensional"));
    }
    let (num, den) = match op {
        Operator::Position => f.values().iter().enumerate().fold((0.0, 0.0), |(a, b), (k, v)| {
            (a + g.node(k) * v.norm_sqr(), b + v.norm_sqr())
        }),
        Operator::Momentum => dft_line(f).values().iter().enumerate().fold((0.0, 0.0), |(a, b), (k, v)| {
            (a + g.frequency(k) * v.norm_sqr(), b + v.norm_sqr())
        }),
    };
    if den == 0.0 {
        return Err(invalid("f", "zero signal"));
    }
    Ok(C64::new(num / den, 0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CommutatorCheck {
    /// `|⟨[T, U]f, f⟩|` with `T = x`, `U = -i d/dx`.
    pub lhs: f64,
    /// `Δ_f(T)Δ_f(U) + Δ_f(T)Δ_f(U)`, both operators self-adjoint.
    pub rhs: f64,
    pub norm_sq: f64,
}

fn delta(tf: &LineSignal, f: &LineSignal) -> Result<f64> {
    let a = tf.inner(f)? / f.inner(f)?;
    let r = tf.sub(&f.scale(a))?;
    Ok(r.inner(&r)?.re.sqrt())
}

/// Commutator bound for position and momentum, derivatives taken spectrally.
pub fn commutator_check(f: &LineSignal, tails: TailSpec) -> Result<CommutatorCheck> {
    let norm_sq = check_tails(f, tails)?;
    let mi = C64::new(0.0, -1.0);
    let t = |g: &LineSignal| g.map_with_point(|x, v| v * x[0]);
    let u = |g: &LineSignal| spectral_derivative(g, 0).map(|d| d.scale(mi));
    let tu = t(&u(f)?);
    let ut = u(&t(f))?;
    let lhs = tu.sub(&ut)?.inner(f)?.norm();
    let dt = delta(&t(f), f)?;
    let du = delta(&u(f)?, f)?;
    Ok(CommutatorCheck {
        lhs,
        rhs: 2.0 * dt * du,
        norm_sq,
    })
}

/// Slack `RHS - LHS` of the circle inequality
/// `¼m²|mean(e^{imt}|f|²)|² ≤ mean(|e^{imt}-α|²|f|²) · Σ|n-β|²|f̂(n)|²`.
pub fn torus_uncertainty_residual(f: &TorusSignal, m: i64, alpha: C64, beta: C64) -> Result<f64> {
    let n = f.grid().size();
    if m.unsigned_abs() as usize >= n / 2 {
        return Err(invalid("m", format!("|{m}| must be below N/2 = {}", n / 2)));
    }
    let mf = m as f64;
    let nodes = f.grid().nodes();
    let nn = n as f64;
    let mean: C64 = nodes
        .iter()
        .zip(f.values())
        .map(|(&t, v)| C64::from_polar(v.norm_sqr(), mf * t))
        .sum::<C64>()
        / nn;
    let lhs = 0.25 * mf * mf * mean.norm_sqr();
    let pos: f64 = nodes
        .iter()
        .zip(f.values())
        .map(|(&t, v)| (C64::from_polar(1.0, mf * t) - alpha).norm_sqr() * v.norm_sqr())
        .sum::<f64>()
        / nn;
    let mom: f64 = dft_analyze(f)
        .iter()
        .map(|(k, c)| (C64::new(k as f64, 0.0) - beta).norm_sqr() * c.norm_sqr())
        .sum();
    Ok(pos * mom - lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::random_trig_poly;
    use crate::grid::{LineGrid, TorusGrid};

    fn grid() -> LineGrid {
        LineGrid::new(1, 16.0, 1024).unwrap()
    }

    #[test]
    fn gaussian_equality() {
        let f = LineSignal::from_real_fn(grid(), |x| (-x[0] * x[0] / 2.0).exp());
        let r = heisenberg_report(&f, C64::new(0.0, 0.0), C64::new(0.0, 0.0), TailSpec::default()).unwrap();
        assert!((r.product / r.lower_bound - 1.0).abs() < 1e-8);
        let f = LineSignal::from_fn(grid(), |x| C64::from_polar((-(x[0] - 2.0).powi(2) / 2.0).exp(), 5.0 * x[0]));
        let r = heisenberg_report(&f, C64::new(2.0, 0.0), C64::new(5.0, 0.0), TailSpec::default()).unwrap();
        assert!((r.product / r.lower_bound - 1.0).abs() < 1e-8);
    }

    #[test]
    fn tent_is_strict_and_box_is_rejected() {
        let g = LineGrid::new(1, 8.0, 4096).unwrap();
        let tent = LineSignal::from_real_fn(g, |x| (1.0 - x[0].abs()).max(0.0));
        assert!(matches!(
            heisenberg_report(&tent, C64::new(0.0, 0.0), C64::new(0.0, 0.0), TailSpec::default()),
            Err(Error::DivergentMoment(_))
        ));
        let loose = TailSpec { space: 1e-10, freq: 1e-2 };
        let r = heisenberg_report(&tent, C64::new(0.0, 0.0), C64::new(0.0, 0.0), loose).unwrap();
        // closed forms: ‖f‖² = 2/3, ∫x²f² = 1/15, ∫|f'|² = 2
        assert!((r.position_variance - 1.0 / 15.0).abs() < 1e-6);
        assert!((r.momentum_variance - 2.0).abs() < 5e-3, "{r:?}");
        assert!(r.product / r.lower_bound > 1.05);
        let bx = LineSignal::from_real_fn(g, |x| if x[0].abs() < 1.0 { 1.0 } else { 0.0 });
        assert!(heisenberg_report(&bx, C64::new(0.0, 0.0), C64::new(0.0, 0.0), loose).is_err());
    }

    #[test]
    fn shifts() {
        let f = LineSignal::from_fn(grid(), |x| C64::from_polar((-(x[0] - 1.5).powi(2)).exp(), -3.0 * x[0]));
        assert!((optimal_shift(&f, Operator::Position).unwrap().re - 1.5).abs() < 1e-10);
        assert!((optimal_shift(&f, Operator::Momentum).unwrap().re + 3.0).abs() < 1e-10);
        assert!(optimal_shift(&LineSignal::zeros(grid()), Operator::Position).is_err());
    }

    #[test]
    fn commutator_for_gaussian() {
        let f = LineSignal::from_real_fn(grid(), |x| (-x[0] * x[0] / 2.0).exp());
        let c = commutator_check(&f, TailSpec::default()).unwrap();
        assert!((c.lhs - c.norm_sq).abs() < 1e-8);
        assert!((c.rhs - c.norm_sq).abs() < 1e-8);
        let f3 = f.scale(C64::new(3.0, 0.0));
        let c3 = commutator_check(&f3, TailSpec::default()).unwrap();
        assert!((c3.lhs / c.lhs - 9.0).abs() < 1e-10 && (c3.rhs / c.rhs - 9.0).abs() < 1e-10);
    }

    #[test]
    fn circle_inequality() {
        let g = TorusGrid::new(64).unwrap();
        let one = TorusSignal::constant(g, C64::new(1.0, 0.0));
        let zero = C64::new(0.0, 0.0);
        assert!(torus_uncertainty_residual(&one, 3, zero, zero).unwrap().abs() < 1e-15);
        let e = TorusSignal::from_fn(g, |t| C64::from_polar(1.0, 4.0 * t));
        assert!(torus_uncertainty_residual(&e, 2, zero, C64::new(4.0, 0.0)).unwrap().abs() < 1e-12);
        for seed in 0..50 {
            let f = random_trig_poly(g, 12, seed);
            let beta = dft_analyze(&f).iter().map(|(k, c)| k as f64 * c.norm_sqr()).sum::<f64>()
                / dft_analyze(&f).iter().map(|(_, c)| c.norm_sqr()).sum::<f64>();
            for m in [1, 2, 5] {
                assert!(torus_uncertainty_residual(&f, m, zero, C64::new(beta, 0.0)).unwrap() >= -1e-10);
            }
        }
        assert!(torus_uncertainty_residual(&one, 32, zero, zero).is_err());
    }
}
