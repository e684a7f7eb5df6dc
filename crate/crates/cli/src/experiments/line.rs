use harmonia::catalog::{random_band_limited_line, random_trig_poly, remove_bins};
use harmonia::line::spectral_derivative;
use harmonia::singular::{partial_sum_identity_check, riesz_pv, riesz_transform, spectral_laplacian};
use harmonia::torus::modulation_identity_residual;
use harmonia::{lp_norm, LineGrid, LineSignal, TorusGrid, C64};

use super::{line_grid, pass};
use crate::config::ExperimentConfig;
use crate::error::{invalid, CliError, CliResult};
use crate::table::ResultTable;

fn bump(x: &[f64], r: f64) -> f64 {
    let s = (x[0] * x[0] + x[1] * x[1]) / (r * r);
    if s < 1.0 {
        (-1.0 / (1.0 - s)).exp()
    } else {
        0.0
    }
}

pub fn riesz_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("riesz");
    c.grid = crate::config::GridConfig { n: 512, l: 16.0, d: 2 };
    c.seed = 1;
    c.with_param("trials", 5)
}

/// Check codes: 0 Σ R_j² f = -f on mean-free random band-limited f
/// (L = 4, N = 64); 1 R₁R₂Δf = -∂₁∂₂f on a bump (L = 4, N = 128);
/// 2 and 3 p.v. against multiplier for j = 1, 2 on |x|_∞ ≤ 3 with ε = 8h
/// (L = 16, N = 512).
pub fn riesz(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let mut t = ResultTable::new(&["check", "seed", "error", "tolerance", "pass"]);
    let g = LineGrid::new(2, 4.0, 64)?;
    for i in 0..cfg.count("trials")? as u64 {
        let seed = cfg.seed.wrapping_add(i);
        let f = random_band_limited_line(g, 20, seed)?;
        let mean = f.values().iter().sum::<C64>() / g.len() as f64;
        let f = f.map(|v| v - mean);
        let mut total = f.clone();
        for j in 1..=2 {
            total = total.add(&riesz_transform(&riesz_transform(&f, j)?, j)?)?;
        }
        let e = lp_norm(&total, f64::INFINITY)?;
        t.push(vec![0.0, seed as f64, e, 1e-10, pass(e <= 1e-10)]);
    }
    let g = LineGrid::new(2, 4.0, 128)?;
    let f = LineSignal::from_real_fn(g, |x| bump(x, 1.5));
    let lhs = riesz_transform(&riesz_transform(&spectral_laplacian(&f), 2)?, 1)?;
    let d12 = spectral_derivative(&spectral_derivative(&f, 1)?, 0)?;
    let e = lhs.max_abs_diff(&d12.scale(C64::new(-1.0, 0.0)));
    t.push(vec![1.0, -1.0, e, 1e-8, pass(e <= 1e-8)]);
    let g = LineGrid::new(2, 16.0, 512)?;
    let f = LineSignal::from_real_fn(g, |x| bump(x, 2.0));
    for j in 1..=2 {
        let a = riesz_transform(&f, j)?;
        let b = riesz_pv(&f, j, 8.0 * g.spacing())?;
        let e = (0..g.len())
            .filter(|&k| g.point(k).iter().all(|x| x.abs() <= 3.0))
            .map(|k| (a.values()[k] - b.values()[k]).norm())
            .fold(0.0, f64::max);
        t.push(vec![1.0 + j as f64, -1.0, e, 1e-3, pass(e <= 1e-3)]);
    }
    Ok(t)
}

pub fn projection_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("riesz_projection");
    c.grid = crate::config::GridConfig { n: 512, l: 8.0, d: 1 };
    c.seed = 2;
    c.with_param("trials", 50).with_param("torus_n", 512)
}

pub fn projection_check(cfg: &ExperimentConfig) -> CliResult<()> {
    let g = line_grid(cfg)?;
    if g.dim() != 1 {
        return Err(CliError::Validation("grid.d: the line identity is one-dimensional".into()));
    }
    if cfg.grid.n < 256 {
        return Err(CliError::Validation("grid.n: need at least 256 points for bins up to 60".into()));
    }
    TorusGrid::new(cfg.count("torus_n")?).map_err(invalid)?;
    // degree 100 plus m up to 59, plus one, must stay below N/2
    if cfg.count("torus_n")? < 512 {
        return Err(CliError::Validation("params.torus_n: need at least 512 so modulated degree-100 polys do not alias".into()));
    }
    cfg.count("trials")?;
    Ok(())
}

/// Domain 0: torus, random trigonometric polynomials of degree 100 with
/// `m = seed mod 60`. Domain 1: line, random band-limited signals on bins
/// `|k| ≤ 60` with `ω = (1 + seed mod 60)·π/L` and the bin at `-ω` removed.
/// Signals are scaled to unit sup norm.
pub fn projection(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let tg = TorusGrid::new(cfg.count("torus_n")?).map_err(invalid)?;
    let lg = line_grid(cfg)?;
    let mut t = ResultTable::new(&["domain", "seed", "m_or_omega", "residual", "pass"]);
    for i in 0..cfg.count("trials")? as u64 {
        let seed = cfg.seed.wrapping_add(i);
        let f = random_trig_poly(tg, 100, seed);
        let f = f.scale(C64::new(1.0 / lp_norm(&f, f64::INFINITY)?, 0.0));
        let m = (seed % 60) as usize;
        let r = modulation_identity_residual(&f, m)?;
        t.push(vec![0.0, seed as f64, m as f64, r, pass(r <= 1e-10)]);
    }
    for i in 0..cfg.count("trials")? as u64 {
        let seed = cfg.seed.wrapping_add(i);
        let omega = (1 + seed % 60) as f64 * lg.frequency_step();
        let f = remove_bins(&random_band_limited_line(lg, 60, seed)?, &[-omega]);
        let f = f.scale(C64::new(1.0 / lp_norm(&f, f64::INFINITY)?, 0.0));
        let r = partial_sum_identity_check(&f, omega)?;
        t.push(vec![1.0, seed as f64, omega, r, pass(r <= 1e-10)]);
    }
    Ok(t)
}
