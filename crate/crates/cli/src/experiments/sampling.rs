use std::f64::consts::PI;

use harmonia::catalog::LineFunction;
use harmonia::sampling::{
    cosecant_series, periodize, poisson_summation_residual, sample, sinc_combination, sinc_reconstruct,
    sinc_series_at, theta as theta_fn, theta_equation_residual, SampleSource, WrapSpec,
};
use harmonia::torus::{kernel_eval, TorusKernelSpec};
use harmonia::{LineGrid, SeededRng, TorusGrid, TorusSignal, C64};

use super::pass;
use crate::config::{ExperimentConfig, Schedule};
use crate::error::CliResult;
use crate::table::ResultTable;

pub fn sampling_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("sampling");
    c.seed = 4;
    c.with_param("omega", 2.0 * PI).with_param("n_max", 64).with_param("trials", 20)
}

/// Check codes: 0 reconstruction of the five-sinc signal on `[-4, 4)`
/// (N = 1024) from samples at `πn/ω`; 1 interpolation property of that
/// series at every sample point; 2 interpolation property for random
/// Gaussian sums, one row per trial.
pub fn sampling(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let omega = cfg.param("omega")?;
    let n_max = cfg.count("n_max")?;
    let mut t = ResultTable::new(&["check", "seed", "error", "tolerance", "pass"]);
    let five = |x: &[f64]| C64::new(sinc_combination(x[0]), 0.0);
    let s = sample(&SampleSource::Closure(&five), omega, n_max, 1)?;
    let g = LineGrid::new(1, 4.0, 1024)?;
    let rec = sinc_reconstruct(&s, g)?;
    let e = (0..g.len())
        .map(|k| (rec.values()[k].re - sinc_combination(g.node(k))).abs())
        .fold(0.0, f64::max);
    t.push(vec![0.0, -1.0, e, 1e-8, pass(e <= 1e-8)]);
    let interp = |s: &harmonia::sampling::SampleSet| -> CliResult<f64> {
        let m = n_max as i64;
        let mut worst = 0.0_f64;
        for n in -m..=m {
            let x = n as f64 * PI / omega;
            worst = worst.max((sinc_series_at(s, &[x])? - s.get(&[n])).norm());
        }
        Ok(worst)
    };
    let e = interp(&s)?;
    t.push(vec![1.0, -1.0, e, 1e-12, pass(e <= 1e-12)]);
    for i in 0..cfg.count("trials")? as u64 {
        let seed = cfg.seed.wrapping_add(i);
        let mut rng = SeededRng::new(seed);
        let terms: Vec<(f64, f64)> = (0..5).map(|_| (rng.normal(), rng.uniform_in(-5.0, 5.0))).collect();
        let f = move |x: &[f64]| C64::new(terms.iter().map(|(a, c)| a * (-(x[0] - c).powi(2)).exp()).sum(), 0.0);
        let e = interp(&sample(&SampleSource::Closure(&f), omega, n_max, 1)?)?;
        t.push(vec![2.0, seed as f64, e, 1e-12, pass(e <= 1e-12)]);
    }
    Ok(t)
}

pub fn poisson_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("poisson_summation");
    c.schedule = Schedule::Range {
        start: 0.3,
        stop: 3.0,
        step: 0.1,
    };
    c
}

/// Kind codes: 0 Gaussian summation residual at `x ∈ {0, 1, π}`; 1
/// `Pe(P_ω)` against the torus Poisson kernel at `r = e^{-1/ω}` on 64 nodes;
/// 2 theta functional equation at the scheduled `s`.
pub fn poisson(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let mut t = ResultTable::new(&["kind", "arg", "residual", "tolerance", "pass"]);
    for x in [0.0, 1.0, PI] {
        let r = poisson_summation_residual(LineFunction::Gaussian, x, WrapSpec::default())?.residual;
        t.push(vec![0.0, x, r, 1e-12, pass(r <= 1e-12)]);
    }
    let g = TorusGrid::new(64)?;
    let spec = WrapSpec {
        tail_integral: true,
        ..WrapSpec::default()
    };
    for omega in [0.5, 1.0, 2.0, 10.0] {
        let p_line = move |x: f64| (1.0 / omega) / (PI * (x * x + 1.0 / (omega * omega)));
        let p = periodize(&p_line, g, spec)?;
        let r = (-1.0 / omega).exp();
        let want = TorusSignal::from_real_fn(g, |t| kernel_eval(TorusKernelSpec::Poisson(r), t));
        let e = p.signal.max_abs_diff(&want);
        t.push(vec![1.0, omega, e, 1e-8, pass(e <= 1e-8)]);
    }
    for s in cfg.schedule.values()? {
        let r = theta_equation_residual(s)?;
        t.push(vec![2.0, s, r, 1e-12, pass(r <= 1e-12)]);
    }
    Ok(t)
}

pub fn theta_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("theta");
    c.schedule = Schedule::Range {
        start: 0.3,
        stop: 3.0,
        step: 0.1,
    };
    c
}

pub fn theta(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let mut t = ResultTable::new(&["s", "theta", "residual", "pass"]);
    for s in cfg.schedule.values()? {
        let r = theta_equation_residual(s)?;
        t.push(vec![s, theta_fn(s)?, r, pass(r <= 1e-12)]);
    }
    Ok(t)
}

pub fn cosecant_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("cosecant");
    c.schedule = Schedule::List {
        values: vec![100.0, 1000.0, 10_000.0, 100_000.0],
    };
    c.with_param("x", 0.5)
}

/// `scaled` is `(target - partial)·n_max`. A row passes when the scaled
/// tail is within 1% of the last row's, and at `n_max ≥ 10⁴` also when the
/// error is at most 2·10⁻⁴.
pub fn cosecant(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let x = cfg.param("x")?;
    let mut rows = Vec::new();
    for n in cfg.schedule.values()? {
        let c = cosecant_series(x, n as usize)?;
        let err = (c.target - c.partial).abs();
        rows.push((n, c.partial, c.target, err, err * n));
    }
    let last = rows.last().map(|r| r.4).unwrap_or(0.0);
    let mut t = ResultTable::new(&["n_max", "partial", "target", "error", "scaled", "pass"]);
    for (n, p, tg, e, s) in rows {
        let ok = (s - last).abs() <= 0.01 * last && (n < 1e4 || e <= 2e-4);
        t.push(vec![n, p, tg, e, s, pass(ok)]);
    }
    Ok(t)
}
