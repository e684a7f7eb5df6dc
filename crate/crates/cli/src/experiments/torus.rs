use std::f64::consts::PI;

use harmonia::catalog::{random_torus, random_trig_poly, LineFunction, TorusFunction};
use harmonia::torus::{
    convergence_experiment, hilbert_torus, hilbert_torus_pv, jump_experiment, kernel_axioms, kernel_eval,
    kernel_series, MeanKind, TorusKernelSpec,
};
use harmonia::{dft_analyze, dft_line, dft_synthesize, idft_line, lp_norm, LineGrid, TorusGrid, C64};

use super::{loglog_slope, pass, torus_grid};
use crate::config::{ExperimentConfig, Schedule};
use crate::error::{invalid, CliError, CliResult};
use crate::table::ResultTable;

fn torus_functions(cfg: &ExperimentConfig) -> CliResult<Vec<TorusFunction>> {
    let keys = cfg.functions();
    if keys.is_empty() {
        return Err(CliError::Validation("function: no catalog key given".into()));
    }
    keys.iter().map(|k| TorusFunction::parse(k).map_err(invalid)).collect()
}

fn below_half(cfg: &ExperimentConfig, what: &str) -> CliResult<()> {
    for v in cfg.schedule.values()? {
        if v < 0.0 || v.fract() != 0.0 || v >= (cfg.grid.n / 2) as f64 {
            return Err(CliError::Validation(format!(
                "schedule: {what} = {v} must be an integer in [0, N/2 = {})",
                cfg.grid.n / 2
            )));
        }
    }
    Ok(())
}

pub fn plancherel_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("plancherel");
    c.grid.n = 4096;
    c.grid.l = 16.0;
    c.function = "gaussian,exp_abs,tent,box,bump(1),poisson_fn,fejer_fn,gauss_fn".into();
    c.schedule = Schedule::Dyadic { start: 16.0, stop: 16384.0 };
    c.seed = 1;
    c
}

pub fn plancherel_check(cfg: &ExperimentConfig) -> CliResult<()> {
    for k in cfg.functions() {
        LineFunction::parse(&k).map_err(invalid)?;
    }
    for v in cfg.schedule.values()? {
        TorusGrid::new(v as usize).map_err(invalid)?;
    }
    LineGrid::new(1, cfg.grid.l, cfg.grid.n).map_err(invalid)?;
    Ok(())
}

/// Torus sizes come from the schedule; line functions use the grid in 1-d and a 128² grid in 2-d.
pub fn plancherel(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let mut t = ResultTable::new(&["domain", "n", "d", "function", "roundtrip", "plancherel", "pass"]);
    for (k, n) in cfg.schedule.values()?.into_iter().enumerate() {
        let g = TorusGrid::new(n as usize).map_err(invalid)?;
        let f = random_torus(g, cfg.seed.wrapping_add(k as u64));
        let c = dft_analyze(&f);
        let rt = dft_synthesize(&c).max_abs_diff(&f);
        let energy = f.inner(&f)?.re;
        let pl = (c.iter().map(|(_, v)| v.norm_sqr()).sum::<f64>() - energy).abs() / energy;
        t.push(vec![0.0, n, 1.0, -1.0, rt, pl, pass(rt <= 1e-12 && pl <= 1e-10)]);
    }
    for (i, key) in cfg.functions().iter().enumerate() {
        let func = LineFunction::parse(key).map_err(invalid)?;
        for d in [1usize, 2] {
            let g = if d == 1 {
                LineGrid::new(1, cfg.grid.l, cfg.grid.n)
            } else {
                LineGrid::new(2, cfg.grid.l, 128)
            }
            .map_err(invalid)?;
            let f = func.sample(g);
            let s = dft_line(&f);
            let rt = idft_line(&s).max_abs_diff(&f);
            let energy = f.inner(&f)?.re;
            let pl = (s.l2_norm_sq() - energy).abs() / energy;
            t.push(vec![1.0, g.points() as f64, d as f64, i as f64, rt, pl, pass(rt <= 1e-12 && pl <= 1e-10)]);
        }
    }
    Ok(t)
}

pub fn kernel_forms_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("kernel_forms");
    c.grid.n = 512;
    c
}

/// Kind codes: 0 Dirichlet, 1 Fejér, 2 Poisson, 3 Gauss, 4 Fejér as a mean of Dirichlets.
pub fn kernel_forms(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let nodes = torus_grid(cfg)?.nodes();
    let mut t = ResultTable::new(&["kind", "param", "max_diff", "pass"]);
    let mut cases = Vec::new();
    for n in [0usize, 1, 5, 32, 100] {
        cases.push((0.0, n as f64, TorusKernelSpec::Dirichlet(n)));
    }
    for n in [0usize, 1, 5, 32, 100] {
        cases.push((1.0, n as f64, TorusKernelSpec::Fejer(n)));
    }
    for r in [0.3, 0.7, 0.95] {
        cases.push((2.0, r, TorusKernelSpec::Poisson(r)));
    }
    for s in [0.01, 0.1, 1.0] {
        cases.push((3.0, s, TorusKernelSpec::Gauss(s)));
    }
    for (kind, param, spec) in cases {
        let d = nodes
            .iter()
            .map(|&x| (kernel_series(spec, x) - kernel_eval(spec, x)).abs())
            .fold(0.0, f64::max);
        t.push(vec![kind, param, d, pass(d <= 1e-10)]);
    }
    for n in [1usize, 5, 32, 100] {
        let d = nodes
            .iter()
            .map(|&x| {
                let mean = (0..=n).map(|k| kernel_eval(TorusKernelSpec::Dirichlet(k), x)).sum::<f64>() / (n + 1) as f64;
                (kernel_eval(TorusKernelSpec::Fejer(n), x) - mean).abs()
            })
            .fold(0.0, f64::max);
        t.push(vec![4.0, n as f64, d, pass(d <= 1e-10)]);
    }
    Ok(t)
}

/// `(4/π²) ln 2`.
pub fn dirichlet_increment_limit() -> f64 {
    4.0 / (PI * PI) * 2f64.ln()
}

pub fn dirichlet_l1_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("dirichlet_l1");
    c.grid.n = 1 << 16;
    c.schedule = Schedule::Dyadic { start: 8.0, stop: 1024.0 };
    c
}

/// Rows with `n < 64` are reported but always pass.
pub fn dirichlet_l1(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let g = torus_grid(cfg)?;
    let limit = dirichlet_increment_limit();
    let mut t = ResultTable::new(&["n", "l1", "increment", "ratio", "pass"]);
    let mut prev: Option<(f64, f64)> = None;
    for n in cfg.schedule.values()? {
        let l1 = kernel_axioms(TorusKernelSpec::Dirichlet(n as usize), &[], g)?.s2;
        let inc = match prev {
            // normalized to one doubling
            Some((pn, pl)) => (l1 - pl) / (n / pn).log2(),
            None => f64::NAN,
        };
        let ratio = inc / limit;
        let ok = n < 64.0 || (ratio - 1.0).abs() <= 0.05;
        t.push(vec![n, l1, inc, ratio, pass(ok)]);
        prev = Some((n, l1));
    }
    Ok(t)
}

pub fn cesaro_rate_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("cesaro_rate");
    c.grid.n = 1 << 14;
    c.function = "holder(0.3),holder(0.5),holder(0.7)".into();
    c.schedule = Schedule::Dyadic { start: 16.0, stop: 1024.0 };
    c.with_param("p", "inf").with_param("slack", 0.15)
}

pub fn cesaro_rate_check(cfg: &ExperimentConfig) -> CliResult<()> {
    for f in torus_functions(cfg)? {
        if !matches!(f, TorusFunction::Holder { .. }) {
            return Err(CliError::Validation("function: cesaro_rate takes holder(alpha) keys".into()));
        }
    }
    cfg.param("p")?;
    cfg.param("slack")?;
    below_half(cfg, "n")
}

/// The slope is fitted per function and repeated on its rows.
pub fn cesaro_rate(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let g = torus_grid(cfg)?;
    let (p, slack) = (cfg.param("p")?, cfg.param("slack")?);
    let ns = cfg.schedule.values()?;
    let mut t = ResultTable::new(&["alpha", "n", "error", "slope", "pass"]);
    for func in torus_functions(cfg)? {
        let TorusFunction::Holder { alpha } = func else { unreachable!("checked") };
        let rows = convergence_experiment(MeanKind::Cesaro, &func.sample(g), &ns, p)?;
        let s = loglog_slope(&rows);
        for (n, e) in rows {
            t.push(vec![alpha, n, e, s, pass((s + alpha).abs() <= slack)]);
        }
    }
    Ok(t)
}

pub fn converge_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("converge");
    c.grid.n = 1 << 14;
    c.function = "holder(0.5)".into();
    c.method = "cesaro".into();
    c.schedule = Schedule::Dyadic { start: 4.0, stop: 1024.0 };
    c.with_param("p", "inf")
}

pub fn converge_check(cfg: &ExperimentConfig) -> CliResult<()> {
    let kind = MeanKind::parse(&cfg.method).map_err(invalid)?;
    if torus_functions(cfg)?.len() != 1 {
        return Err(CliError::Validation("function: converge takes a single key".into()));
    }
    if !(cfg.param("p")? >= 1.0) {
        return Err(CliError::Validation("params.p must be at least 1".into()));
    }
    for v in cfg.schedule.values()? {
        kind.with_param(v).map_err(invalid)?;
    }
    if matches!(kind, MeanKind::Partial | MeanKind::Cesaro) {
        below_half(cfg, "n")?;
    }
    Ok(())
}

pub fn converge(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let kind = MeanKind::parse(&cfg.method).map_err(invalid)?;
    let f = torus_functions(cfg)?[0].sample(torus_grid(cfg)?);
    let rows = convergence_experiment(kind, &f, &cfg.schedule.values()?, cfg.param("p")?)?;
    let mut t = ResultTable::new(&["param", "error"]);
    for &(q, e) in &rows {
        t.push(vec![q, e]);
    }
    let positive: Vec<(f64, f64)> = rows.into_iter().filter(|&(q, e)| q > 0.0 && e > 0.0).collect();
    if positive.len() >= 2 {
        t.details.push(serde_json::json!({ "loglog_slope": loglog_slope(&positive) }));
    }
    Ok(t)
}

pub fn hilbert_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("hilbert_torus");
    c.grid.n = 4096;
    c.seed = 5;
    c.with_param("trials", 10).with_param("degree", 512)
}

pub fn hilbert_check(cfg: &ExperimentConfig) -> CliResult<()> {
    cfg.count("trials")?;
    if 2 * cfg.count("degree")? >= cfg.grid.n {
        return Err(CliError::Validation("params.degree must be below N/2".into()));
    }
    Ok(())
}

/// Random trigonometric polynomials normalized to unit L² norm.
pub fn hilbert(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let g = torus_grid(cfg)?;
    let deg = cfg.count("degree")?;
    let mut t = ResultTable::new(&["seed", "pv_diff", "square_err", "adjoint_err", "pass"]);
    for i in 0..cfg.count("trials")? as u64 {
        let seed = cfg.seed.wrapping_add(2 * i);
        let unit = |s: u64| {
            let f = random_trig_poly(g, deg, s);
            let n = lp_norm(&f, 2.0).unwrap();
            f.scale(C64::new(1.0 / n, 0.0))
        };
        let (f, h) = (unit(seed), unit(seed.wrapping_add(1)));
        let hf = hilbert_torus(&f);
        let pv = hilbert_torus_pv(&f, 4.0 * g.spacing())?.max_abs_diff(&hf);
        let mean = dft_analyze(&f).get(0);
        let sq = hilbert_torus(&hf).max_abs_diff(&f.map(|v| mean - v));
        let adj = (hf.inner(&h)? + f.inner(&hilbert_torus(&h))?).norm();
        t.push(vec![seed as f64, pv, sq, adj, pass(pv <= 1e-6 && sq <= 1e-12 && adj <= 1e-12)]);
    }
    Ok(t)
}

pub fn jump_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("jump");
    c.grid.n = 1 << 14;
    c.function = "sawtooth,expjump".into();
    c.schedule = Schedule::Dyadic { start: 16.0, stop: 1024.0 };
    c
}

pub fn jump_check(cfg: &ExperimentConfig) -> CliResult<()> {
    for f in torus_functions(cfg)? {
        if !matches!(f, TorusFunction::Sawtooth | TorusFunction::ExpJump | TorusFunction::Square) {
            return Err(CliError::Validation("function: jump takes sawtooth, square or expjump".into()));
        }
    }
    below_half(cfg, "n")
}

/// Partial sums at the node `t = -π`, where these functions jump; the
/// target is the sampled value there, the midpoint of the one-sided limits.
/// A function passes when its last error is at most 0.05 and the errors do
/// not increase along the schedule (rounding slack 1e-12).
pub fn jump(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let g = torus_grid(cfg)?;
    let ns: Vec<usize> = cfg.schedule.values()?.iter().map(|&v| v as usize).collect();
    let mut t = ResultTable::new(&["function", "n", "error", "pass"]);
    for (i, func) in torus_functions(cfg)?.into_iter().enumerate() {
        let f = func.sample(g);
        let target = f.values()[0];
        let rows = jump_experiment(&f, &ns, 0, target)?;
        let last = rows.last().map(|r| r.1).unwrap_or(f64::INFINITY);
        let ok = last <= 0.05 && rows.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-12);
        for (n, e) in rows {
            t.push(vec![i as f64, n as f64, e, pass(ok)]);
        }
    }
    Ok(t)
}
