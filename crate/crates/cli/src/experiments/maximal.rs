use harmonia::catalog::{random_torus, spikes_line, LineFunction, TorusFunction};
use harmonia::maximal::{
    all_boxes, cz_decompose, cz_decompose_torus, hl_maximal, torus_maximal, weak_ratio_sup, CzProperties,
    TorusMaximalKind,
};
use harmonia::{lp_norm, LineGrid, TorusGrid};

use super::{line_grid, pass, torus_grid};
use crate::config::{ExperimentConfig, Schedule};
use crate::error::{invalid, CliError, CliResult};
use crate::table::ResultTable;

pub fn czd_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("czd");
    c.grid = crate::config::GridConfig { n: 256, l: 4.0, d: 1 };
    c.function = "randnn(0)".into();
    c.schedule = Schedule::List {
        values: vec![1.5, 2.0, 4.0, 8.0, 16.0],
    };
    c.with_param("trials", 100)
}

fn base_seed(cfg: &ExperimentConfig) -> CliResult<u64> {
    match LineFunction::parse(&cfg.function).map_err(invalid)? {
        LineFunction::RandNonneg { seed } => Ok(seed),
        _ => Err(CliError::Validation("function: czd takes randnn(seed)".into())),
    }
}

pub fn czd_check(cfg: &ExperimentConfig) -> CliResult<()> {
    base_seed(cfg)?;
    cfg.count("trials")?;
    line_grid(cfg)?;
    if let Some(v) = cfg.schedule.values()?.iter().find(|&&v| !(v > 1.0)) {
        return Err(CliError::Validation(format!(
            "schedule: λ factor {v} must exceed 1 (λ is the factor times the mean of |f|)"
        )));
    }
    Ok(())
}

/// λ is the schedule factor times the domain mean of |f| (line) or ‖f‖₁
/// (torus). Rows cover the line grid (domain 0) and the torus with the
/// same N (domain 1); trial 0's summaries go to the JSON details.
pub fn czd(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let lg = line_grid(cfg)?;
    let tg = torus_grid(cfg)?;
    let seed = base_seed(cfg)?;
    let mut t = ResultTable::new(&[
        "domain", "trial", "factor", "lambda", "i", "ii", "iii", "iv", "v", "vi", "measure_ratio", "pass",
    ]);
    let row = |t: &mut ResultTable, dom: f64, trial: usize, factor: f64, lambda: f64, p: &CzProperties| {
        let c = p.check(1e-10);
        let mut r = vec![dom, trial as f64, factor, lambda];
        r.extend(c.iter().map(|&b| pass(b)));
        r.push(p.total_measure / p.measure_bound);
        r.push(pass(c.iter().all(|&b| b)));
        t.push(r);
    };
    for trial in 0..cfg.count("trials")? {
        let s = seed.wrapping_add(trial as u64);
        let f = LineFunction::RandNonneg { seed: s }.sample(lg);
        let mean = lp_norm(&f, 1.0)? / lg.cell_measure() / lg.len() as f64;
        let ft = TorusFunction::RandNonneg { seed: s }.sample(tg);
        let l1 = lp_norm(&ft, 1.0)?;
        for factor in cfg.schedule.values()? {
            let cz = cz_decompose(&f, factor * mean)?;
            let p = cz.properties();
            row(&mut t, 0.0, trial, factor, factor * mean, &p);
            let czt = cz_decompose_torus(&ft, factor * l1)?;
            let pt = czt.properties();
            row(&mut t, 1.0, trial, factor, factor * l1, &pt);
            if trial == 0 {
                t.details.push(serde_json::json!({
                    "factor": factor,
                    "line": cz.summary(),
                    "torus": czt.summary(),
                }));
            }
        }
    }
    Ok(t)
}

pub fn weak11_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("weak11");
    c.grid = crate::config::GridConfig { n: 1024, l: 8.0, d: 1 };
    c.schedule = Schedule::List {
        values: vec![1.0, 2.0, 3.0, 5.0, 8.0],
    };
    c.seed = 3;
    c.with_param("trials", 40)
}

pub fn weak11_check(cfg: &ExperimentConfig) -> CliResult<()> {
    if cfg.grid.d != 1 {
        return Err(CliError::Validation("grid.d: weak11 runs in d = 1".into()));
    }
    cfg.count("trials")?;
    if cfg.schedule.values()?.iter().any(|&v| v < 1.0 || v.fract() != 0.0) {
        return Err(CliError::Validation("schedule: spike counts must be positive integers".into()));
    }
    Ok(())
}

/// `sup_λ λ |{Mf > λ}| / ‖f‖₁` for spike trains; the schedule lists spike counts.
pub fn weak11(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let g: LineGrid = line_grid(cfg)?;
    let mut t = ResultTable::new(&["spikes", "trial", "ratio", "pass"]);
    let mut k = 0u64;
    for count in cfg.schedule.values()? {
        for trial in 0..cfg.count("trials")? {
            let f = spikes_line(g, count as usize, cfg.seed.wrapping_add(k));
            k += 1;
            let r = weak_ratio_sup(&hl_maximal(&f), lp_norm(&f, 1.0)?)?;
            t.push(vec![count, trial as f64, r, pass(r <= 3.0 + 0.05)]);
        }
    }
    Ok(t)
}

pub fn majorization_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("majorization");
    c.grid.n = 512;
    c.seed = 9;
    c.with_param("trials", 50)
}

/// Margins are `max_t (F*f - 2L*|f|)` and `max_t (P*f - L*|f|)`; Fejér uses
/// every `n < N/2`, Poisson `r = 0.01, ..., 0.99`.
pub fn majorization(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let g: TorusGrid = torus_grid(cfg)?;
    let ns: Vec<f64> = (0..g.size() / 2).map(|n| n as f64).collect();
    let rs: Vec<f64> = (1..100).map(|i| i as f64 / 100.0).collect();
    let mut t = ResultTable::new(&["trial", "fejer_margin", "poisson_margin", "pass"]);
    for trial in 0..cfg.count("trials")? {
        let f = random_torus(g, cfg.seed.wrapping_add(trial as u64));
        let lf = torus_maximal(TorusMaximalKind::Lebesgue, &f.abs(), &all_boxes(g.size()))?;
        let ff = torus_maximal(TorusMaximalKind::Fejer, &f, &ns)?;
        let pf = torus_maximal(TorusMaximalKind::Poisson, &f, &rs)?;
        let margin = |a: &harmonia::TorusSignal, c: f64| {
            a.values()
                .iter()
                .zip(lf.values())
                .map(|(x, l)| x.re - c * l.re)
                .fold(f64::NEG_INFINITY, f64::max)
        };
        let (fm, pm) = (margin(&ff, 2.0), margin(&pf, 1.0));
        t.push(vec![trial as f64, fm, pm, pass(fm <= 1e-10 && pm <= 1e-10)]);
    }
    Ok(t)
}
