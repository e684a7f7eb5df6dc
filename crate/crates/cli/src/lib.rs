//! Seeded, reproducible experiments over the `harmonia` library.
//!
//! Each run takes an [`ExperimentConfig`] and returns a [`ResultTable`]
//! whose data section depends only on the config.

pub mod config;
pub mod error;
pub mod experiments;
pub mod table;

use std::time::Instant;

pub use config::{ExperimentConfig, Format, GridConfig, Schedule};
pub use error::{CliError, CliResult};
pub use experiments::{find, Experiment, CATALOG};
pub use table::{Metadata, ResultTable};

use config::suggest;

fn unknown_experiment(name: &str) -> CliError {
    let names: Vec<String> = CATALOG.iter().map(|e| e.name.to_string()).collect();
    CliError::Validation(format!(
        "unknown experiment {name:?}{}; run `harmonia list`",
        suggest(name, &names)
    ))
}

/// Every precondition check, without running. Empty means valid.
pub fn validate(cfg: &ExperimentConfig) -> Vec<String> {
    let Some(e) = find(&cfg.experiment) else {
        return vec![unknown_experiment(&cfg.experiment).to_string()];
    };
    let mut out = Vec::new();
    for f in e.fields {
        let r = match f {
            experiments::Field::Grid => {
                harmonia::LineGrid::new(cfg.grid.d, cfg.grid.l, cfg.grid.n).map(|_| ()).map_err(error::invalid)
            }
            experiments::Field::Schedule => cfg.schedule.values().map(|_| ()),
            experiments::Field::Params(ps) => ps.iter().try_for_each(|p| cfg.param(p).map(|_| ())),
            _ => Ok(()),
        };
        if let Err(err) = r {
            out.push(err.to_string());
        }
    }
    if out.is_empty() {
        if let Err(err) = (e.check)(cfg) {
            out.push(err.to_string());
        }
    }
    out
}

/// Validate, run and attach metadata.
pub fn run(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let e = find(&cfg.experiment).ok_or_else(|| unknown_experiment(&cfg.experiment))?;
    let diags = validate(cfg);
    if !diags.is_empty() {
        return Err(CliError::Validation(diags.join("; ")));
    }
    let start = Instant::now();
    let mut table = (e.run)(cfg)?;
    table.metadata = Some(Metadata {
        config: cfg.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_clock_s: start.elapsed().as_secs_f64(),
    });
    Ok(table)
}

/// Default config for a named experiment.
pub fn defaults(name: &str) -> CliResult<ExperimentConfig> {
    find(name).map(|e| (e.defaults)()).ok_or_else(|| unknown_experiment(name))
}
