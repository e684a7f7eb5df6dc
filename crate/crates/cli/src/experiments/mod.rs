//! The experiment catalog.

mod line;
mod maximal;
mod sampling;
mod torus;
mod uncertainty;

use harmonia::{LineGrid, TorusGrid};

use crate::config::ExperimentConfig;
use crate::error::{invalid, CliResult};
use crate::table::ResultTable;

/// Which config fields an experiment reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Grid,
    Function,
    Method,
    Schedule,
    Seed,
    Params(&'static [&'static str]),
}

pub struct Experiment {
    pub name: &'static str,
    pub summary: &'static str,
    /// Acceptance criterion number, if the experiment decides one.
    pub criterion: Option<u8>,
    pub fields: &'static [Field],
    pub defaults: fn() -> ExperimentConfig,
    /// Extra precondition checks beyond the generic ones.
    pub check: fn(&ExperimentConfig) -> CliResult<()>,
    pub run: fn(&ExperimentConfig) -> CliResult<ResultTable>,
}

impl Experiment {
    pub fn required(&self) -> Vec<String> {
        self.fields
            .iter()
            .flat_map(|f| match f {
                Field::Grid => vec!["grid".to_string()],
                Field::Function => vec!["function".into()],
                Field::Method => vec!["method".into()],
                Field::Schedule => vec!["schedule".into()],
                Field::Seed => vec!["seed".into()],
                Field::Params(ps) => ps.iter().map(|p| format!("params.{p}")).collect(),
            })
            .collect()
    }
}

fn no_check(_: &ExperimentConfig) -> CliResult<()> {
    Ok(())
}

/// Sorted by name.
pub static CATALOG: &[Experiment] = &[
    Experiment {
        name: "cesaro_rate",
        summary: "Cesàro error on Hölder functions and its log-log slope",
        criterion: Some(4),
        fields: &[Field::Grid, Field::Function, Field::Schedule, Field::Params(&["p", "slack"])],
        defaults: torus::cesaro_rate_defaults,
        check: torus::cesaro_rate_check,
        run: torus::cesaro_rate,
    },
    Experiment {
        name: "converge",
        summary: "‖mean − f‖_p over a parameter schedule for one summability method",
        criterion: None,
        fields: &[Field::Grid, Field::Function, Field::Method, Field::Schedule, Field::Params(&["p"])],
        defaults: torus::converge_defaults,
        check: torus::converge_check,
        run: torus::converge,
    },
    Experiment {
        name: "cosecant",
        summary: "Σ (x+n)^{-2} against π²/sin²(πx) and the scaled tail",
        criterion: Some(13),
        fields: &[Field::Schedule, Field::Params(&["x"])],
        defaults: sampling::cosecant_defaults,
        check: no_check,
        run: sampling::cosecant,
    },
    Experiment {
        name: "czd",
        summary: "Calderón–Zygmund decompositions on random signals, properties (i)-(vi)",
        criterion: Some(7),
        fields: &[Field::Grid, Field::Function, Field::Schedule, Field::Params(&["trials"])],
        defaults: maximal::czd_defaults,
        check: maximal::czd_check,
        run: maximal::czd,
    },
    Experiment {
        name: "determinism",
        summary: "runs every acceptance experiment twice and compares the data bytes",
        criterion: Some(17),
        fields: &[],
        defaults: determinism_defaults,
        check: no_check,
        run: determinism,
    },
    Experiment {
        name: "dirichlet_l1",
        summary: "‖D_n‖₁ over dyadic n and its increments against (4/π²) ln 2",
        criterion: Some(3),
        fields: &[Field::Grid, Field::Schedule],
        defaults: torus::dirichlet_l1_defaults,
        check: no_check,
        run: torus::dirichlet_l1,
    },
    Experiment {
        name: "heisenberg",
        summary: "uncertainty products: Gaussian equality, tent, box rejection, random packets",
        criterion: Some(14),
        fields: &[Field::Seed, Field::Params(&["trials"])],
        defaults: uncertainty::heisenberg_defaults,
        check: no_check,
        run: uncertainty::heisenberg,
    },
    Experiment {
        name: "hilbert_torus",
        summary: "torus Hilbert transform: p.v. vs multiplier, H², anti-self-adjointness",
        criterion: Some(5),
        fields: &[Field::Grid, Field::Seed, Field::Params(&["trials", "degree"])],
        defaults: torus::hilbert_defaults,
        check: torus::hilbert_check,
        run: torus::hilbert,
    },
    Experiment {
        name: "interpolation",
        summary: "Lp interpolation, Young, Hausdorff–Young and the Marcinkiewicz ceiling",
        criterion: Some(15),
        fields: &[Field::Seed, Field::Params(&["trials"])],
        defaults: uncertainty::interpolation_defaults,
        check: no_check,
        run: uncertainty::interpolation,
    },
    Experiment {
        name: "jump",
        summary: "partial sums at a jump against the midpoint of the one-sided limits",
        criterion: Some(16),
        fields: &[Field::Grid, Field::Function, Field::Schedule],
        defaults: torus::jump_defaults,
        check: torus::jump_check,
        run: torus::jump,
    },
    Experiment {
        name: "kernel_forms",
        summary: "torus kernels as series vs closed forms; Fejér as a mean of Dirichlets",
        criterion: Some(2),
        fields: &[Field::Grid],
        defaults: torus::kernel_forms_defaults,
        check: no_check,
        run: torus::kernel_forms,
    },
    Experiment {
        name: "majorization",
        summary: "Fejér and Poisson maximal functions against the Lebesgue maximal function",
        criterion: Some(9),
        fields: &[Field::Grid, Field::Seed, Field::Params(&["trials"])],
        defaults: maximal::majorization_defaults,
        check: no_check,
        run: maximal::majorization,
    },
    Experiment {
        name: "plancherel",
        summary: "inversion and Plancherel on the torus and on the line",
        criterion: Some(1),
        fields: &[Field::Grid, Field::Function, Field::Schedule, Field::Seed],
        defaults: torus::plancherel_defaults,
        check: torus::plancherel_check,
        run: torus::plancherel,
    },
    Experiment {
        name: "poisson_summation",
        summary: "Poisson summation for the Gaussian, periodized Poisson kernels, theta",
        criterion: Some(12),
        fields: &[Field::Schedule],
        defaults: sampling::poisson_defaults,
        check: no_check,
        run: sampling::poisson,
    },
    Experiment {
        name: "riesz",
        summary: "Riesz transforms in d = 2: Σ R_j² = −I, R₁R₂Δ, p.v. vs multiplier",
        criterion: Some(10),
        fields: &[Field::Seed, Field::Params(&["trials"])],
        defaults: line::riesz_defaults,
        check: no_check,
        run: line::riesz,
    },
    Experiment {
        name: "riesz_projection",
        summary: "partial sums from Riesz projections on the torus and on the line",
        criterion: Some(6),
        fields: &[Field::Grid, Field::Seed, Field::Params(&["trials", "torus_n"])],
        defaults: line::projection_defaults,
        check: line::projection_check,
        run: line::projection,
    },
    Experiment {
        name: "sampling",
        summary: "sinc reconstruction of the five-sinc signal and the interpolation property",
        criterion: Some(11),
        fields: &[Field::Seed, Field::Params(&["omega", "n_max", "trials"])],
        defaults: sampling::sampling_defaults,
        check: no_check,
        run: sampling::sampling,
    },
    Experiment {
        name: "theta",
        summary: "theta function and the residual of its functional equation",
        criterion: None,
        fields: &[Field::Schedule],
        defaults: sampling::theta_defaults,
        check: no_check,
        run: sampling::theta,
    },
    Experiment {
        name: "weak11",
        summary: "weak (1,1) ratio of the Hardy–Littlewood maximal function on spikes",
        criterion: Some(8),
        fields: &[Field::Grid, Field::Schedule, Field::Seed, Field::Params(&["trials"])],
        defaults: maximal::weak11_defaults,
        check: maximal::weak11_check,
        run: maximal::weak11,
    },
];

pub fn find(name: &str) -> Option<&'static Experiment> {
    CATALOG.iter().find(|e| e.name == name)
}

pub(crate) fn pass(ok: bool) -> f64 {
    if ok {
        1.0
    } else {
        0.0
    }
}

pub(crate) fn torus_grid(cfg: &ExperimentConfig) -> CliResult<TorusGrid> {
    TorusGrid::new(cfg.grid.n).map_err(invalid)
}

pub(crate) fn line_grid(cfg: &ExperimentConfig) -> CliResult<LineGrid> {
    LineGrid::new(cfg.grid.d, cfg.grid.l, cfg.grid.n).map_err(invalid)
}

/// Least-squares slope of `ln y` against `ln x`.
pub(crate) fn loglog_slope(pts: &[(f64, f64)]) -> f64 {
    let lp: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = lp.len() as f64;
    let mx = lp.iter().map(|p| p.0).sum::<f64>() / n;
    let my = lp.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = lp.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = lp.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn determinism_defaults() -> ExperimentConfig {
    ExperimentConfig::blank("determinism")
}

/// Data sections of two runs of `name` with its default config.
pub fn run_twice(name: &str) -> CliResult<(String, String)> {
    let e = find(name).expect("catalog entry");
    let cfg = (e.defaults)();
    Ok(((e.run)(&cfg)?.csv_data(), (e.run)(&cfg)?.csv_data()))
}

fn determinism(_: &ExperimentConfig) -> CliResult<ResultTable> {
    let mut t = ResultTable::new(&["criterion", "bytes", "identical", "pass"]);
    for e in CATALOG.iter().filter(|e| e.criterion.is_some() && e.name != "determinism") {
        let (a, b) = run_twice(e.name)?;
        t.push(vec![e.criterion.unwrap() as f64, a.len() as f64, pass(a == b), pass(a == b)]);
    }
    Ok(t)
}
