use harmonia::catalog::{random_nonneg_line, random_torus};
use harmonia::maximal::hl_maximal;
use harmonia::torus::hausdorff_young_ratio;
use harmonia::uncertainty::{
    heisenberg_report, lp_interpolation_residual, marcinkiewicz_ceiling, optimal_shift, young_residual, Operator,
    TailSpec,
};
use harmonia::{lp_norm, Error, LineGrid, LineSignal, SeededRng, TorusGrid, C64};

use super::pass;
use crate::config::ExperimentConfig;
use crate::error::CliResult;
use crate::table::ResultTable;

const INF: f64 = f64::INFINITY;
const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

pub fn heisenberg_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("heisenberg");
    c.seed = 11;
    c.with_param("trials", 1000)
}

/// Sum of three modulated, shifted Gaussians with random widths in [0.5, 2].
pub fn gaussian_packet(g: LineGrid, seed: u64) -> LineSignal {
    let mut rng = SeededRng::new(seed);
    let terms: Vec<(C64, f64, f64, f64)> = (0..3)
        .map(|_| {
            (
                rng.complex_normal(),
                rng.uniform_in(-3.0, 3.0),
                rng.uniform_in(-4.0, 4.0),
                rng.uniform_in(0.5, 2.0),
            )
        })
        .collect();
    LineSignal::from_fn(g, |x| {
        terms
            .iter()
            .map(|(c, x0, xi, s)| c * C64::from_polar((-((x[0] - x0) / s).powi(2) / 2.0).exp(), xi * x[0]))
            .sum()
    })
}

/// Case codes: 0 centred Gaussian, 1 `e^{5ix}e^{-(x-2)²/2}` at (2, 5),
/// 2 tent with a 1e-2 spectral tail tolerance, 3 box (passes when rejected),
/// 4 random packets at their optimal shifts (L = 32, N = 2048).
pub fn heisenberg(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let mut t = ResultTable::new(&["case", "seed", "product", "lower_bound", "ratio", "pass"]);
    let strict = TailSpec::default();
    let g = LineGrid::new(1, 16.0, 1024)?;
    let gauss = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
    let moved = LineSignal::from_fn(g, |x| C64::from_polar((-(x[0] - 2.0).powi(2) / 2.0).exp(), 5.0 * x[0]));
    for (case, f, a, b) in [(0.0, &gauss, 0.0, 0.0), (1.0, &moved, 2.0, 5.0)] {
        let r = heisenberg_report(f, C64::new(a, 0.0), C64::new(b, 0.0), strict)?;
        let ratio = r.product / r.lower_bound;
        t.push(vec![case, -1.0, r.product, r.lower_bound, ratio, pass((ratio - 1.0).abs() <= 1e-8)]);
    }
    let g = LineGrid::new(1, 8.0, 4096)?;
    let tent = LineSignal::from_real_fn(g, |x| (1.0 - x[0].abs()).max(0.0));
    let loose = TailSpec { space: 1e-10, freq: 1e-2 };
    let r = heisenberg_report(&tent, ZERO, ZERO, loose)?;
    let ratio = r.product / r.lower_bound;
    t.push(vec![2.0, -1.0, r.product, r.lower_bound, ratio, pass(ratio > 1.05)]);
    let bx = LineSignal::from_real_fn(g, |x| if x[0].abs() < 1.0 { 1.0 } else { 0.0 });
    let rejected = matches!(heisenberg_report(&bx, ZERO, ZERO, loose), Err(Error::DivergentMoment(_)));
    t.push(vec![3.0, -1.0, f64::NAN, f64::NAN, f64::NAN, pass(rejected)]);
    let g = LineGrid::new(1, 32.0, 2048)?;
    for i in 0..cfg.count("trials")? as u64 {
        let seed = cfg.seed.wrapping_add(i);
        let f = gaussian_packet(g, seed);
        let a = optimal_shift(&f, Operator::Position)?;
        let b = optimal_shift(&f, Operator::Momentum)?;
        let r = heisenberg_report(&f, a, b, strict)?;
        let ratio = r.product / r.lower_bound;
        t.push(vec![4.0, seed as f64, r.product, r.lower_bound, ratio, pass(ratio >= 1.0 - 1e-9)]);
    }
    Ok(t)
}

pub fn interpolation_defaults() -> ExperimentConfig {
    let mut c = ExperimentConfig::blank("interpolation");
    c.seed = 21;
    c.with_param("trials", 1000)
}

/// Lp interpolation triples `(p0, p1, θ)`.
pub const TRIPLES: [(f64, f64, f64); 9] = [
    (1.0, 2.0, 0.5),
    (1.0, 4.0, 0.3),
    (1.0, INF, 0.5),
    (2.0, 4.0, 0.5),
    (2.0, INF, 0.25),
    (1.5, 3.0, 0.7),
    (1.0, 3.0, 0.9),
    (3.0, 8.0, 0.4),
    (4.0, INF, 0.6),
];

/// Young exponents `(p, q, r)` with `1/p + 1/q = 1/r + 1`.
pub const YOUNG: [(f64, f64, f64); 8] = [
    (1.0, 1.0, 1.0),
    (2.0, 1.0, 2.0),
    (4.0, 1.0, 4.0),
    (INF, 1.0, INF),
    (2.0, 2.0, INF),
    (4.0 / 3.0, 4.0 / 3.0, 2.0),
    (1.5, 1.5, 3.0),
    (4.0 / 3.0, 2.0, 4.0),
];

/// Check codes (columns a, b, c hold the exponents):
/// 0 Lp interpolation, worst residual over `trials` torus signals (N = 256);
/// 1 Young on the torus and 2 on the line, worst residual over `trials/10`
/// pairs scaled to unit sup norm; 3 Hausdorff–Young on the torus, largest
/// ratio; 4 HL maximal `‖Mf‖₂/‖f‖₂` over `trials/2` signals against the
/// Marcinkiewicz ceiling with A0 = 3, A1 = 1.
pub fn interpolation(cfg: &ExperimentConfig) -> CliResult<ResultTable> {
    let trials = cfg.count("trials")?;
    let tg = TorusGrid::new(256)?;
    let lg = LineGrid::new(1, 8.0, 256)?;
    let seed = |i: usize| cfg.seed.wrapping_add(i as u64);
    let torus: Vec<_> = (0..trials).map(|i| random_torus(tg, seed(i))).collect();
    let mut t = ResultTable::new(&["check", "a", "b", "c", "worst", "pass"]);
    for (p0, p1, th) in TRIPLES {
        let mut worst = INF;
        for f in &torus {
            worst = worst.min(lp_interpolation_residual(f, p0, p1, th)?);
        }
        t.push(vec![0.0, p0, p1, th, worst, pass(worst >= -1e-12)]);
    }
    let unit_t = |i: usize| {
        let f = random_torus(tg, seed(i));
        f.scale(C64::new(1.0 / lp_norm(&f, INF).unwrap(), 0.0))
    };
    let unit_l = |i: usize| {
        let f = random_nonneg_line(lg, seed(i));
        f.scale(C64::new(1.0 / lp_norm(&f, INF).unwrap(), 0.0))
    };
    let pairs = (trials / 10).max(1);
    for (p, q, r) in YOUNG {
        let (mut wt, mut wl) = (INF, INF);
        for i in 0..pairs {
            wt = wt.min(young_residual(&unit_t(2 * i), &unit_t(2 * i + 1), p, q, r)?);
            wl = wl.min(young_residual(&unit_l(2 * i), &unit_l(2 * i + 1), p, q, r)?);
        }
        t.push(vec![1.0, p, q, r, wt, pass(wt >= -1e-10)]);
        t.push(vec![2.0, p, q, r, wl, pass(wl >= -1e-6)]);
    }
    for p in [1.0, 4.0 / 3.0, 1.5, 2.0] {
        let mut worst = 0.0_f64;
        for f in &torus {
            worst = worst.max(hausdorff_young_ratio(f, p)?);
        }
        t.push(vec![3.0, p, 0.0, 0.0, worst, pass(worst <= 1.0 + 1e-10)]);
    }
    let ceiling = marcinkiewicz_ceiling(1.0, INF, 2.0, 3.0, 1.0)?;
    let hl = LineGrid::new(1, 4.0, 256)?;
    let mut worst = 0.0_f64;
    for i in 0..(trials / 2).max(1) {
        let f = random_nonneg_line(hl, seed(i));
        worst = worst.max(lp_norm(&hl_maximal(&f), 2.0)? / lp_norm(&f, 2.0)?);
    }
    t.push(vec![4.0, 2.0, ceiling, 0.0, worst, pass(worst <= ceiling)]);
    Ok(t)
}
