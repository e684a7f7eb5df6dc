//! Named test functions on the torus and on the line, plus seeded ensembles.
//!
//! Torus keys (on `[-π, π)`, jumps sampled at the midpoint of the one-sided limits):
//!
//! | key | definition |
//! |-----|------------|
//! | `sawtooth` | `t`, with value 0 at `t = -π` |
//! | `triangle` | `|t|` |
//! | `square` | `sign(t)`, 0 at `t = 0` and `t = -π` |
//! | `lacunary(alpha,K)` | `Σ_{k=0}^{K} 2^{-kα} e^{i 2^k t}` |
//! | `trigpoly(seed,deg)` | `Σ_{|n|≤deg} c_n e^{int}`, `c_n` complex normal over √2 |
//! | `holder(alpha)` | `|t|^α` |
//! | `expjump` | `e^t`, value `cosh π` at `t = -π` |
//! | `randn(seed)` | i.i.d. complex normal samples |
//! | `randnn(seed)` | i.i.d. log-normal nonnegative samples |
//!
//! Line keys are listed on [`LineFunction`].

use std::f64::consts::PI;

use crate::error::{invalid, Error, Result};
use crate::grid::{dft_line, idft_line, LineGrid, LineSignal, SpectrumR, TorusGrid, TorusSignal, C64, ZERO};
use crate::rng::SeededRng;

/// Split `name(a,b,...)` into the name and numeric arguments.
pub fn parse_key(key: &str) -> Result<(String, Vec<f64>)> {
    let key = key.trim();
    let Some(open) = key.find('(') else {
        return Ok((key.to_string(), Vec::new()));
    };
    if !key.ends_with(')') {
        return Err(invalid("key", format!("`{key}` is missing a closing parenthesis")));
    }
    let name = key[..open].trim().to_string();
    let inner = &key[open + 1..key.len() - 1];
    let args = inner
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| invalid("key", format!("argument `{}` of `{key}` is not a number", s.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((name, args))
}

fn arity(key: &str, args: &[f64], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(invalid("key", format!("`{key}` takes {n} argument(s), got {}", args.len())));
    }
    Ok(())
}

fn as_seed(x: f64) -> Result<u64> {
    if x < 0.0 || x.fract() != 0.0 {
        return Err(invalid("seed", format!("{x} is not a nonnegative integer")));
    }
    Ok(x as u64)
}

#[derive(Debug, Clone, PartialEq)]
pub enum TorusFunction {
    Sawtooth,
    Triangle,
    Square,
    Lacunary { alpha: f64, terms: u32 },
    TrigPoly { seed: u64, degree: usize },
    Holder { alpha: f64 },
    ExpJump,
    RandNormal { seed: u64 },
    RandNonneg { seed: u64 },
}

pub const TORUS_KEYS: &[&str] = &[
    "expjump",
    "holder(alpha)",
    "lacunary(alpha,K)",
    "randn(seed)",
    "randnn(seed)",
    "sawtooth",
    "square",
    "triangle",
    "trigpoly(seed,deg)",
];

impl TorusFunction {
    pub fn parse(key: &str) -> Result<Self> {
        let (name, a) = parse_key(key)?;
        let f = match name.as_str() {
            "sawtooth" => Self::Sawtooth,
            "triangle" => Self::Triangle,
            "square" => Self::Square,
            "expjump" => Self::ExpJump,
            "lacunary" => {
                arity(key, &a, 2)?;
                if a[1] < 0.0 || a[1].fract() != 0.0 || a[1] > 60.0 {
                    return Err(invalid("K", "term count must be an integer in 0..=60"));
                }
                Self::Lacunary {
                    alpha: a[0],
                    terms: a[1] as u32,
                }
            }
            "trigpoly" => {
                arity(key, &a, 2)?;
                Self::TrigPoly {
                    seed: as_seed(a[0])?,
                    degree: as_seed(a[1])? as usize,
                }
            }
            "holder" => {
                arity(key, &a, 1)?;
                if !(a[0] > 0.0 && a[0] <= 1.0) {
                    return Err(invalid("alpha", "Hölder exponent must lie in (0, 1]"));
                }
                Self::Holder { alpha: a[0] }
            }
            "randn" => {
                arity(key, &a, 1)?;
                Self::RandNormal { seed: as_seed(a[0])? }
            }
            "randnn" => {
                arity(key, &a, 1)?;
                Self::RandNonneg { seed: as_seed(a[0])? }
            }
            _ => {
                return Err(Error::UnknownKey {
                    kind: "torus function",
                    key: key.to_string(),
                })
            }
        };
        if !a.is_empty() && a.iter().any(|x| !x.is_finite()) {
            return Err(invalid("key", "arguments must be finite"));
        }
        Ok(f)
    }

    fn trig_coeffs(seed: u64, degree: usize) -> Vec<C64> {
        let mut rng = SeededRng::new(seed);
        (0..2 * degree + 1)
            .map(|_| rng.complex_normal() / std::f64::consts::SQRT_2)
            .collect()
    }

    /// Pointwise value for the deterministic entries.
    pub fn eval(&self, t: f64) -> Option<C64> {
        let r = |x: f64| Some(C64::new(x, 0.0));
        match *self {
            Self::Sawtooth => {
                if t <= -PI || t >= PI {
                    r(0.0)
                } else {
                    r(t)
                }
            }
            Self::Triangle => r(t.abs()),
            Self::Square => {
                if t <= -PI || t == 0.0 {
                    r(0.0)
                } else {
                    r(t.signum())
                }
            }
            Self::ExpJump => {
                if t <= -PI || t >= PI {
                    r(PI.cosh())
                } else {
                    r(t.exp())
                }
            }
            Self::Holder { alpha } => r(t.abs().powf(alpha)),
            Self::Lacunary { alpha, terms } => Some(
                (0..=terms)
                    .map(|k| {
                        let f = (1u64 << k) as f64;
                        C64::from_polar(f.powf(-alpha), f * t)
                    })
                    .sum(),
            ),
            Self::TrigPoly { seed, degree } => {
                let c = Self::trig_coeffs(seed, degree);
                Some(
                    c.iter()
                        .enumerate()
                        .map(|(i, &ci)| ci * C64::from_polar(1.0, (i as f64 - degree as f64) * t))
                        .sum(),
                )
            }
            Self::RandNormal { .. } | Self::RandNonneg { .. } => None,
        }
    }

    pub fn sample(&self, grid: TorusGrid) -> TorusSignal {
        match *self {
            Self::RandNormal { seed } => {
                let mut rng = SeededRng::new(seed);
                let v = (0..grid.size()).map(|_| rng.complex_normal()).collect();
                TorusSignal::new(grid, v).expect("length matches")
            }
            Self::RandNonneg { seed } => {
                let mut rng = SeededRng::new(seed);
                let v = (0..grid.size()).map(|_| C64::new(rng.normal().exp(), 0.0)).collect();
                TorusSignal::new(grid, v).expect("length matches")
            }
            Self::TrigPoly { seed, degree } => {
                let c = Self::trig_coeffs(seed, degree);
                let mut s = crate::grid::SpectrumT::zeros(grid.size()).expect("grid size");
                for (i, &ci) in c.iter().enumerate() {
                    let n = i as i64 - degree as i64;
                    if n >= -(grid.size() as i64 / 2) && n < grid.size() as i64 / 2 {
                        s.set(n, ci).expect("in band");
                    }
                }
                if 2 * degree < grid.size() {
                    crate::grid::dft_synthesize(&s)
                } else {
                    TorusSignal::from_fn(grid, |t| self.eval(t).unwrap_or(ZERO))
                }
            }
            _ => TorusSignal::from_fn(grid, |t| self.eval(t).unwrap_or(ZERO)),
        }
    }
}

/// Line keys. `d` is taken from the grid; radial entries use `|x|`, the
/// others are products over the axes.
///
/// | key | spatial | spectral |
/// |-----|---------|----------|
/// | `box` | `Π 1_{[-1,1]}(x_j)` | `Π 2 sin ξ_j / ξ_j` |
/// | `tent` | `Π (1-|x_j|)_+` | `Π sinc²(ξ_j/2)` |
/// | `exp_abs` | `e^{-|x|}` | `(2π)^d c_d (1+|ξ|²)^{-(d+1)/2}` |
/// | `gaussian` | `e^{-|x|²/2}` | `(2π)^{d/2} e^{-|ξ|²/2}` |
/// | `dirichlet_fn` | `π^{-d} Π sin x_j / x_j` | `1_{[-1,1]^d}` |
/// | `fejer_fn` | `(2π)^{-d} Π sinc²(x_j/2)` | `Π (1-|ξ_j|)_+` |
/// | `poisson_fn` | `c_d (1+|x|²)^{-(d+1)/2}` | `e^{-|ξ|}` |
/// | `gauss_fn` | `(2π)^{-d/2} e^{-|x|²/2}` | `e^{-|ξ|²/2}` |
/// | `bump(seed)` | sum of three smooth compactly supported bumps | none |
/// | `randnn(seed)` | i.i.d. log-normal samples | none |
///
/// `c_d = Γ((d+1)/2)/π^{(d+1)/2}`; `sinc x = sin x / x`. Indicator edges take the value ½.
#[derive(Debug, Clone, PartialEq)]
pub enum LineFunction {
    Box,
    Tent,
    ExpAbs,
    Gaussian,
    DirichletFn,
    FejerFn,
    PoissonFn,
    GaussFn,
    Bump { seed: u64 },
    RandNonneg { seed: u64 },
}

pub const LINE_KEYS: &[&str] = &[
    "box",
    "bump(seed)",
    "dirichlet_fn",
    "exp_abs",
    "fejer_fn",
    "gauss_fn",
    "gaussian",
    "poisson_fn",
    "randnn(seed)",
    "tent",
];

pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `Γ((d+1)/2)/π^{(d+1)/2}` for `d ∈ {1, 2}`.
pub fn c_d(d: usize) -> f64 {
    match d {
        1 => 1.0 / PI,
        _ => 1.0 / (2.0 * PI),
    }
}

fn indicator(a: f64) -> f64 {
    if a < 1.0 {
        1.0
    } else if a == 1.0 {
        0.5
    } else {
        0.0
    }
}

fn norm_sq(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn bump_profile(r2: f64) -> f64 {
    if r2 >= 1.0 {
        0.0
    } else {
        (-1.0 / (1.0 - r2)).exp()
    }
}

impl LineFunction {
    pub fn parse(key: &str) -> Result<Self> {
        let (name, a) = parse_key(key)?;
        Ok(match name.as_str() {
            "box" => Self::Box,
            "tent" => Self::Tent,
            "exp_abs" => Self::ExpAbs,
            "gaussian" => Self::Gaussian,
            "dirichlet_fn" => Self::DirichletFn,
            "fejer_fn" => Self::FejerFn,
            "poisson_fn" => Self::PoissonFn,
            "gauss_fn" => Self::GaussFn,
            "bump" => {
                arity(key, &a, 1)?;
                Self::Bump { seed: as_seed(a[0])? }
            }
            "randnn" => {
                arity(key, &a, 1)?;
                Self::RandNonneg { seed: as_seed(a[0])? }
            }
            _ => {
                return Err(Error::UnknownKey {
                    kind: "line function",
                    key: key.to_string(),
                })
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Box => "box",
            Self::Tent => "tent",
            Self::ExpAbs => "exp_abs",
            Self::Gaussian => "gaussian",
            Self::DirichletFn => "dirichlet_fn",
            Self::FejerFn => "fejer_fn",
            Self::PoissonFn => "poisson_fn",
            Self::GaussFn => "gauss_fn",
            Self::Bump { .. } => "bump",
            Self::RandNonneg { .. } => "randnn",
        }
    }

    fn bumps(seed: u64, d: usize) -> Vec<(f64, [f64; 2], f64)> {
        let mut rng = SeededRng::new(seed);
        (0..3)
            .map(|_| {
                let amp = 0.5 + rng.uniform();
                let c = [rng.uniform_in(-2.0, 2.0), if d == 2 { rng.uniform_in(-2.0, 2.0) } else { 0.0 }];
                let w = rng.uniform_in(0.8, 1.6);
                (amp, c, w)
            })
            .collect()
    }

    /// Spatial value at `x` (length `d`); `None` for sample-only entries.
    pub fn spatial(&self, x: &[f64]) -> Option<C64> {
        let d = x.len();
        let v = match self {
            Self::Box => x.iter().map(|v| indicator(v.abs())).product(),
            Self::Tent => x.iter().map(|v| (1.0 - v.abs()).max(0.0)).product(),
            Self::ExpAbs => (-norm_sq(x).sqrt()).exp(),
            Self::Gaussian => (-norm_sq(x) / 2.0).exp(),
            Self::DirichletFn => x.iter().map(|v| sinc(*v) / PI).product(),
            Self::FejerFn => x.iter().map(|v| sinc(v / 2.0).powi(2) / (2.0 * PI)).product(),
            Self::PoissonFn => c_d(d) / (1.0 + norm_sq(x)).powf((d as f64 + 1.0) / 2.0),
            Self::GaussFn => (2.0 * PI).powf(-(d as f64) / 2.0) * (-norm_sq(x) / 2.0).exp(),
            Self::Bump { seed } => Self::bumps(*seed, d)
                .iter()
                .map(|(a, c, w)| {
                    let r2: f64 = x.iter().zip(c).map(|(xi, ci)| ((xi - ci) / w).powi(2)).sum();
                    a * bump_profile(r2)
                })
                .sum(),
            Self::RandNonneg { .. } => return None,
        };
        Some(C64::new(v, 0.0))
    }

    /// Fourier transform at `ξ`; `None` when no closed form is tabulated.
    pub fn spectral(&self, xi: &[f64]) -> Option<C64> {
        let d = xi.len();
        let v = match self {
            Self::Box => xi.iter().map(|v| 2.0 * sinc(*v)).product(),
            Self::Tent => xi.iter().map(|v| sinc(v / 2.0).powi(2)).product(),
            Self::ExpAbs => {
                (2.0 * PI).powi(d as i32) * c_d(d) / (1.0 + norm_sq(xi)).powf((d as f64 + 1.0) / 2.0)
            }
            Self::Gaussian => (2.0 * PI).powf(d as f64 / 2.0) * (-norm_sq(xi) / 2.0).exp(),
            Self::DirichletFn => xi.iter().map(|v| indicator(v.abs())).product(),
            Self::FejerFn => xi.iter().map(|v| (1.0 - v.abs()).max(0.0)).product(),
            Self::PoissonFn => (-norm_sq(xi).sqrt()).exp(),
            Self::GaussFn => (-norm_sq(xi) / 2.0).exp(),
            Self::Bump { .. } | Self::RandNonneg { .. } => return None,
        };
        Some(C64::new(v, 0.0))
    }

    pub fn sample(&self, grid: LineGrid) -> LineSignal {
        match *self {
            Self::RandNonneg { seed } => {
                let mut rng = SeededRng::new(seed);
                let values = (0..grid.len()).map(|_| C64::new(rng.normal().exp(), 0.0)).collect();
                LineSignal::new(grid, values).expect("length matches")
            }
            _ => LineSignal::from_fn(grid, |x| self.spatial(x).unwrap_or(ZERO)),
        }
    }
}

/// I.i.d. complex normal samples.
pub fn random_torus(grid: TorusGrid, seed: u64) -> TorusSignal {
    TorusFunction::RandNormal { seed }.sample(grid)
}

/// I.i.d. real normal samples.
pub fn random_real_torus(grid: TorusGrid, seed: u64) -> TorusSignal {
    let mut rng = SeededRng::new(seed);
    let v = (0..grid.size()).map(|_| C64::new(rng.normal(), 0.0)).collect();
    TorusSignal::new(grid, v).expect("length matches")
}

/// I.i.d. nonnegative (log-normal) samples.
pub fn random_nonneg_torus(grid: TorusGrid, seed: u64) -> TorusSignal {
    TorusFunction::RandNonneg { seed }.sample(grid)
}

/// Random trigonometric polynomial of the given degree.
pub fn random_trig_poly(grid: TorusGrid, degree: usize, seed: u64) -> TorusSignal {
    TorusFunction::TrigPoly { seed, degree }.sample(grid)
}

/// Random spectrum on the bins `|m_j| ≤ max_bin`, synthesized on `grid`.
pub fn random_band_limited_line(grid: LineGrid, max_bin: usize, seed: u64) -> Result<LineSignal> {
    if 2 * max_bin >= grid.points() {
        return Err(invalid("max_bin", format!("{max_bin} reaches the Nyquist bin")));
    }
    let mut rng = SeededRng::new(seed);
    let half = grid.points() as i64 / 2;
    let mb = max_bin as i64;
    let values = (0..grid.len())
        .map(|k| {
            let [i, j] = grid.unflatten(k);
            let mi = i as i64 - half;
            let mj = if grid.dim() == 2 { j as i64 - half } else { 0 };
            if mi.abs() <= mb && mj.abs() <= mb {
                rng.complex_normal()
            } else {
                ZERO
            }
        })
        .collect();
    Ok(idft_line(&SpectrumR::new(grid, values)?))
}

/// Real part of [`random_band_limited_line`].
pub fn random_real_band_limited_line(grid: LineGrid, max_bin: usize, seed: u64) -> Result<LineSignal> {
    let f = random_band_limited_line(grid, max_bin, seed)?;
    Ok(f.map(|v| C64::new(v.re, 0.0)))
}

/// `count` spikes of total mass one at random nodes.
pub fn spikes_line(grid: LineGrid, count: usize, seed: u64) -> LineSignal {
    let mut rng = SeededRng::new(seed);
    let mut values = vec![ZERO; grid.len()];
    let height = 1.0 / (count.max(1) as f64 * grid.cell_measure());
    for _ in 0..count {
        let k = rng.below(grid.len() as u64) as usize;
        values[k] += C64::new(height, 0.0);
    }
    LineSignal::new(grid, values).expect("length matches")
}

/// I.i.d. log-normal samples on the line grid.
pub fn random_nonneg_line(grid: LineGrid, seed: u64) -> LineSignal {
    LineFunction::RandNonneg { seed }.sample(grid)
}

/// Zero the spectrum of `f` on the bins listed in `bins` (1-d frequencies).
pub fn remove_bins(f: &LineSignal, bins: &[f64]) -> LineSignal {
    let spec = dft_line(f);
    let tol = 1e-9 * f.grid().frequency_step();
    let cut = spec.apply(|xi| {
        if bins.iter().any(|b| xi.iter().any(|x| (x - b).abs() < tol)) {
            ZERO
        } else {
            C64::new(1.0, 0.0)
        }
    });
    idft_line(&cut)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys() {
        assert_eq!(TorusFunction::parse("sawtooth").unwrap(), TorusFunction::Sawtooth);
        assert_eq!(
            TorusFunction::parse("lacunary(0.5, 10)").unwrap(),
            TorusFunction::Lacunary { alpha: 0.5, terms: 10 }
        );
        assert!(matches!(TorusFunction::parse("holder(2)"), Err(Error::InvalidParameter { .. })));
        assert!(matches!(TorusFunction::parse("nope"), Err(Error::UnknownKey { .. })));
        assert!(TorusFunction::parse("trigpoly(1)").is_err());
        assert_eq!(LineFunction::parse("bump(3)").unwrap(), LineFunction::Bump { seed: 3 });
    }

    #[test]
    fn trig_poly_sample_matches_eval() {
        let g = TorusGrid::new(64).unwrap();
        let f = TorusFunction::TrigPoly { seed: 9, degree: 7 };
        let s = f.sample(g);
        for (j, v) in s.values().iter().enumerate() {
            assert!((v - f.eval(g.node(j)).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn jump_midpoints() {
        assert_eq!(TorusFunction::Sawtooth.eval(-PI).unwrap().re, 0.0);
        assert_eq!(TorusFunction::Square.eval(0.0).unwrap().re, 0.0);
        assert_eq!(LineFunction::Box.spatial(&[1.0]).unwrap().re, 0.5);
    }

    #[test]
    fn closed_form_constants() {
        assert!((LineFunction::Box.spectral(&[0.0]).unwrap().re - 2.0).abs() < 1e-15);
        assert!((LineFunction::ExpAbs.spectral(&[2.0]).unwrap().re - 0.4).abs() < 1e-15);
        assert!((LineFunction::Gaussian.spectral(&[0.0]).unwrap().re - (2.0 * PI).sqrt()).abs() < 1e-15);
        assert!((LineFunction::DirichletFn.spatial(&[0.0]).unwrap().re - 1.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn band_limited_has_no_outside_content() {
        let g = LineGrid::new(1, 8.0, 64).unwrap();
        let f = random_band_limited_line(g, 5, 1).unwrap();
        let s = dft_line(&f);
        for (k, v) in s.values().iter().enumerate() {
            if (k as i64 - 32).abs() > 5 {
                assert!(v.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn spikes_have_unit_mass() {
        let g = LineGrid::new(1, 4.0, 128).unwrap();
        let f = spikes_line(g, 5, 2);
        let mass: f64 = f.values().iter().map(|v| v.re).sum::<f64>() * g.spacing();
        assert!((mass - 1.0).abs() < 1e-12);
    }
}
