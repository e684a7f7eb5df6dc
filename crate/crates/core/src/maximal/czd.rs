//! Calderón–Zygmund decomposition by the dyadic stopping time.
//!
//! Line signals are re-indexed to `[0, 2L)^d` (which must have power-of-two
//! side); torus signals to `[0, 2π)` with intervals `2π·2^{-k}([0,1) + m)`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::grid::{LineSignal, TorusSignal, C64};
use crate::norms::{lp_norm, Measured};

use super::dyadic::{block_of, level_range, DyadicCube};

/// A sampled signal that can be rebuilt from new values on its grid.
pub trait GridSignal: Measured + Clone {
    fn with_values(&self, values: Vec<C64>) -> Self;
    fn points_per_axis(&self) -> usize;
    fn dim(&self) -> usize;
}

impl GridSignal for LineSignal {
    fn with_values(&self, values: Vec<C64>) -> Self {
        LineSignal::new(self.grid(), values).expect("same grid")
    }
    fn points_per_axis(&self) -> usize {
        self.grid().points()
    }
    fn dim(&self) -> usize {
        self.grid().dim()
    }
}

impl GridSignal for TorusSignal {
    fn with_values(&self, values: Vec<C64>) -> Self {
        TorusSignal::new(self.grid(), values).expect("same grid")
    }
    fn points_per_axis(&self) -> usize {
        self.grid().size()
    }
    fn dim(&self) -> usize {
        1
    }
}

/// `b_l = (f - mean_Q f) 1_Q` stored on the nodes of `Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct BadPiece {
    pub cube: DyadicCube,
    /// Lebesgue measure of the cube.
    pub measure: f64,
    /// Mean of `f` over the cube.
    pub mean: C64,
    /// Mean of `|f|` over the cube.
    pub avg_abs: f64,
    pub nodes: Vec<usize>,
    pub values: Vec<C64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CzResult<S> {
    pub lambda: f64,
    pub input: S,
    pub good: S,
    pub pieces: Vec<BadPiece>,
    /// Constant `C` in `‖b_l‖₁ ≤ C λ |Q(l)|`.
    piece_constant: f64,
    /// Constant `C` in `Σ|Q(l)| ≤ C ‖f‖₁ / λ`.
    measure_constant: f64,
    /// Bound on `‖g‖_∞ / λ`.
    sup_constant: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CzProperties {
    pub reconstruction_error: f64,
    pub f_l1: f64,
    pub g_l1: f64,
    pub g_linf: f64,
    pub g_linf_bound: f64,
    pub b_l1: f64,
    /// Largest `‖b_l‖₁ / (C λ |Q(l)|)`.
    pub worst_piece_ratio: f64,
    /// Largest `|∫ b_l| / (λ |Q(l)|)`.
    pub worst_piece_mean: f64,
    pub f_linf: f64,
    pub total_measure: f64,
    pub measure_bound: f64,
    pub disjoint: bool,
}

impl CzProperties {
    /// Properties (i)–(vi) in order, each within relative tolerance `tol`.
    pub fn check(&self, tol: f64) -> [bool; 6] {
        [
            self.reconstruction_error <= tol * self.f_linf,
            self.g_l1 <= self.f_l1 * (1.0 + tol)
                && self.g_linf <= self.g_linf_bound * (1.0 + tol)
                && self.b_l1 <= 2.0 * self.f_l1 * (1.0 + tol),
            self.disjoint,
            self.worst_piece_mean <= tol,
            self.worst_piece_ratio <= 1.0 + tol,
            self.total_measure <= self.measure_bound * (1.0 + tol),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubeSummary {
    pub k: i32,
    pub m: Vec<i64>,
    pub avg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CzNorms {
    pub g_l1: f64,
    pub g_linf: f64,
    pub b_l1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CzSummary {
    pub lambda: f64,
    pub cubes: Vec<CubeSummary>,
    pub norms: CzNorms,
}

impl<S: GridSignal> CzResult<S> {
    /// `b = Σ b_l` as a signal.
    pub fn bad(&self) -> S {
        let mut v = vec![C64::new(0.0, 0.0); self.input.samples().len()];
        for p in &self.pieces {
            for (&i, &x) in p.nodes.iter().zip(&p.values) {
                v[i] = x;
            }
        }
        self.input.with_values(v)
    }

    /// `b_l` alone as a signal.
    pub fn piece_signal(&self, l: usize) -> S {
        let mut v = vec![C64::new(0.0, 0.0); self.input.samples().len()];
        let p = &self.pieces[l];
        for (&i, &x) in p.nodes.iter().zip(&p.values) {
            v[i] = x;
        }
        self.input.with_values(v)
    }

    pub fn properties(&self) -> CzProperties {
        let w = self.input.cell_measure();
        let bad = self.bad();
        let recon = self
            .input
            .samples()
            .iter()
            .zip(self.good.samples().iter().zip(bad.samples()))
            .map(|(f, (g, b))| (f - g - b).norm())
            .fold(0.0, f64::max);
        let f_l1 = lp_norm(&self.input, 1.0).expect("p = 1");
        let (mut worst_ratio, mut worst_mean) = (0.0_f64, 0.0_f64);
        for p in &self.pieces {
            let l1: f64 = p.values.iter().map(|v| v.norm()).sum::<f64>() * w;
            let integral: C64 = p.values.iter().sum::<C64>() * w;
            worst_ratio = worst_ratio.max(l1 / (self.piece_constant * self.lambda * p.measure));
            worst_mean = worst_mean.max(integral.norm() / (self.lambda * p.measure * self.measure_scale()));
        }
        let disjoint = self.pieces.iter().enumerate().all(|(i, a)| {
            self.pieces[i + 1..].iter().all(|b| a.cube.is_disjoint(&b.cube))
        });
        CzProperties {
            reconstruction_error: recon,
            f_l1,
            g_l1: lp_norm(&self.good, 1.0).expect("p = 1"),
            g_linf: lp_norm(&self.good, f64::INFINITY).expect("p = ∞"),
            g_linf_bound: self.sup_constant * self.lambda,
            b_l1: lp_norm(&bad, 1.0).expect("p = 1"),
            worst_piece_ratio: worst_ratio,
            worst_piece_mean: worst_mean,
            total_measure: self.pieces.iter().map(|p| p.measure).sum(),
            measure_bound: self.measure_constant * f_l1 / self.lambda,
            disjoint,
            f_linf: lp_norm(&self.input, f64::INFINITY).expect("p = ∞"),
        }
    }

    /// Converts Lebesgue cube measure to the signal's measure convention.
    fn measure_scale(&self) -> f64 {
        1.0 / self.measure_constant
    }

    pub fn summary(&self) -> CzSummary {
        let p = self.properties();
        CzSummary {
            lambda: self.lambda,
            cubes: self
                .pieces
                .iter()
                .map(|q| CubeSummary {
                    k: q.cube.level,
                    m: q.cube.index.clone(),
                    avg: q.avg_abs,
                })
                .collect(),
            norms: CzNorms {
                g_l1: p.g_l1,
                g_linf: p.g_linf,
                b_l1: p.b_l1,
            },
        }
    }
}

struct Selected {
    cube: DyadicCube,
    nodes: Vec<usize>,
    mean: C64,
    avg_abs: f64,
}

/// Stopping time on `n^d` nodes: scan block sizes `n, n/2, ..., 1`, select
/// uncovered blocks whose `|f|`-mean exceeds `λ`. `top_level` is the level of
/// the single block covering everything.
fn stopping_time(values: &[C64], n: usize, d: usize, top_level: i32, lambda: f64) -> Result<Vec<Selected>> {
    let mut covered = vec![false; values.len()];
    let mut out = Vec::new();
    let mut c = n;
    let mut level = top_level;
    while c >= 1 {
        let per_axis = n / c;
        let nb = per_axis.pow(d as u32);
        let mut abs_sum = vec![0.0; nb];
        let mut sum = vec![C64::new(0.0, 0.0); nb];
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); nb];
        for (i, v) in values.iter().enumerate() {
            if covered[i] {
                continue;
            }
            let b = block_of(i, n, d, c);
            abs_sum[b] += v.norm();
            sum[b] += v;
            members[b].push(i);
        }
        let size = c.pow(d as u32) as f64;
        for b in 0..nb {
            if members[b].is_empty() {
                continue;
            }
            let avg = abs_sum[b] / size;
            if avg > lambda {
                if c == n {
                    return Err(Error::Precondition(format!(
                        "λ = {lambda} is below the mean {avg} of |f| over the whole domain"
                    )));
                }
                let index = if d == 1 {
                    vec![b as i64]
                } else {
                    vec![(b / per_axis) as i64, (b % per_axis) as i64]
                };
                for &i in &members[b] {
                    covered[i] = true;
                }
                out.push(Selected {
                    cube: DyadicCube::new(level, index),
                    nodes: std::mem::take(&mut members[b]),
                    mean: sum[b] / size,
                    avg_abs: avg,
                });
            }
        }
        c /= 2;
        level += 1;
    }
    Ok(out)
}

fn split<S: GridSignal>(f: &S, selected: Vec<Selected>, cube_measure: impl Fn(&DyadicCube) -> f64) -> (S, Vec<BadPiece>) {
    let mut good = f.samples().to_vec();
    let pieces = selected
        .into_iter()
        .map(|s| {
            let values = s.nodes.iter().map(|&i| f.samples()[i] - s.mean).collect();
            for &i in &s.nodes {
                good[i] = s.mean;
            }
            BadPiece {
                measure: cube_measure(&s.cube),
                cube: s.cube,
                mean: s.mean,
                avg_abs: s.avg_abs,
                nodes: s.nodes,
                values,
            }
        })
        .collect();
    (f.with_values(good), pieces)
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", format!("{lambda} must be positive")));
    }
    Ok(())
}

/// Decomposition `f = g + Σ b_l` at height `λ` on the line grid.
///
/// Requires `2L` to be a power of two and `λ` at least the mean of `|f|`
/// over the whole domain, so the stopping time starts below `λ`.
pub fn cz_decompose(f: &LineSignal, lambda: f64) -> Result<CzResult<LineSignal>> {
    check_lambda(lambda)?;
    let (kmin, _) = level_range(f)?;
    let g = f.grid();
    let d = g.dim();
    let sel = stopping_time(f.values(), g.points(), d, kmin, lambda)?;
    let (good, pieces) = split(f, sel, |q| q.measure());
    Ok(CzResult {
        lambda,
        input: f.clone(),
        good,
        pieces,
        piece_constant: 2f64.powi(d as i32 + 1),
        measure_constant: 1.0,
        sup_constant: 2f64.powi(d as i32),
    })
}

/// Decomposition on the torus with intervals `2π·2^{-k}([0,1) + m)`, `k ≥ 1`.
///
/// Norms use the normalized measure, interval lengths are Lebesgue, so the
/// piece bound reads `‖b_l‖₁ ≤ (4/2π) λ |I(l)|` and the measure bound
/// `Σ|I(l)| ≤ (2π/λ) ‖f‖₁`.
pub fn cz_decompose_torus(f: &TorusSignal, lambda: f64) -> Result<CzResult<TorusSignal>> {
    check_lambda(lambda)?;
    let l1 = lp_norm(f, 1.0)?;
    if lambda <= l1 {
        return Err(Error::Precondition(format!(
            "λ = {lambda} must exceed the normalized L¹ norm {l1}"
        )));
    }
    let sel = stopping_time(f.values(), f.grid().size(), 1, 0, lambda)?;
    let (good, pieces) = split(f, sel, |q| 2.0 * PI * q.side());
    Ok(CzResult {
        lambda,
        input: f.clone(),
        good,
        pieces,
        piece_constant: 4.0 / (2.0 * PI),
        measure_constant: 2.0 * PI,
        sup_constant: 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{random_nonneg_line, random_nonneg_torus};
    use crate::grid::{LineGrid, TorusGrid};

    #[test]
    fn constant_below_lambda() {
        let g = LineGrid::new(1, 2.0, 64).unwrap();
        let f = LineSignal::from_real_fn(g, |_| 0.5);
        let r = cz_decompose(&f, 1.0).unwrap();
        assert!(r.pieces.is_empty());
        assert_eq!(r.good, f);
    }

    #[test]
    fn hand_traced_step() {
        // [-2, 2) re-indexed to [0, 4); f = 4 on [0, 1)
        let g = LineGrid::new(1, 2.0, 64).unwrap();
        let f = LineSignal::from_real_fn(g, |x| if x[0] + 2.0 < 1.0 { 4.0 } else { 0.0 });
        let r = cz_decompose(&f, 1.0).unwrap();
        assert_eq!(r.pieces.len(), 1);
        assert_eq!(r.pieces[0].cube, DyadicCube::new(-1, vec![0]));
        let p = r.properties();
        assert!((p.g_linf - 2.0).abs() < 1e-15);
        assert!(p.check(1e-10).iter().all(|&b| b));
    }

    #[test]
    fn random_properties() {
        let g = LineGrid::new(2, 4.0, 32).unwrap();
        for seed in 0..5 {
            let f = random_nonneg_line(g, seed);
            let mean = f.values().iter().map(|v| v.norm()).sum::<f64>() / g.len() as f64;
            for mult in [1.5, 3.0, 10.0] {
                let r = cz_decompose(&f, mult * mean).unwrap();
                assert!(r.properties().check(1e-10).iter().all(|&b| b));
            }
        }
    }

    #[test]
    fn torus_precondition_and_properties() {
        let g = TorusGrid::new(256).unwrap();
        let f = random_nonneg_torus(g, 3);
        let l1 = lp_norm(&f, 1.0).unwrap();
        assert!(matches!(cz_decompose_torus(&f, l1), Err(Error::Precondition(_))));
        let r = cz_decompose_torus(&f, 2.0 * l1).unwrap();
        assert!(r.properties().check(1e-10).iter().all(|&b| b));
        assert!(r.pieces.iter().all(|p| p.cube.level >= 1));
    }

    #[test]
    fn torus_spike_gives_one_small_interval() {
        let g = TorusGrid::new(64).unwrap();
        let mut v = vec![C64::new(0.0, 0.0); 64];
        v[10] = C64::new(64.0, 0.0);
        let f = TorusSignal::new(g, v).unwrap();
        let r = cz_decompose_torus(&f, 4.0).unwrap();
        assert_eq!(r.pieces.len(), 1);
        // first level whose mean exceeds 4 holds 8 nodes
        assert_eq!(r.pieces[0].nodes.len(), 8);
    }
}
