use std::f64::consts::PI;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::catalog::{sinc, LineFunction};
use crate::error::{invalid, Error, Result};
use crate::grid::{dft_line, idft_line, LineGrid, LineSignal, C64, ZERO};

/// Samples `f(πn/ω)` on the window `|n_j| ≤ n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    pub omega: f64,
    pub dim: usize,
    pub n_max: usize,
    /// Row-major over `n ∈ [-n_max, n_max]^d`.
    pub values: Vec<C64>,
}

impl SampleSet {
    pub fn new(omega: f64, dim: usize, n_max: usize, values: Vec<C64>) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(invalid("omega", format!("{omega} must be positive")));
        }
        if dim != 1 && dim != 2 {
            return Err(invalid("dim", format!("{dim} not in {{1, 2}}")));
        }
        let side = 2 * n_max + 1;
        if values.len() != side.pow(dim as u32) {
            return Err(invalid("values", format!("expected {} samples", side.pow(dim as u32))));
        }
        Ok(Self {
            omega,
            dim,
            n_max,
            values,
        })
    }

    /// Multi-index of entry `k`.
    pub fn index(&self, k: usize) -> [i64; 2] {
        let side = 2 * self.n_max + 1;
        let m = self.n_max as i64;
        if self.dim == 1 {
            [k as i64 - m, 0]
        } else {
            [(k / side) as i64 - m, (k % side) as i64 - m]
        }
    }

    pub fn get(&self, n: &[i64]) -> C64 {
        let m = self.n_max as i64;
        if n.iter().any(|v| v.abs() > m) {
            return ZERO;
        }
        let side = 2 * m + 1;
        let k = n.iter().fold(0, |acc, v| acc * side + v + m);
        self.values[k as usize]
    }

    fn spacing(&self) -> f64 {
        PI / self.omega
    }
}

impl Serialize for SampleSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let samples: Vec<(Vec<i64>, f64, f64)> = self
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| (self.index(k)[..self.dim].to_vec(), v.re, v.im))
            .collect();
        let mut st = s.serialize_struct("SampleSet", 3)?;
        st.serialize_field("omega", &self.omega)?;
        st.serialize_field("n_max", &self.n_max)?;
        st.serialize_field("samples", &samples)?;
        st.end()
    }
}

/// Where sample values come from.
pub enum SampleSource<'a> {
    Catalog(LineFunction),
    Closure(&'a dyn Fn(&[f64]) -> C64),
    /// Sample points must be grid nodes inside `[-L, L)`.
    Signal(&'a LineSignal),
}

impl SampleSource<'_> {
    fn eval(&self, x: &[f64]) -> Result<C64> {
        match self {
            Self::Catalog(f) => f.spatial(x).ok_or_else(|| Error::UnknownKey {
                kind: "closed form",
                key: f.name().to_string(),
            }),
            Self::Closure(f) => Ok(f(x)),
            Self::Signal(s) => {
                let g = s.grid();
                let h = g.spacing();
                let mut k = 0usize;
                for &xi in x {
                    let j = (xi + g.half_width()) / h;
                    let r = j.round();
                    if (j - r).abs() > 1e-9 {
                        return Err(Error::Misaligned(format!("{xi} is not a grid node")));
                    }
                    if r < 0.0 || r >= g.points() as f64 {
                        return Err(invalid("x", format!("{xi} outside [-L, L)")));
                    }
                    k = k * g.points() + r as usize;
                }
                Ok(s.values()[k])
            }
        }
    }
}

/// Evaluate `f(πn/ω)` for `|n_j| ≤ n_max`.
pub fn sample(source: &SampleSource, omega: f64, n_max: usize, dim: usize) -> Result<SampleSet> {
    if let SampleSource::Signal(s) = source {
        if s.grid().dim() != dim {
            return Err(invalid("dim", "differs from the signal grid"));
        }
    }
    let mut set = SampleSet::new(omega, dim, n_max, vec![ZERO; (2 * n_max + 1).pow(dim as u32)])?;
    let h = set.spacing();
    for k in 0..set.values.len() {
        let n = set.index(k);
        let x = [n[0] as f64 * h, n[1] as f64 * h];
        set.values[k] = source.eval(&x[..dim])?;
    }
    Ok(set)
}

fn sinc_row(omega: f64, x: f64, n_max: usize) -> Vec<f64> {
    let m = n_max as i64;
    (-m..=m).map(|n| sinc(omega * x - PI * n as f64)).collect()
}

/// Truncated series `Σ f(πn/ω) Π sinc(ωx_j - πn_j)` at one point.
pub fn sinc_series_at(s: &SampleSet, x: &[f64]) -> Result<C64> {
    if x.len() != s.dim {
        return Err(invalid("x", "dimension differs from the samples"));
    }
    let a = sinc_row(s.omega, x[0], s.n_max);
    if s.dim == 1 {
        return Ok(s.values.iter().zip(&a).map(|(v, w)| v * w).sum());
    }
    let b = sinc_row(s.omega, x[1], s.n_max);
    let side = a.len();
    Ok((0..side)
        .map(|i| s.values[i * side..(i + 1) * side].iter().zip(&b).map(|(v, w)| v * w).sum::<C64>() * a[i])
        .sum())
}

/// Truncated sinc series on every node of `grid`.
pub fn sinc_reconstruct(s: &SampleSet, grid: LineGrid) -> Result<LineSignal> {
    if grid.dim() != s.dim {
        return Err(invalid("grid", "dimension differs from the samples"));
    }
    let rows: Vec<Vec<f64>> = (0..grid.points()).map(|i| sinc_row(s.omega, grid.node(i), s.n_max)).collect();
    let side = 2 * s.n_max + 1;
    let values = if s.dim == 1 {
        rows.iter().map(|r| s.values.iter().zip(r).map(|(v, w)| v * w).sum()).collect()
    } else {
        // contract the second index first: t[n1][j] = Σ_{n2} c[n1][n2] sinc_j(n2)
        let t: Vec<Vec<C64>> = (0..side)
            .map(|a| {
                let c = &s.values[a * side..(a + 1) * side];
                rows.iter().map(|r| c.iter().zip(r).map(|(v, w)| v * w).sum()).collect()
            })
            .collect();
        let mut out = Vec::with_capacity(grid.len());
        for ri in &rows {
            for j in 0..grid.points() {
                out.push((0..side).map(|a| t[a][j] * ri[a]).sum());
            }
        }
        out
    };
    LineSignal::new(grid, values)
}

/// `‖·‖₂` of the samples in `n_max < |n|_∞ ≤ n_outer`, weighted by `(π/ω)^d`.
///
/// By orthonormality of the shifted sincs this is the `L²` distance between
/// the window-`n_max` and window-`n_outer` reconstructions.
pub fn omitted_sample_mass(source: &SampleSource, omega: f64, n_max: usize, n_outer: usize, dim: usize) -> Result<f64> {
    if n_outer < n_max {
        return Err(invalid("n_outer", "smaller than n_max"));
    }
    let outer = sample(source, omega, n_outer, dim)?;
    let m = n_max as i64;
    let w = (PI / omega).powi(dim as i32);
    let s: f64 = outer
        .values
        .iter()
        .enumerate()
        .filter(|(k, _)| outer.index(*k)[..dim].iter().any(|v| v.abs() > m))
        .map(|(_, v)| v.norm_sqr())
        .sum();
    Ok((s * w).sqrt())
}

/// Spectral truncation to `[-ω, ω]^d` (closed cube).
pub fn pw_project(f: &LineSignal, omega: f64) -> Result<LineSignal> {
    let edge = f.grid().band_edge();
    if !(omega > 0.0 && omega <= edge) {
        return Err(invalid("omega", format!("{omega} outside (0, {edge}]")));
    }
    let tol = 1e-12 * omega;
    let s = dft_line(f);
    Ok(idft_line(&s.apply(|xi| {
        if xi.iter().all(|v| v.abs() <= omega + tol) {
            C64::new(1.0, 0.0)
        } else {
            ZERO
        }
    })))
}

/// `ξ` folded into `[-ω, ω)`, where samples at spacing `π/ω` put it.
pub fn aliased_frequency(xi: f64, omega: f64) -> f64 {
    let p = 2.0 * omega;
    xi - p * ((xi + omega) / p).floor()
}

/// The combination `-sinc(2π(x+1)) + 2 sinc(2π(x+½)) + 3 sinc(2πx) + 2 sinc(2π(x-½)) + sinc(2π(x-1))`.
pub fn sinc_combination(x: f64) -> f64 {
    [(-1.0, 1.0), (2.0, 0.5), (3.0, 0.0), (2.0, -0.5), (1.0, -1.0)]
        .iter()
        .map(|(a, s)| a * sinc(2.0 * PI * (x + s)))
        .sum()
}

/// `|f(iy)|` and the growth bound `e^{|y|}/(2π√|y|)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Growth {
    pub value: f64,
    pub bound: f64,
}

/// Growth of a band-limited catalog entry along the imaginary axis.
///
/// Only `dirichlet_fn`, `sin(z)/πz`, is supported; the bound uses
/// `‖1_{[-1,1]}‖₂ = √2` and `R = 1`. At `y = 0` the value is the limit `1/π`
/// and there is no bound, so `y = 0` is rejected.
pub fn bandlimited_growth(name: &str, y: f64) -> Result<Growth> {
    if LineFunction::parse(name)? != LineFunction::DirichletFn {
        return Err(Error::UnknownKey {
            kind: "band-limited function",
            key: name.to_string(),
        });
    }
    if y == 0.0 || !y.is_finite() {
        return Err(invalid("y", "must be finite and nonzero; the limit at 0 is 1/π"));
    }
    let z = C64::new(0.0, y);
    let value = (z.sin() / (z * PI)).norm();
    let a = y.abs();
    Ok(Growth {
        value,
        bound: a.exp() / (2.0 * PI * a.sqrt()),
    })
}
