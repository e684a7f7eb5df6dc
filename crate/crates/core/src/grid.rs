//! Uniform grids on the torus and on the line, sampled signals and their spectra.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fft;

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

fn check_pow2(n: usize, min: usize) -> Result<()> {
    if n < min || !n.is_power_of_two() {
        return Err(Error::InvalidGrid(format!(
            "size {n} must be a power of two and at least {min}"
        )));
    }
    Ok(())
}

/// Nodes `t_j = -π + 2πj/N` on the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusGrid {
    n: usize,
}

impl TorusGrid {
    pub fn new(n: usize) -> Result<Self> {
        check_pow2(n, 4)?;
        Ok(Self { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.n as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        -PI + self.spacing() * j as f64
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.node(j)).collect()
    }

    /// Frequencies `-N/2 .. N/2` in spectrum order.
    pub fn frequencies(&self) -> impl Iterator<Item = i64> {
        let h = (self.n / 2) as i64;
        -h..h
    }
}

/// Samples of a 2π-periodic function at the nodes of a [`TorusGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSignal {
    grid: TorusGrid,
    values: Vec<C64>,
}

impl TorusSignal {
    pub fn new(grid: TorusGrid, values: Vec<C64>) -> Result<Self> {
        if values.len() != grid.size() {
            return Err(Error::GridMismatch(format!(
                "{} values for a grid of size {}",
                values.len(),
                grid.size()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn(f64) -> C64) -> Self {
        let values = grid.nodes().into_iter().map(f).collect();
        Self { grid, values }
    }

    pub fn from_real_fn(grid: TorusGrid, f: impl Fn(f64) -> f64) -> Self {
        Self::from_fn(grid, |t| C64::new(f(t), 0.0))
    }

    pub fn constant(grid: TorusGrid, c: C64) -> Self {
        Self {
            grid,
            values: vec![c; grid.size()],
        }
    }

    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pointwise map that also sees the node.
    pub fn map_with_node(&self, f: impl Fn(f64, C64) -> C64) -> Self {
        Self {
            grid: self.grid,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(j, &v)| f(self.grid.node(j), v))
                .collect(),
        }
    }

    pub fn abs(&self) -> Self {
        self.map(|v| C64::new(v.norm(), 0.0))
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|v| v * s)
    }

    fn zip(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("torus signals on different grids".into()));
        }
        Ok(Self {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    /// `t ↦ f(t - k·h)` for an integer number `k` of grid steps.
    pub fn shift(&self, k: i64) -> Self {
        let n = self.grid.size() as i64;
        let values = (0..n)
            .map(|j| self.values[(j - k).rem_euclid(n) as usize])
            .collect();
        Self {
            grid: self.grid,
            values,
        }
    }

    /// `(1/2π)∫ f ḡ` by the N-point rule.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("torus signals on different grids".into()));
        }
        let s: C64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(s / self.grid.size() as f64)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Fourier coefficients `c(n)` for `n ∈ [-N/2, N/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumT {
    coeffs: Vec<C64>,
}

impl SpectrumT {
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        check_pow2(coeffs.len(), 4)?;
        Ok(Self { coeffs })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![ZERO; n])
    }

    pub fn from_fn(n: usize, f: impl Fn(i64) -> C64) -> Result<Self> {
        check_pow2(n, 4)?;
        let h = (n / 2) as i64;
        Ok(Self {
            coeffs: (-h..h).map(f).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_freq(&self) -> i64 {
        -((self.coeffs.len() / 2) as i64)
    }

    /// `c(n)`, or zero outside the stored band.
    pub fn get(&self, n: i64) -> C64 {
        let i = n - self.min_freq();
        if i < 0 || i >= self.coeffs.len() as i64 {
            ZERO
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn set(&mut self, n: i64, v: C64) -> Result<()> {
        let i = n - self.min_freq();
        if i < 0 || i >= self.coeffs.len() as i64 {
            return Err(invalid_freq(n));
        }
        self.coeffs[i as usize] = v;
        Ok(())
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        let m = self.min_freq();
        self.coeffs.iter().enumerate().map(move |(i, &c)| (m + i as i64, c))
    }

    /// Multiply coefficient `n` by `m(n)`.
    pub fn apply(&self, m: impl Fn(i64) -> C64) -> Self {
        Self {
            coeffs: self.iter().map(|(n, c)| c * m(n)).collect(),
        }
    }
}

fn invalid_freq(n: i64) -> Error {
    crate::error::invalid("n", format!("frequency {n} outside the stored band"))
}

/// `c(n) = (1/N) Σ_j f(t_j) e^{-i n t_j}`.
pub fn dft_analyze(f: &TorusSignal) -> SpectrumT {
    let n = f.grid.size() as f64;
    let coeffs = fft::forward_1d(&f.values).into_iter().map(|c| c / n).collect();
    SpectrumT { coeffs }
}

/// `f(t_j) = Σ_n c(n) e^{i n t_j}`.
pub fn dft_synthesize(c: &SpectrumT) -> TorusSignal {
    let grid = TorusGrid { n: c.size() };
    TorusSignal {
        grid,
        values: fft::inverse_1d(&c.coeffs),
    }
}

/// Square grid on `[-L, L)^d` with `N` nodes per axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineGrid {
    dim: usize,
    half_width: f64,
    n: usize,
}

impl LineGrid {
    pub fn new(dim: usize, half_width: f64, n: usize) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(Error::InvalidGrid(format!("dimension {dim} not in {{1, 2}}")));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidGrid(format!("half-width {half_width} must be positive")));
        }
        check_pow2(n, 4)?;
        Ok(Self { dim, half_width, n })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// Points per axis.
    pub fn points(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.n as f64
    }

    pub fn cell_measure(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    pub fn node(&self, j: usize) -> f64 {
        -self.half_width + self.spacing() * j as f64
    }

    /// `ξ_m = πm/L` for spectrum index `i` (`m = i - N/2`).
    pub fn frequency(&self, i: usize) -> f64 {
        PI * (i as f64 - (self.n / 2) as f64) / self.half_width
    }

    pub fn frequency_step(&self) -> f64 {
        PI / self.half_width
    }

    /// Largest resolved frequency `π/h`.
    pub fn band_edge(&self) -> f64 {
        PI / self.spacing()
    }

    /// Per-axis indices of flat index `k` (row-major, axis 0 slowest).
    pub fn unflatten(&self, k: usize) -> [usize; 2] {
        if self.dim == 1 {
            [k, 0]
        } else {
            [k / self.n, k % self.n]
        }
    }

    pub fn point(&self, k: usize) -> [f64; 2] {
        let [i, j] = self.unflatten(k);
        if self.dim == 1 {
            [self.node(i), 0.0]
        } else {
            [self.node(i), self.node(j)]
        }
    }

    pub fn freq_point(&self, k: usize) -> [f64; 2] {
        let [i, j] = self.unflatten(k);
        if self.dim == 1 {
            [self.frequency(i), 0.0]
        } else {
            [self.frequency(i), self.frequency(j)]
        }
    }

    /// Index offset of the Nyquist bin (`m = -N/2`).
    pub(crate) fn is_nyquist(&self, k: usize) -> bool {
        let [i, j] = self.unflatten(k);
        i == 0 || (self.dim == 2 && j == 0)
    }
}

/// Samples on a [`LineGrid`] in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct LineSignal {
    grid: LineGrid,
    values: Vec<C64>,
}

impl LineSignal {
    pub fn new(grid: LineGrid, values: Vec<C64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    /// Evaluate `f` at every node; in d = 1 only `x[0]` is meaningful.
    pub fn from_fn(grid: LineGrid, f: impl Fn(&[f64]) -> C64) -> Self {
        let values = (0..grid.len())
            .map(|k| {
                let p = grid.point(k);
                f(&p[..grid.dim])
            })
            .collect();
        Self { grid, values }
    }

    pub fn from_real_fn(grid: LineGrid, f: impl Fn(&[f64]) -> f64) -> Self {
        Self::from_fn(grid, |x| C64::new(f(x), 0.0))
    }

    pub fn zeros(grid: LineGrid) -> Self {
        Self {
            grid,
            values: vec![ZERO; grid.len()],
        }
    }

    pub fn grid(&self) -> LineGrid {
        self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn map_with_point(&self, f: impl Fn(&[f64], C64) -> C64) -> Self {
        let d = self.grid.dim;
        Self {
            grid: self.grid,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(k, &v)| f(&self.grid.point(k)[..d], v))
                .collect(),
        }
    }

    pub fn abs(&self) -> Self {
        self.map(|v| C64::new(v.norm(), 0.0))
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|v| v * s)
    }

    fn zip(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("line signals on different grids".into()));
        }
        Ok(Self {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    /// `∫ f ḡ` by the Riemann sum.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("line signals on different grids".into()));
        }
        let s: C64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(s * self.grid.cell_measure())
    }

    /// Periodic shift by whole grid steps along each axis.
    pub fn shift(&self, steps: [i64; 2]) -> Self {
        let n = self.grid.n as i64;
        let values = (0..self.grid.len())
            .map(|k| {
                let [i, j] = self.grid.unflatten(k);
                let si = (i as i64 - steps[0]).rem_euclid(n) as usize;
                if self.grid.dim == 1 {
                    self.values[si]
                } else {
                    let sj = (j as i64 - steps[1]).rem_euclid(n) as usize;
                    self.values[si * self.grid.n + sj]
                }
            })
            .collect();
        Self {
            grid: self.grid,
            values,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Sampled Fourier transform at `ξ_m = πm/L` per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumR {
    grid: LineGrid,
    values: Vec<C64>,
}

impl SpectrumR {
    pub fn new(grid: LineGrid, values: Vec<C64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: LineGrid, f: impl Fn(&[f64]) -> C64) -> Self {
        let values = (0..grid.len())
            .map(|k| {
                let p = grid.freq_point(k);
                f(&p[..grid.dim])
            })
            .collect();
        Self { grid, values }
    }

    pub fn grid(&self) -> LineGrid {
        self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Multiply each bin by `m(ξ)`.
    pub fn apply(&self, m: impl Fn(&[f64]) -> C64) -> Self {
        let d = self.grid.dim;
        Self {
            grid: self.grid,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(k, &v)| v * m(&self.grid.freq_point(k)[..d]))
                .collect(),
        }
    }

    /// Zero every bin on the Nyquist row or column.
    pub fn without_nyquist(&self) -> Self {
        let mut values = self.values.clone();
        for (k, v) in values.iter_mut().enumerate() {
            if self.grid.is_nyquist(k) {
                *v = ZERO;
            }
        }
        Self {
            grid: self.grid,
            values,
        }
    }

    /// `(1/2π)^d (π/L)^d Σ |f̂|²`, the spectral side of Plancherel.
    pub fn l2_norm_sq(&self) -> f64 {
        let w = (self.grid.frequency_step() / (2.0 * PI)).powi(self.grid.dim as i32);
        w * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    /// Spectral inner product with the same weight as [`SpectrumR::l2_norm_sq`].
    pub fn inner(&self, other: &Self) -> C64 {
        let w = (self.grid.frequency_step() / (2.0 * PI)).powi(self.grid.dim as i32);
        let s: C64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        s * w
    }
}

/// `f̂(ξ_m) = h^d Σ_j f(x_j) e^{-i ξ_m·x_j}`.
///
/// On a finite grid this one transform also stands in for the density
/// extension of the Fourier transform to `L^p`, `1 < p < 2`.
pub fn dft_line(f: &LineSignal) -> SpectrumR {
    let g = f.grid;
    let w = g.cell_measure();
    let values = fft::forward(&f.values, g.n, g.dim)
        .into_iter()
        .map(|v| v * w)
        .collect();
    SpectrumR { grid: g, values }
}

/// `f(x_j) = (1/2π)^d (π/L)^d Σ_m f̂(ξ_m) e^{i ξ_m·x_j}`.
pub fn idft_line(c: &SpectrumR) -> LineSignal {
    let g = c.grid;
    let w = (1.0 / (2.0 * g.half_width)).powi(g.dim as i32);
    let values = fft::inverse(&c.values, g.n, g.dim)
        .into_iter()
        .map(|v| v * w)
        .collect();
    LineSignal { grid: g, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(TorusGrid::new(2).is_err());
        assert!(TorusGrid::new(12).is_err());
        assert!(LineGrid::new(3, 1.0, 8).is_err());
        assert!(LineGrid::new(1, -1.0, 8).is_err());
    }

    #[test]
    fn constant_and_exponential() {
        let g = TorusGrid::new(8).unwrap();
        let s = dft_analyze(&TorusSignal::constant(g, c(1.0)));
        for (n, v) in s.iter() {
            let want = if n == 0 { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(v.re, want, epsilon = 1e-15);
            assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
        }
        let g = TorusGrid::new(16).unwrap();
        let s = dft_analyze(&TorusSignal::from_fn(g, |t| C64::from_polar(1.0, 3.0 * t)));
        for (n, v) in s.iter() {
            let want = if n == 3 { 1.0 } else { 0.0 };
            assert!((v - c(want)).norm() < 1e-14);
        }
    }

    #[test]
    fn synthesize_cosine() {
        let mut s = SpectrumT::zeros(32).unwrap();
        s.set(1, c(0.5)).unwrap();
        s.set(-1, c(0.5)).unwrap();
        let f = dft_synthesize(&s);
        for (j, v) in f.values().iter().enumerate() {
            assert!((v - c(f.grid().node(j).cos())).norm() < 1e-14);
        }
    }

    #[test]
    fn gaussian_transform() {
        let g = LineGrid::new(1, 16.0, 1024).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-x[0] * x[0] / 2.0).exp());
        let s = dft_line(&f);
        for (k, v) in s.values().iter().enumerate() {
            let xi = g.frequency(k);
            let want = (2.0 * PI).sqrt() * (-xi * xi / 2.0).exp();
            assert!((v - c(want)).norm() < 1e-10);
        }
    }

    #[test]
    fn zero_frequency_is_riemann_sum() {
        let g = LineGrid::new(1, 4.0, 64).unwrap();
        let f = LineSignal::from_real_fn(g, |x| x[0].cos() + 0.3 * x[0]);
        let sum: C64 = f.values().iter().sum::<C64>() * g.spacing();
        let s = dft_line(&f);
        assert!((s.values()[32] - sum).norm() < 1e-13);
    }

    #[test]
    fn box_transform_small_frequencies() {
        let g = LineGrid::new(1, 16.0, 2048).unwrap();
        let f = LineSignal::from_real_fn(g, |x| {
            let a = x[0].abs();
            if a < 1.0 {
                1.0
            } else if a == 1.0 {
                0.5
            } else {
                0.0
            }
        });
        let s = dft_line(&f);
        for (k, v) in s.values().iter().enumerate() {
            let xi = g.frequency(k);
            if xi.abs() > 0.0 && xi.abs() < 5.0 {
                assert!((v.re - 2.0 * xi.sin() / xi).abs() < 1e-3);
            }
        }
    }

    #[test]
    fn two_dimensional_round_trip() {
        let g = LineGrid::new(2, 3.0, 16).unwrap();
        let f = LineSignal::from_fn(g, |x| C64::new(x[0] * x[1], (x[0] - x[1]).sin()));
        let back = idft_line(&dft_line(&f));
        assert!(back.max_abs_diff(&f) < 1e-12);
    }
}
