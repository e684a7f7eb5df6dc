//! Dyadic cubes and conditional averages on grids re-indexed to `[0, 2L)^d`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::grid::{LineSignal, C64, ZERO};

/// `2^{-k}([0,1)^d + m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DyadicCube {
    pub level: i32,
    pub index: Vec<i64>,
}

impl DyadicCube {
    pub fn new(level: i32, index: Vec<i64>) -> Self {
        Self { level, index }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn side(&self) -> f64 {
        2f64.powi(-self.level)
    }

    pub fn measure(&self) -> f64 {
        self.side().powi(self.dim() as i32)
    }

    pub fn parent(&self) -> Self {
        Self {
            level: self.level - 1,
            index: self.index.iter().map(|m| m.div_euclid(2)).collect(),
        }
    }

    pub fn children(&self) -> Vec<Self> {
        let d = self.dim();
        (0..1usize << d)
            .map(|bits| Self {
                level: self.level + 1,
                index: self
                    .index
                    .iter()
                    .enumerate()
                    .map(|(a, m)| 2 * m + ((bits >> a) & 1) as i64)
                    .collect(),
            })
            .collect()
    }

    /// Ancestor at a coarser or equal level.
    pub fn ancestor(&self, level: i32) -> Option<Self> {
        if level > self.level {
            return None;
        }
        let shift = (self.level - level) as u32;
        Some(Self {
            level,
            index: self.index.iter().map(|m| m >> shift).collect(),
        })
    }

    /// True when `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.ancestor(self.level).as_ref() == Some(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.contains(other) && !other.contains(self)
    }

    pub fn contains_point(&self, x: &[f64]) -> bool {
        let s = self.side();
        x.iter()
            .zip(&self.index)
            .all(|(xi, &m)| (xi / s).floor() as i64 == m)
    }
}

/// Number of grid nodes per axis in a level-`k` cube.
pub(crate) fn cells_per_side(n: usize, unit: f64, level: i32) -> Result<usize> {
    let c = 2f64.powi(-level) / unit;
    let r = c.round();
    if r < 1.0 || (c - r).abs() > 1e-9 * c.max(1.0) {
        return Err(Error::Misaligned(format!(
            "level {level} cubes do not align with the grid"
        )));
    }
    let r = r as usize;
    if r > n || n % r != 0 {
        return Err(Error::Misaligned(format!(
            "level {level} cubes do not tile the domain"
        )));
    }
    Ok(r)
}

/// Block index of flat node `idx` for blocks of `c` nodes per side.
pub(crate) fn block_of(idx: usize, n: usize, d: usize, c: usize) -> usize {
    if d == 1 {
        idx / c
    } else {
        let (r, col) = (idx / n, idx % n);
        (r / c) * (n / c) + col / c
    }
}

pub(crate) fn block_means(values: &[C64], n: usize, d: usize, c: usize) -> Vec<C64> {
    let nb = (n / c).pow(d as u32);
    let mut sums = vec![ZERO; nb];
    for (i, v) in values.iter().enumerate() {
        sums[block_of(i, n, d, c)] += v;
    }
    let size = c.pow(d as u32) as f64;
    sums.iter().map(|s| s / size).collect()
}

/// `E_k f`: mean of `f` over each level-`k` cube.
pub fn dyadic_average(f: &LineSignal, level: i32) -> Result<LineSignal> {
    let g = f.grid();
    let c = cells_per_side(g.points(), g.spacing(), level)?;
    let means = block_means(f.values(), g.points(), g.dim(), c);
    let out = (0..g.len())
        .map(|i| means[block_of(i, g.points(), g.dim(), c)])
        .collect();
    LineSignal::new(g, out)
}

/// `sup_k |E_k f|` over the given levels.
pub fn dyadic_maximal(f: &LineSignal, levels: &[i32]) -> Result<LineSignal> {
    if levels.is_empty() {
        return Err(invalid("levels", "empty range"));
    }
    let g = f.grid();
    let mut best = vec![0.0_f64; g.len()];
    for &k in levels {
        let e = dyadic_average(f, k)?;
        for (b, v) in best.iter_mut().zip(e.values()) {
            *b = b.max(v.norm());
        }
    }
    LineSignal::new(g, best.into_iter().map(|v| C64::new(v, 0.0)).collect())
}

/// Coarsest and finest aligned levels: one cube covering `[0, 2L)` down to single nodes.
pub fn level_range(f: &LineSignal) -> Result<(i32, i32)> {
    let g = f.grid();
    let top = (2.0 * g.half_width()).log2();
    if (top - top.round()).abs() > 1e-12 {
        return Err(Error::Misaligned(format!(
            "domain length {} is not a power of two",
            2.0 * g.half_width()
        )));
    }
    let kmin = -(top.round() as i32);
    let kmax = kmin + g.points().trailing_zeros() as i32;
    Ok((kmin, kmax))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::random_torus;
    use crate::grid::{LineGrid, TorusGrid};

    #[test]
    fn nesting() {
        let q = DyadicCube::new(2, vec![3, 1]);
        for c in q.children() {
            assert!(q.contains(&c));
            assert_eq!(c.parent(), q);
        }
        assert_eq!(q.children().len(), 4);
        let r = DyadicCube::new(2, vec![2, 1]);
        assert!(q.is_disjoint(&r));
        assert!(q.contains_point(&[0.8, 0.3]));
    }

    #[test]
    fn averages_conserve_integral() {
        let g = LineGrid::new(1, 4.0, 256).unwrap();
        let t = random_torus(TorusGrid::new(256).unwrap(), 2);
        let f = LineSignal::new(g, t.values().to_vec()).unwrap();
        let total: C64 = f.values().iter().sum();
        for k in -3..=5 {
            let e = dyadic_average(&f, k).unwrap();
            let s: C64 = e.values().iter().sum();
            assert!((s - total).norm() < 1e-12 * total.norm().max(1.0));
        }
        assert!(dyadic_average(&f, 6).is_err());
        assert_eq!(level_range(&f).unwrap(), (-3, 5));
    }

    #[test]
    fn averages_converge_on_continuous() {
        let g = LineGrid::new(1, 2.0, 512).unwrap();
        let f = LineSignal::from_real_fn(g, |x| x[0].sin());
        let errs: Vec<f64> = (0..6)
            .map(|k| dyadic_average(&f, k).unwrap().max_abs_diff(&f))
            .collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]));
        let m = dyadic_maximal(&f, &[0, 1, 2]).unwrap();
        let e1 = dyadic_average(&f, 1).unwrap();
        assert!(m.values().iter().zip(e1.values()).all(|(a, b)| a.re >= b.norm() - 1e-15));
        assert!(dyadic_maximal(&f, &[]).is_err());
    }
}
