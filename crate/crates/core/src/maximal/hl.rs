//! Centered Hardy–Littlewood maximal function and the greedy covering selection.

use crate::grid::{LineSignal, C64};

/// Ball `B(center, radius)` in `ℝ^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub center: Vec<f64>,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Vec<f64>, radius: f64) -> Self {
        Self { center, radius }
    }

    /// Open balls meet when the center distance is below the radius sum.
    pub fn intersects(&self, other: &Ball) -> bool {
        let d2: f64 = self
            .center
            .iter()
            .zip(&other.center)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        d2.sqrt() < self.radius + other.radius
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        let d2: f64 = self.center.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum();
        d2 < self.radius * self.radius
    }

    pub fn volume(&self) -> f64 {
        match self.center.len() {
            1 => 2.0 * self.radius,
            2 => std::f64::consts::PI * self.radius * self.radius,
            d => {
                let half = d as f64 / 2.0;
                std::f64::consts::PI.powf(half) * self.radius.powi(d as i32) / gamma_half_int(half + 1.0)
            }
        }
    }
}

fn gamma_half_int(x: f64) -> f64 {
    if x <= 1.0 {
        if (x - 0.5).abs() < 1e-12 {
            std::f64::consts::PI.sqrt()
        } else {
            1.0
        }
    } else {
        (x - 1.0) * gamma_half_int(x - 1.0)
    }
}

/// Greedy selection by decreasing radius, ties by input order.
///
/// Returns indices of a pairwise disjoint subfamily such that every input
/// ball meets a selected ball at least as large.
pub fn covering_select(balls: &[Ball]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..balls.len()).collect();
    order.sort_by(|&a, &b| balls[b].radius.total_cmp(&balls[a].radius).then(a.cmp(&b)));
    let mut chosen: Vec<usize> = Vec::new();
    for i in order {
        if chosen.iter().all(|&j| !balls[i].intersects(&balls[j])) {
            chosen.push(i);
        }
    }
    chosen
}

/// `sup_{r ∈ {h, 2h, ..., L}}` of the mean of `|f|` over the nodes in the
/// closed Euclidean ball `B(x, r)`, clipped to the grid.
///
/// The mean is count-based, so boundary balls average over the nodes they
/// actually contain.
pub fn hl_maximal(f: &LineSignal) -> LineSignal {
    let g = f.grid();
    let n = g.points();
    let kmax = n / 2;
    let mags: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
    let out = if g.dim() == 1 {
        let mut pre = vec![0.0; n + 1];
        for i in 0..n {
            pre[i + 1] = pre[i] + mags[i];
        }
        (0..n)
            .map(|i| {
                (1..=kmax)
                    .map(|k| {
                        let lo = i.saturating_sub(k);
                        let hi = (i + k).min(n - 1);
                        (pre[hi + 1] - pre[lo]) / (hi + 1 - lo) as f64
                    })
                    .fold(0.0, f64::max)
            })
            .collect::<Vec<_>>()
    } else {
        let mut pre = vec![0.0; n * (n + 1)];
        for r in 0..n {
            for c in 0..n {
                pre[r * (n + 1) + c + 1] = pre[r * (n + 1) + c] + mags[r * n + c];
            }
        }
        let widths: Vec<Vec<usize>> = (0..=kmax)
            .map(|k| {
                (0..=k)
                    .map(|di| ((k * k - di * di) as f64).sqrt().floor() as usize)
                    .collect()
            })
            .collect();
        (0..n * n)
            .map(|idx| {
                let (r0, c0) = (idx / n, idx % n);
                let mut best = 0.0_f64;
                for w in widths.iter().skip(1) {
                    let (mut sum, mut count) = (0.0, 0usize);
                    for (di, &wd) in w.iter().enumerate() {
                        let lo = c0.saturating_sub(wd);
                        let hi = (c0 + wd).min(n - 1);
                        let rows = if di == 0 { [Some(r0), None] } else { [r0.checked_sub(di), Some(r0 + di)] };
                        for r in rows.into_iter().flatten().filter(|&r| r < n) {
                            let base = r * (n + 1);
                            sum += pre[base + hi + 1] - pre[base + lo];
                            count += hi + 1 - lo;
                        }
                    }
                    best = best.max(sum / count as f64);
                }
                best
            })
            .collect()
    };
    LineSignal::new(g, out.into_iter().map(|v| C64::new(v, 0.0)).collect()).expect("same grid")
}
