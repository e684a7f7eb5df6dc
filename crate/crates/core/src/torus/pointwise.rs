//! Pointwise convergence experiments: Dini integrals and partial sums at a node.

use std::f64::consts::PI;

use crate::error::{invalid, Result};
use crate::grid::{dft_analyze, TorusSignal, C64, ZERO};

/// `S_n(f)(t_j)` for node index `j`.
pub fn partial_sum_at(f: &TorusSignal, n: usize, j: usize) -> Result<C64> {
    let size = f.grid().size();
    if n >= size / 2 {
        return Err(invalid("n", format!("{n} must be below N/2 = {}", size / 2)));
    }
    if j >= size {
        return Err(invalid("j", format!("node {j} outside the grid")));
    }
    let t = f.grid().node(j);
    let c = dft_analyze(f);
    let n = n as i64;
    Ok((-n..=n).map(|k| c.get(k) * C64::from_polar(1.0, k as f64 * t)).sum())
}

/// `|S_n(f)(t_j) - target|` for each `n`.
pub fn jump_experiment(f: &TorusSignal, ns: &[usize], j: usize, target: C64) -> Result<Vec<(usize, f64)>> {
    ns.iter()
        .map(|&n| Ok((n, (partial_sum_at(f, n, j)? - target).norm())))
        .collect()
}

/// Trapezoid rule for `∫_{ε<|τ|<π} |f(t0-τ) - f(t0)| / |τ| dτ`.
///
/// `t0` and `ε` are snapped to the nearest node and grid multiple.
pub fn dini_integral(f: &TorusSignal, t0: f64, eps: f64) -> Result<f64> {
    let g = f.grid();
    let h = g.spacing();
    if !(eps > 0.0 && eps < PI) {
        return Err(invalid("eps", format!("{eps} not in (0, π)")));
    }
    let m = ((eps / h).round() as usize).max(1);
    let half = g.size() / 2;
    if m >= half {
        return Err(invalid("eps", "window leaves no quadrature nodes"));
    }
    let n = g.size() as i64;
    let j0 = (((t0 + PI) / h).round() as i64).rem_euclid(n);
    let v = f.values();
    let f0 = v[j0 as usize];
    let mut total = 0.0;
    for k in m..=half {
        let w = if k == m || k == half { 0.5 } else { 1.0 };
        let tau = k as f64 * h;
        for s in [-1i64, 1] {
            let idx = (j0 - s * k as i64).rem_euclid(n) as usize;
            total += w * (v[idx] - f0).norm() / tau;
        }
    }
    Ok(total * h)
}

/// Signal vanishing on `(t0 - δ, t0 + δ)`: `f` times the indicator of the complement.
pub fn cut_out(f: &TorusSignal, t0: f64, delta: f64) -> TorusSignal {
    f.map_with_node(|t, v| {
        let d = (t - t0 + PI).rem_euclid(2.0 * PI) - PI;
        if d.abs() < delta {
            ZERO
        } else {
            v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::TorusFunction;
    use crate::grid::TorusGrid;

    #[test]
    fn dini_sign_grows_logarithmically() {
        let g = TorusGrid::new(1 << 14).unwrap();
        let f = TorusFunction::Square.sample(g);
        for eps in [0.1, 0.01, 0.002] {
            let v = dini_integral(&f, 0.0, eps).unwrap();
            let want = 2.0 * (PI / eps).ln();
            assert!((v - want).abs() / want < 1e-2, "{v} vs {want}");
        }
    }

    #[test]
    fn dini_cos_converges() {
        let g = TorusGrid::new(1 << 12).unwrap();
        let f = TorusSignal::from_real_fn(g, f64::cos);
        let a = dini_integral(&f, 0.7, 0.01).unwrap();
        let b = dini_integral(&f, 0.7, 0.005).unwrap();
        assert!((a - b).abs() < 0.01);
    }

    #[test]
    fn sawtooth_at_jump_node() {
        let g = TorusGrid::new(4096).unwrap();
        let f = TorusFunction::Sawtooth.sample(g);
        let rows = jump_experiment(&f, &[16, 64, 256, 1024], 0, ZERO).unwrap();
        assert!(rows.iter().all(|r| r.1 < 1e-12));
    }

    #[test]
    fn localization() {
        let g = TorusGrid::new(8192).unwrap();
        let f = cut_out(&TorusFunction::Triangle.sample(g), 1.0, 0.5);
        let j = ((1.0 + PI) / g.spacing()).round() as usize;
        let rows = jump_experiment(&f, &[16, 64, 256, 1024], j, ZERO).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].1 < w[0].1, "{rows:?}");
        }
    }
}
