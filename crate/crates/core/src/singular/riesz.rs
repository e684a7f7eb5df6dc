use std::f64::consts::SQRT_2;

use crate::error::Result;
use crate::fft::periodic_convolve;
use crate::grid::{dft_line, idft_line, LineSignal, C64, ZERO};
use crate::line::fd_derivative;

use super::kernel::{SingularKernelSpec, SingularKind};

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Multiplier `-i ξ_j/|ξ|`, `j ∈ {1, 2}`.
pub fn riesz_transform(f: &LineSignal, j: usize) -> Result<LineSignal> {
    SingularKernelSpec::new(SingularKind::Riesz(j), f.grid(), f.grid().spacing())?;
    let s = dft_line(f).without_nyquist();
    Ok(idft_line(&s.apply(|xi| {
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        if r == 0.0 {
            ZERO
        } else {
            -I * (xi[j - 1] / r)
        }
    })))
}

/// Multiplier `-|ξ|²`, Nyquist bins zeroed.
pub fn spectral_laplacian(f: &LineSignal) -> LineSignal {
    let s = dft_line(f).without_nyquist();
    idft_line(&s.apply(|xi| C64::new(-xi.iter().map(|v| v * v).sum::<f64>(), 0.0)))
}

/// `Σ_{0<|n|_∞<m} n_1²/|n|³ - ∫_{|y|_∞<m-1/2} y_1²/|y|³ dy`.
///
/// Lattice sum minus integral of the odd kernel's first Taylor term over the
/// square window of `m` cells per half side.
pub fn lattice_window_constant(m: usize) -> f64 {
    let m = m as i64;
    let mut s = 0.0;
    for a in (1 - m)..m {
        for b in (1 - m)..m {
            if a != 0 || b != 0 {
                let r2 = (a * a + b * b) as f64;
                s += (a * a) as f64 / r2.powf(1.5);
            }
        }
    }
    s - 4.0 * (m as f64 - 0.5) * (1.0 + SQRT_2).ln()
}

/// `p.v.∫ f(x-y) c₂ y_j/|y|³ dy` on a `d = 2` grid.
///
/// Lattice sum over all nonzero shifts with cell weight `h²`, except that the
/// first-order Taylor term inside the square window `|y|_∞ < ε` is replaced by
/// its exact integral. The derivative comes from fourth-order differences.
/// Shifts wrap periodically; the unpaired `-N/2` offsets are dropped so the
/// sampled kernel stays odd.
pub fn riesz_pv(f: &LineSignal, j: usize, eps: f64) -> Result<LineSignal> {
    let spec = SingularKernelSpec::new(SingularKind::Riesz(j), f.grid(), eps)?;
    let g = f.grid();
    let n = g.points();
    let h = g.spacing();
    let half = n as i64 / 2;
    let offset = |k: usize| if k < n / 2 { k as i64 } else { k as i64 - n as i64 };
    let w: Vec<C64> = (0..n * n)
        .map(|k| {
            let (a, b) = (offset(k / n), offset(k % n));
            if (a == 0 && b == 0) || a == -half || b == -half {
                ZERO
            } else {
                C64::new(h * h * spec.eval(&[a as f64 * h, b as f64 * h]), 0.0)
            }
        })
        .collect();
    let lattice = periodic_convolve(f.values(), &w, n, 2);
    let df = fd_derivative(f, j - 1)?;
    let c = spec.c_d() * h * lattice_window_constant(spec.window());
    let out = lattice.iter().zip(df.values()).map(|(s, d)| s + d * c).collect();
    LineSignal::new(g, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::random_band_limited_line;
    use crate::grid::LineGrid;
    use crate::line::spectral_derivative;
    use gauss_quad::GaussLegendre;
    use std::f64::consts::PI;

    fn bump(x: &[f64], c: [f64; 2], r: f64) -> f64 {
        let s = ((x[0] - c[0]).powi(2) + (x[1] - c[1]).powi(2)) / (r * r);
        if s < 1.0 {
            (-1.0 / (1.0 - s)).exp()
        } else {
            0.0
        }
    }

    #[test]
    fn window_constant_limit() {
        // ∫ over the unit-centred square of 1/|y| is 4 ln(1+√2); the full
        // regularized lattice constant is half of 4 ζ(1/2) β(1/2)
        assert!((lattice_window_constant(1) + 2.0 * (1.0 + SQRT_2).ln()).abs() < 1e-15);
        let limit = -3.900_264_920_001_956 / 2.0;
        let c = lattice_window_constant(400);
        assert!((c - limit).abs() < 1e-3, "{c}");
    }

    #[test]
    fn sum_of_squares_is_minus_identity() {
        let g = LineGrid::new(2, 4.0, 64).unwrap();
        let f = random_band_limited_line(g, 20, 1).unwrap();
        let mean = dft_line(&f).apply(|xi| if xi == [0.0, 0.0] { C64::new(1.0, 0.0) } else { ZERO });
        let mean = idft_line(&mean);
        let r1 = riesz_transform(&riesz_transform(&f, 1).unwrap(), 1).unwrap();
        let r2 = riesz_transform(&riesz_transform(&f, 2).unwrap(), 2).unwrap();
        let want = mean.sub(&f).unwrap();
        assert!(r1.add(&r2).unwrap().max_abs_diff(&want) < 1e-10);
    }

    #[test]
    fn anti_self_adjoint() {
        let g = LineGrid::new(2, 4.0, 64).unwrap();
        let f = random_band_limited_line(g, 25, 2).unwrap();
        let h = random_band_limited_line(g, 25, 3).unwrap();
        for j in 1..=2 {
            let a = riesz_transform(&f, j).unwrap().inner(&h).unwrap();
            let b = f.inner(&riesz_transform(&h, j).unwrap()).unwrap();
            assert!((a + b).norm() < 1e-10);
        }
    }

    #[test]
    fn mixed_transform_of_laplacian() {
        let g = LineGrid::new(2, 4.0, 128).unwrap();
        let f = LineSignal::from_real_fn(g, |x| bump(x, [0.0, 0.0], 1.5));
        let lhs = riesz_transform(&riesz_transform(&spectral_laplacian(&f), 2).unwrap(), 1).unwrap();
        let d12 = spectral_derivative(&spectral_derivative(&f, 1).unwrap(), 0).unwrap();
        assert!(lhs.max_abs_diff(&d12.scale(C64::new(-1.0, 0.0))) < 1e-8);
    }

    #[test]
    fn pv_agrees_with_multiplier() {
        let g = LineGrid::new(2, 16.0, 512).unwrap();
        let f = LineSignal::from_real_fn(g, |x| bump(x, [0.0, 0.0], 2.0));
        for j in 1..=2 {
            let a = riesz_transform(&f, j).unwrap();
            let b = riesz_pv(&f, j, 8.0 * g.spacing()).unwrap();
            let mut worst = 0.0_f64;
            for k in 0..g.len() {
                let p = g.point(k);
                if p[0].abs() <= 3.0 && p[1].abs() <= 3.0 {
                    worst = worst.max((a.values()[k] - b.values()[k]).norm());
                }
            }
            assert!(worst < 1e-3, "{worst}");
        }
    }

    #[test]
    fn radial_input_gives_odd_output() {
        let g = LineGrid::new(2, 4.0, 64).unwrap();
        let f = LineSignal::from_real_fn(g, |x| (-(x[0] * x[0] + x[1] * x[1])).exp());
        let r = riesz_pv(&f, 1, 2.0 * g.spacing()).unwrap();
        let n = g.points();
        for a in 1..n {
            for b in 1..n {
                let u = r.values()[a * n + b];
                let v = r.values()[(n - a) * n + b];
                assert!((u + v).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn far_support_matches_direct_quadrature() {
        let g = LineGrid::new(2, 8.0, 256).unwrap();
        let c = [4.0, 1.0];
        let f = LineSignal::from_real_fn(g, |x| bump(x, c, 1.0));
        let r = riesz_pv(&f, 2, 2.0 * g.spacing()).unwrap();
        // tensor Gauss–Legendre over the bump's bounding square
        let rule = GaussLegendre::new(30).unwrap();
        let kernel = |x: [f64; 2], y: [f64; 2]| {
            let d = [x[0] - y[0], x[1] - y[1]];
            d[1] / (2.0 * PI * (d[0] * d[0] + d[1] * d[1]).powf(1.5))
        };
        for k in 0..g.len() {
            let x = g.point(k);
            if x[0].abs() <= 1.0 && x[1].abs() <= 1.0 && k % 97 == 0 {
                let panels = 8;
                let w = 2.0 / panels as f64;
                let mut want = 0.0;
                for p in 0..panels {
                    for q in 0..panels {
                        let (a0, b0) = (c[0] - 1.0 + w * p as f64, c[1] - 1.0 + w * q as f64);
                        want += rule.integrate(a0, a0 + w, |y0| {
                            rule.integrate(b0, b0 + w, |y1| bump(&[y0, y1], c, 1.0) * kernel([x[0], x[1]], [y0, y1]))
                        });
                    }
                }
                assert!((r.values()[k].re - want).abs() < 1e-7, "{} {want}", r.values()[k].re);
            }
        }
    }
}
