use std::f64::consts::PI;

use gauss_quad::GaussLegendre;

use crate::error::{invalid, Result};

const THETA_PANELS: usize = 256;
const T_PANELS: usize = 24;
const DEGREE: usize = 16;

fn composite(rule: &GaussLegendre, a: f64, b: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    let w = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + w * i as f64;
            rule.integrate(lo, lo + w, &f)
        })
        .sum()
}

fn riesz(j: usize, x: [f64; 2]) -> f64 {
    let r2 = x[0] * x[0] + x[1] * x[1];
    x[j - 1] / (2.0 * PI * r2.powf(1.5))
}

/// `∫ |ρ_j(x-y) - ρ_j(x-z)| dx` over `|x-z| ≥ 2|y-z|`, `|x| ≤ R`, in `d = 2`.
///
/// Polar coordinates about `z` with `t = 2|y-z|/r`; `R = ∞` is allowed.
pub fn hormander_integral(j: usize, y: [f64; 2], z: [f64; 2], domain_radius: f64) -> Result<f64> {
    if j == 0 || j > 2 {
        return Err(invalid("j", format!("{j} not in 1..=2")));
    }
    let delta = ((y[0] - z[0]).powi(2) + (y[1] - z[1]).powi(2)).sqrt();
    if !(delta > 0.0) {
        return Err(invalid("y", "y and z coincide"));
    }
    if !(domain_radius > 0.0) {
        return Err(invalid("domain_radius", format!("{domain_radius} must be positive")));
    }
    let rule = GaussLegendre::new(DEGREE).map_err(|e| invalid("degree", e.to_string()))?;
    let a = 2.0 * delta;
    let zz = z[0] * z[0] + z[1] * z[1];
    let radial = |theta: f64| {
        let u = [theta.cos(), theta.sin()];
        let (lo, hi) = if domain_radius.is_infinite() {
            (a, f64::INFINITY)
        } else {
            let b = z[0] * u[0] + z[1] * u[1];
            let disc = b * b - zz + domain_radius * domain_radius;
            if disc <= 0.0 {
                return 0.0;
            }
            (a.max(-b - disc.sqrt()), -b + disc.sqrt())
        };
        if hi <= lo {
            return 0.0;
        }
        composite(&rule, a / hi, a / lo, T_PANELS, |t| {
            let r = a / t;
            let x = [z[0] + r * u[0], z[1] + r * u[1]];
            let d = riesz(j, [x[0] - y[0], x[1] - y[1]]) - riesz(j, [x[0] - z[0], x[1] - z[1]]);
            d.abs() * r * a / (t * t)
        })
    };
    Ok(composite(&rule, 0.0, 2.0 * PI, THETA_PANELS, radial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    #[test]
    fn translation_and_scaling() {
        let base = hormander_integral(1, [0.3, -0.2], [0.1, 0.4], f64::INFINITY).unwrap();
        let moved = hormander_integral(1, [5.3, 1.8], [5.1, 2.4], f64::INFINITY).unwrap();
        assert!((base - moved).abs() < 1e-10);
        let a = hormander_integral(2, [0.3, -0.2], [0.1, 0.4], 5.0).unwrap();
        let b = hormander_integral(2, [3.0, -2.0], [1.0, 4.0], 50.0).unwrap();
        assert!(((a - b) / a).abs() < 1e-6);
        assert!(hormander_integral(1, [1.0, 1.0], [1.0, 1.0], 2.0).is_err());
    }

    #[test]
    fn bounded_over_random_pairs() {
        let mut rng = SeededRng::new(8);
        let mut worst = 0.0_f64;
        for _ in 0..20 {
            let y = [rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0)];
            let z = [rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0)];
            worst = worst.max(hormander_integral(1, y, z, 10.0).unwrap());
        }
        assert!(worst.is_finite() && worst < 2.0, "{worst}");
    }
}
