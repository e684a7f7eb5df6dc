//! Convolution and summability means on the torus.

use crate::error::{invalid, Error, Result};
use crate::grid::{dft_analyze, dft_synthesize, TorusSignal, C64};
use crate::norms::lp_norm;

use super::kernels::TorusKernelSpec;

/// `(f*g)(t) = (1/2π)∫ f(t-τ) g(τ) dτ`, computed coefficient-wise.
pub fn convolve_torus(f: &TorusSignal, g: &TorusSignal) -> Result<TorusSignal> {
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch("convolution operands on different grids".into()));
    }
    let a = dft_analyze(f);
    let b = dft_analyze(g);
    Ok(dft_synthesize(&a.apply(|n| b.get(n))))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SummabilityMethod {
    Partial(usize),
    Cesaro(usize),
    Abel(f64),
    Gauss(f64),
}

impl SummabilityMethod {
    fn kernel(&self) -> TorusKernelSpec {
        match *self {
            Self::Partial(n) => TorusKernelSpec::Dirichlet(n),
            Self::Cesaro(n) => TorusKernelSpec::Fejer(n),
            Self::Abel(r) => TorusKernelSpec::Poisson(r),
            Self::Gauss(s) => TorusKernelSpec::Gauss(s),
        }
    }

    fn validate(&self, size: usize) -> Result<()> {
        match *self {
            Self::Partial(n) | Self::Cesaro(n) if n >= size / 2 => {
                Err(invalid("n", format!("{n} must be below N/2 = {}", size / 2)))
            }
            _ => self.kernel().validate(),
        }
    }
}

/// Apply the mean's frequency multiplier to `f`.
pub fn summability_mean(method: SummabilityMethod, f: &TorusSignal) -> Result<TorusSignal> {
    method.validate(f.grid().size())?;
    let k = method.kernel();
    let c = dft_analyze(f);
    Ok(dft_synthesize(&c.apply(|j| C64::new(k.multiplier(j), 0.0))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanKind {
    Partial,
    Cesaro,
    Abel,
    Gauss,
}

impl MeanKind {
    pub fn with_param(self, p: f64) -> Result<SummabilityMethod> {
        let as_n = |p: f64| {
            if p < 0.0 || p.fract() != 0.0 {
                Err(invalid("n", format!("{p} is not a nonnegative integer")))
            } else {
                Ok(p as usize)
            }
        };
        Ok(match self {
            Self::Partial => SummabilityMethod::Partial(as_n(p)?),
            Self::Cesaro => SummabilityMethod::Cesaro(as_n(p)?),
            Self::Abel => SummabilityMethod::Abel(p),
            Self::Gauss => SummabilityMethod::Gauss(p),
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "partial" => Ok(Self::Partial),
            "cesaro" | "fejer" => Ok(Self::Cesaro),
            "abel" | "poisson" => Ok(Self::Abel),
            "gauss" => Ok(Self::Gauss),
            _ => Err(Error::UnknownKey {
                kind: "method",
                key: s.to_string(),
            }),
        }
    }
}

/// `‖mean_param(f) - f‖_p` for each parameter in the schedule.
pub fn convergence_experiment(kind: MeanKind, f: &TorusSignal, params: &[f64], p: f64) -> Result<Vec<(f64, f64)>> {
    params
        .iter()
        .map(|&q| {
            let m = summability_mean(kind.with_param(q)?, f)?;
            Ok((q, lp_norm(&m.sub(f)?, p)?))
        })
        .collect()
}
