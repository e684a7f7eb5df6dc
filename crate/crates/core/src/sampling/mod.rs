//! Sinc sampling, Paley–Wiener projection, periodization and lattice sums.

mod periodize;
mod series;
mod sinc;

pub use periodize::{periodize, periodize_signal, poisson_summation_residual, PeriodizationResult, PoissonSummation, WrapSpec};
pub use series::{cosecant_series, theta, theta_equation_residual, CosecantSeries};
pub use sinc::{
    aliased_frequency, bandlimited_growth, omitted_sample_mass, pw_project, sample, sinc_combination, sinc_reconstruct,
    sinc_series_at, Growth, SampleSet, SampleSource,
};
