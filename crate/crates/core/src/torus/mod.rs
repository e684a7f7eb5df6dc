//! Analysis on the torus: summability kernels and means, coefficient
//! sequences, pointwise convergence experiments and the Hilbert transform.

pub mod coeffs;
pub mod hilbert;
pub mod kernels;
pub mod means;
pub mod pointwise;

pub use coeffs::{decay_exponent, hausdorff_young_ratio, seq_convolve, CoeffSequence};
pub use hilbert::{
    hilbert_torus, hilbert_torus_pv, hilbert_torus_truncated, modulation_identity_residual,
    riesz_projection_torus,
};
pub use kernels::{kernel_axioms, kernel_eval, kernel_series, KernelAxiomReport, TailMass, TorusKernelSpec};
pub use means::{convergence_experiment, convolve_torus, summability_mean, MeanKind, SummabilityMethod};
pub use pointwise::{dini_integral, jump_experiment, partial_sum_at};
