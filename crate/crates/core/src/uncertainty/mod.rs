//! Uncertainty products, commutator bounds and interpolation inequalities.

mod heisenberg;
mod interp;

pub use heisenberg::{
    commutator_check, heisenberg_report, optimal_shift, torus_uncertainty_residual, CommutatorCheck, Operator,
    TailSpec, UncertaintyReport,
};
pub use interp::{convolve_line, lp_interpolation_residual, marcinkiewicz_ceiling, young_residual, Convolve};
