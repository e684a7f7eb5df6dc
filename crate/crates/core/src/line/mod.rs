//! Analysis on the line: the closed-form transform table, summability
//! kernels and means, differentiation and Hausdorff–Young checks.

pub mod checks;
pub mod closed_form;
pub mod kernels;
pub mod means;

pub use checks::{fd_derivative, derivative_multiplier_check, hausdorff_young_line, spectral_derivative, HausdorffYoung};
pub use closed_form::{closed_form, gauss_superposition, transform_table_check, QuadratureSpec, Side};
pub use kernels::{kernel_axioms_line, kernel_line_eval, LineKernelKind, LineKernelSpec};
pub use means::{summability_mean_line, LineMethod};
