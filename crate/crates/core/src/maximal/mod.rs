//! Maximal functions, the covering selection, dyadic averages and the
//! Calderón–Zygmund decomposition.

pub mod czd;
pub mod dyadic;
pub mod hl;
pub mod torus_maximal;
pub mod weak;

pub use czd::{cz_decompose, cz_decompose_torus, BadPiece, CzProperties, CzResult, CzSummary};
pub use dyadic::{dyadic_average, dyadic_maximal, DyadicCube};
pub use hl::{covering_select, hl_maximal, Ball};
pub use torus_maximal::{all_boxes, torus_maximal, TorusMaximalKind};
pub use weak::{weak_norm_report, weak_ratio_sup, WeakNormReport};
