//! Numerical harmonic analysis on the torus and the line.
//!
//! Signals live on uniform power-of-two grids: [`TorusGrid`] over `[-π, π)`
//! and [`LineGrid`] over `[-L, L)^d`, `d ∈ {1, 2}`. Torus quantities use the
//! normalized measure `dt/2π`, line quantities Lebesgue measure, and the
//! Fourier transform on the line is `f̂(ξ) = ∫ f(x) e^{-iξ·x} dx`.

pub mod catalog;
pub mod error;
mod fft;
pub mod grid;
pub mod line;
pub mod maximal;
pub mod norms;
pub mod rng;
pub mod sampling;
pub mod singular;
pub mod torus;
pub mod uncertainty;

pub use error::{Error, Result};
pub use grid::{
    dft_analyze, dft_line, dft_synthesize, idft_line, LineGrid, LineSignal, SpectrumR, SpectrumT,
    TorusGrid, TorusSignal, C64,
};
pub use norms::{distribution_function, layercake_lp, lp_norm, Measured};
pub use rng::SeededRng;
