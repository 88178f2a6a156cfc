//! Fourier analysis on bounded Vilenkin groups.
//!
//! A bounded Vilenkin group is truncated at a finite depth `N` and modelled
//! as a grid of `M_N` cells. On top of that model the crate provides the
//! Vilenkin characters and Dirichlet kernels (in floating point and in exact
//! cyclotomic arithmetic), naive and fast transforms, martingale Hardy
//! quasi-norms, Fejér, Riesz and Nörlund logarithmic means with their
//! maximal operators, and the atomic counterexample showing that the Riesz
//! and Nörlund logarithmic maximal operators are unbounded from `H_p` to
//! `L_p` for small `p`.
//!
//! Numerical code is generic over [`scalar::Real`]; the aliases below fix
//! the common choices.

pub mod counterexample;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod harmonic;
pub mod logmag;
pub mod random;
pub mod scalar;
pub mod summability;
pub mod system;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use group::GroupSpec;
pub use logmag::LogMagnitude;

pub type GridFunction64 = transform::GridFunction<f64>;
pub type GridFunction32 = transform::GridFunction<f32>;
pub type Spectrum64 = transform::Spectrum<f64>;
pub type Spectrum32 = transform::Spectrum<f32>;
pub type MeanKind64 = summability::MeanKind<f64>;
pub type WeightSeq64 = summability::WeightSeq<f64>;
pub type Complex64 = num_complex::Complex<f64>;
