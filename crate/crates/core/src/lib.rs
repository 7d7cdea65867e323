//! Numerical toolkit for matrix regularizations of surfaces.
//!
//! * [`matcore`]: dense complex matrices, Hermitian eigensolver, superoperators.
//! * [`fuzzy`]: fuzzy sphere, fuzzy Clifford torus, axially symmetric surfaces.
//! * [`discgeo`]: discrete curvature, Euler characteristic, Laplacian spectrum.
//! * [`nambu`]: Nambu/Poisson brackets on finite-difference grids and the
//!   bracket formulas for curvature, normals, Codazzi residuals.
//! * [`report`]: JSON/CSV output with fixed formatting.
//!
//! All algorithms are generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the common double-precision instantiations.

pub mod discgeo;
pub mod error;
pub mod fuzzy;
pub mod matcore;
pub mod nambu;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type C64 = num_complex::Complex<f64>;
pub type CMatrix64 = matcore::CMatrix<f64>;
pub type CMatrix32 = matcore::CMatrix<f32>;
pub type FuzzySurface64 = fuzzy::FuzzySurface<f64>;
pub type FuzzySurface32 = fuzzy::FuzzySurface<f32>;
pub type AxialProfile64 = fuzzy::AxialProfile<f64>;
pub type EmbeddedManifold64 = nambu::EmbeddedManifold<f64>;
pub type GridField64 = nambu::GridField<f64>;
