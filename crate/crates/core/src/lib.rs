//! Layered optical fiber eigenwaves: special functions, a dispersion solver
//! and Tikhonov reconstruction of layer permittivities.
//!
//! Every numerical type is generic over [`scalar::Real`] (`f32` or `f64`);
//! the aliases below fix the scalar to `f64`.

pub mod densela;
pub mod forward;
pub mod inverse;
pub mod scalar;
pub mod specfun;
pub mod waveguide;

pub use scalar::Real;

pub type Complex = num_complex::Complex<f64>;
pub type Matrix = densela::DenseComplexMatrix<f64>;
pub type Geometry = waveguide::Geometry<f64>;
pub type Profile = waveguide::PermittivityProfile<f64>;
pub type SearchSettings = forward::SearchSettings<f64>;
pub type DispersionPoint = forward::DispersionPoint<f64>;
pub type Measurements = inverse::MeasurementSet<f64>;
pub type Constraints = inverse::ConstraintSet<f64>;
pub type TikhonovConfig = inverse::TikhonovConfig<f64>;
pub type Reconstruction = inverse::ReconstructionResult<f64>;
