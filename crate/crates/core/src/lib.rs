// `!(a < b)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod extensions;
pub mod laplace;
pub mod linalg;
pub mod oracle;
pub mod params;
pub mod permeability;
pub mod real;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};
pub use params::PhysParams;
pub use real::Real;

/// Complex double.
pub type C64 = num_complex::Complex<f64>;
pub type Mat2F64 = linalg::Mat2<f64>;
pub type PhysParamsF64 = PhysParams<f64>;
pub type Unitary2F64 = extensions::Unitary2<f64>;
pub type BoundaryDataF64 = extensions::BoundaryData<f64>;
pub type ExtensionSpecF64 = extensions::ExtensionSpec<f64>;
pub type EigenRecordF64 = spectral::EigenRecord<f64>;
pub type ParityEigenF64 = laplace::ParityEigen<f64>;
