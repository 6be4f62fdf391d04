//! Exact computations with finite-dimensional Hopf algebras and their actions
//! and coactions on algebras.

pub mod error;
pub mod exactlin;
pub mod structconst;
pub mod comodule;
pub mod modulealg;
pub mod grading;
pub mod hident;
pub mod json;
pub mod catalog;

pub use error::{Error, Result};
pub use exactlin::{FieldSpec, Fp, Matrix, Rational, Scalar, Subspace};

pub type Q = Rational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type QMatrix = Matrix<Rational>;
