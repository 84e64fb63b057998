//! Exact verification and construction of finite-dimensional Hom-Hopf
//! algebras, their (co)modules, Radford biproducts and Hom-Yetter-Drinfeld
//! modules, all given by structure constants over ℚ or GF(p).
//!
//! Linear maps are matrices (output × input); tensor products of bases use
//! the left-most-significant flattening of [`tensor::flatten`].

pub mod actions;
pub mod braided;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod format;
pub mod matrix;
pub mod par;
pub mod quasitriangular;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod tensor;

pub use error::{Error, Result};
pub use matrix::{kron, maps_equal, Equality, Matrix};
pub use report::{Check, Report, Verdict, Witness};
pub use scalar::{Field, Scalar};
