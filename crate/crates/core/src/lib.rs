//! Convolutional Goppa codes over `F_q(z)`.
//!
//! Codes are built by evaluating Riemann–Roch spaces at rational points of
//! the projective line or of a plane elliptic curve over the rational
//! function field `F_q(z)`. The crate constructs generator matrices and
//! residue-based duals, reduces them to minimal-basic polynomial encoders and
//! computes degree, free distance and the generalized Singleton bound.

pub mod conv;
pub mod display;
pub mod elliptic;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod matrix;
pub mod p1;
pub mod poly;
pub mod ratfn;
pub mod report;
pub mod serial;
pub mod spec_file;
pub mod statespace;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldRef, FieldSpec};
pub use matrix::{FqMatrix, PolyMatrix, RatMatrix};
pub use poly::Poly;
pub use ratfn::RatFn;
