//! Tight relative 2-designs on two shells of the binary Hamming scheme.
//!
//! The crate covers the whole pipeline: exact Krawtchouk and Gram data,
//! verification of weighted point sets, enumeration of feasible parameters,
//! constructions from Hadamard matrices and symmetric designs, and an
//! exhaustive search that refutes infeasible parameter rows.

pub mod constructions;
pub mod design;
pub mod feasibility;
pub mod error;
pub mod gram;
pub mod hamming;
pub mod linalg;
pub mod nonexistence;
pub mod scalar;
pub mod selftest;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational, the default scalar everywhere.
pub type Rational = num_rational::BigRational;
/// Fixed-width rational for callers that know their entries stay small.
pub type SmallRational = num_rational::Ratio<i128>;
