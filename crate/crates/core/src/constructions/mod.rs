//! Tight designs from Hadamard matrices and symmetric 2-designs.

pub mod catalog;
pub mod field;
pub mod hadamard;
pub mod symmetric;

pub use catalog::{catalog, design_row, CatalogEntry};
pub use hadamard::{hadamard_design, paley_hadamard, sylvester_hadamard, HadamardMatrix};
pub use symmetric::{
    complement_design, from_symmetric_complemented, from_symmetric_residual, grid_design,
    hadamard_symmetric_design, paley_design, projective_plane, SymmetricDesign,
};
