//! Exact integer linear algebra: Smith form, minors, lattices, successive minima.

mod lattice;
mod matrix;
mod minima;
mod snf;

pub use lattice::{basis_extension, kernel_basis, BasisExtension, IntegerLattice};
pub use matrix::{subsets, IntMatrix};
pub use minima::{successive_minima, MinimaConfig, SuccessiveMinima};
pub use snf::{minor_gcd, smith_normal_form, verify_smith, SmithDecomposition};
