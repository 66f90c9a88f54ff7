//! Exact counting of torsion points of bounded order on subvarieties of the
//! algebraic torus 𝔾ₘⁿ.
//!
//! The lattice and torsion layers are generic over an exact integer scalar
//! ([`scalar::IntScalar`]); the aliases below fix it to `BigInt`.

pub mod arith;
pub mod counting;
pub mod error;
pub mod ffield;
pub mod field;
pub mod fpoly;
pub mod intlat;
pub mod json;
pub mod scalar;
pub mod torsion;
pub mod variety;

pub use error::{Error, Result};

use num_bigint::BigInt;

pub type Matrix = intlat::IntMatrix<BigInt>;
pub type Lattice = intlat::IntegerLattice<BigInt>;
pub type Smith = intlat::SmithDecomposition<BigInt>;
pub type Minima = intlat::SuccessiveMinima<BigInt>;
pub type Point = torsion::TorsionPoint<BigInt>;
pub type Subgroup = torsion::TorusSubgroup<BigInt>;
pub type Coset = torsion::TorsionCoset<BigInt>;
pub type Exponent = num_rational::BigRational;
pub type RationalPoly = variety::LaurentPoly<field::Rationals>;
pub type PrimePoly = variety::LaurentPoly<field::PrimeField>;
