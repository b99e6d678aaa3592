//! Exact characteristic polynomials and the linear-algebra witnesses built on
//! top of them.
//!
//! Everything runs over an exact field ([`Field::Rationals`] or GF(p)), so
//! every identity is checked with plain equality.

pub mod charpoly;
pub mod cli;
pub mod corpus;
pub mod elimination;
pub mod error;
pub mod field;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod principles;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, FieldElement};
pub use matrix::{CompanionSpec, Matrix, ProductMode};
pub use poly::Poly;
