//! Exact Shintani-cone machinery for totally real number fields.
//!
//! The pipeline expresses narrow partial zeta values as rational linear
//! combinations of conical zeta values over algebraic cones (divided by
//! sqrt(d_F)) and verifies the identity numerically with certified
//! enclosures end to end:
//!
//! field -> embedded ideal lattice -> cone decomposition -> exact
//! coefficient expansion -> rigorous lattice summation -> Dedekind zeta
//! oracle -> verdict.

pub mod cone;
pub mod error;
pub mod field;
pub mod files;
pub mod formula;
pub mod interval;
pub mod lattice;
pub mod linalg;
pub mod mpoly;
pub mod oracle;
pub mod pipeline;
pub mod rat;
pub mod shintani;
pub mod summation;

pub use error::{Error, Result};
