//! Exact integer linear algebra.
//!
//! Everything downstream — abelianized presentations, surface homology, the
//! twist-subgroup tables — reduces to integer matrix normal forms, so this
//! module provides:
//!
//! - [`IntegerMatrix`] — dense arbitrary-precision matrices with elementary
//!   row/column operations and a bit-exact text format,
//! - [`det`] — Bareiss fraction-free determinants,
//! - [`snf`] — Smith normal form with unimodular certificates `U*A*V = S`,
//! - [`invariant_factors`] / [`AbelianInvariants`] — cokernels as
//!   finitely generated abelian groups.

mod matrix;
mod snf;

pub use matrix::IntegerMatrix;
pub use snf::{det, invariant_factors, snf, unimodular_inverse, AbelianInvariants, SmithForm};
