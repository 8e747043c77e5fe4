//! Homology action of the mapping class group.
//!
//! A twist about a two-sided circle acts on the free part of first
//! homology as a transvection; the crosscap slide acts with determinant
//! `-1`.  The sign of the determinant of the induced map is therefore a
//! homomorphism onto `{+1, -1}` whose kernel is exactly the twist
//! subgroup, and whose index — once marked points are accounted for — is
//! `2^{n+1} * n!`.
//!
//! [`rep`] builds the matrices from per-curve data and evaluates words;
//! [`catalog`] lists the generating curves of the twist subgroup and the
//! index factorization; [`names`] is the shared naming scheme.

pub mod catalog;
pub mod names;
pub mod rep;

pub use catalog::{subgroup_indices, twist_generators, IndexFactors};
pub use names::GeneratorName;
pub use rep::{load_representation, twist_matrix, CurveDatum, HomologyRepresentation};
