//! Exact computation with mapping class groups of nonorientable surfaces.
//!
//! A nonorientable surface of genus `g` with `s` boundary components and `n`
//! punctures is a connected sum of `g` projective planes with `s` disks
//! removed and `n` points marked.  Its mapping class group contains the
//! *twist subgroup*: the subgroup generated by Dehn twists, which has index
//! `2^{n+1} * n!`.  This crate computes with these objects over exact integer
//! arithmetic:
//!
//! - [`linalg`] — arbitrary-precision integer matrices, determinants, Smith
//!   normal forms with unimodular certificates, and abelian invariants.
//! - [`fpgroup`] — finitely presented groups, coset rewriting of finite-index
//!   subgroups (Reidemeister–Schreier), and presentation simplification.
//! - [`surface`] — a polygon-with-identifications model of the surface, its
//!   CW structure, Euler characteristic, and first homology.
//! - [`homrep`] — the action of twists on first homology as transvection
//!   matrices, and the determinant homomorphism that cuts the twist subgroup
//!   out of the mapping class group.
//! - [`twist`] — a relation ledger computing the abelianization of the twist
//!   subgroup for every genus `g >= 3`.
//! - [`cli`] — the `crosscap` command-line interface over all of the above.
//!
//! Everything is deterministic: the same input always produces byte-identical
//! output, and all arithmetic is exact (no floating point anywhere).

pub mod cli;
pub mod error;
pub mod fpgroup;
pub mod guide;
pub mod homrep;
pub mod linalg;
pub mod surface;
pub mod twist;

pub use error::{Error, Result};
