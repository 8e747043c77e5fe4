//! The user guide, compiled as doc-tests.
//!
//! Each chapter of the book under `book/src/` is included here verbatim, so
//! every fenced Rust snippet in the guide is run by `cargo test`.  If a code
//! sample in the book drifts out of sync with the library, the build fails.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/surfaces.md")]
pub mod surfaces {}

#[doc = include_str!("../../../book/src/integer-matrices.md")]
pub mod integer_matrices {}

#[doc = include_str!("../../../book/src/presentations.md")]
pub mod presentations {}

#[doc = include_str!("../../../book/src/subgroups.md")]
pub mod subgroups {}

#[doc = include_str!("../../../book/src/homology-action.md")]
pub mod homology_action {}

#[doc = include_str!("../../../book/src/twist-homology.md")]
pub mod twist_homology {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli_tour {}
