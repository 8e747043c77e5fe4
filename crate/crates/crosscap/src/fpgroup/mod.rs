//! Finitely presented groups and subgroup rewriting.
//!
//! The pieces compose into one pipeline: parse a [`Presentation`], name a
//! finite cyclic quotient with a [`FiniteQuotientHom`], pick a Schreier
//! [`Transversal`] of the kernel, present the kernel with
//! [`reidemeister_schreier`], clean the result up with [`tietze_simplify`],
//! and read off its [`Presentation::abelianization`].  Applied to a mapping
//! class group and its twist-or-not parity map, the kernel is the twist
//! subgroup.

mod presentation;
mod quotient;
mod rewrite;
mod word;

pub use presentation::Presentation;
pub use quotient::{FiniteQuotientHom, Transversal};
pub use rewrite::{
    reidemeister_schreier, rewrite_word, schreier_generators, tietze_simplify,
    SchreierGenerator, SubgroupPresentation,
};
pub use word::{FreeWord, GeneratorSymbol};
