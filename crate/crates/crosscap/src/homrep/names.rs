//! Names for the standard generating curves and the crosscap slide.
//!
//! The mapping class group of a nonorientable surface is generated by Dehn
//! twists about a standard family of two-sided circles together with one
//! crosscap slide.  The circles come in indexed families — the chain curves
//! `a_i`, their companions `b_i` and `c_i`, the puncture/boundary separators
//! `e_i` and `f_i`, and the boundary-parallel curves `u_i` — plus up to
//! three unindexed curves `psi`, `lambda`, `xi` that only appear for
//! particular genera.  The slide itself is written `y`.
//!
//! A [`GeneratorName`] is the typed form of these names; the textual form
//! (`a1`, `b2`, `psi`, `y`, ...) is what presentations, representation
//! configs, and the CLI use.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator of the mapping class group in the standard curve system.
///
/// Indexed variants carry a 1-based index into their family.  `Y` is not a
/// twist: it names the crosscap slide, the only generator that reverses
/// orientation on homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorName {
    /// Chain curve `a_i`.
    A(u32),
    /// Companion curve `b_i` crossing the chain.
    B(u32),
    /// Companion curve `c_i` parallel to the chain on the far side.
    C(u32),
    /// Curve `e_i` separating marked points and boundary circles.
    E(u32),
    /// Boundary-parallel curve `u_i`.
    U(u32),
    /// Genus-3 companion curve `f_i`.
    F(u32),
    /// The unindexed curve `psi` (genus at least 5).
    Psi,
    /// The unindexed curve `lambda` (even genus).
    Lambda,
    /// The separating curve `xi` around the crosscaps.
    Xi,
    /// The crosscap slide.
    Y,
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorName::A(i) => write!(f, "a{i}"),
            GeneratorName::B(i) => write!(f, "b{i}"),
            GeneratorName::C(i) => write!(f, "c{i}"),
            GeneratorName::E(i) => write!(f, "e{i}"),
            GeneratorName::U(i) => write!(f, "u{i}"),
            GeneratorName::F(i) => write!(f, "f{i}"),
            GeneratorName::Psi => write!(f, "psi"),
            GeneratorName::Lambda => write!(f, "lambda"),
            GeneratorName::Xi => write!(f, "xi"),
            GeneratorName::Y => write!(f, "y"),
        }
    }
}

impl FromStr for GeneratorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" => return Ok(GeneratorName::Psi),
            "lambda" => return Ok(GeneratorName::Lambda),
            "xi" => return Ok(GeneratorName::Xi),
            "y" => return Ok(GeneratorName::Y),
            _ => {}
        }
        let err = || Error::Invalid(format!("'{s}' is not a curve or slide name"));
        if s.len() < 2 {
            return Err(err());
        }
        let (kind, index) = s.split_at(1);
        let index: u32 = index.parse().map_err(|_| err())?;
        if index == 0 {
            return Err(err());
        }
        match kind {
            "a" => Ok(GeneratorName::A(index)),
            "b" => Ok(GeneratorName::B(index)),
            "c" => Ok(GeneratorName::C(index)),
            "e" => Ok(GeneratorName::E(index)),
            "u" => Ok(GeneratorName::U(index)),
            "f" => Ok(GeneratorName::F(index)),
            _ => Err(err()),
        }
    }
}
