//! Finite presentations `< generators | relators >` and their text format.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::fpgroup::word::{FreeWord, GeneratorSymbol};
use crate::linalg::{invariant_factors, AbelianInvariants, IntegerMatrix};

/// A finite group presentation: an ordered alphabet of generators and a list
/// of relator words over that alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Vec<GeneratorSymbol>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    /// Builds a presentation, checking that the alphabet has no duplicates
    /// and that every relator letter names a generator.
    pub fn new(alphabet: Vec<GeneratorSymbol>, relators: Vec<FreeWord>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &alphabet {
            if !seen.insert(g.clone()) {
                return Err(Error::PresentationParse(format!(
                    "duplicate generator '{g}'"
                )));
            }
        }
        for r in &relators {
            for (g, _) in r.letters() {
                if !seen.contains(g) {
                    return Err(Error::PresentationParse(format!(
                        "relator '{r}' uses unknown generator '{g}'"
                    )));
                }
            }
        }
        Ok(Self { alphabet, relators })
    }

    /// The generator alphabet, in order.
    pub fn alphabet(&self) -> &[GeneratorSymbol] {
        &self.alphabet
    }

    /// The relators, in order.
    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// The exponent-sum matrix: one row per relator, one column per
    /// generator, entry `(i, j)` the net exponent of generator `j` in
    /// relator `i`.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.relators.len(), self.alphabet.len());
        for (i, r) in self.relators.iter().enumerate() {
            for (j, g) in self.alphabet.iter().enumerate() {
                *m.at_mut(i, j) = r.exponent_sum(g).into();
            }
        }
        m
    }

    /// The abelianization of the presented group, computed from the Smith
    /// normal form of the exponent-sum matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        invariant_factors(&self.relation_matrix(), self.alphabet.len())
            .expect("ambient equals column count")
    }

    /// Parses the presentation text format:
    ///
    /// ```text
    /// # comment
    /// gens: a1 a2 y
    /// rel: a1 a2 a1 a2^-1 a1^-1 a2^-1
    /// rel: y y
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.  The first significant line
    /// must declare the generators; every later line must be a relator.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::PresentationParse("empty input".into()))?;
        let gens_text = header.strip_prefix("gens:").ok_or_else(|| {
            Error::PresentationParse(format!("expected 'gens:' line, got '{header}'"))
        })?;
        let alphabet = gens_text
            .split_whitespace()
            .map(GeneratorSymbol::new)
            .collect::<Result<Vec<_>>>()?;
        let mut relators = Vec::new();
        for line in lines {
            let rel_text = line.strip_prefix("rel:").ok_or_else(|| {
                Error::PresentationParse(format!("expected 'rel:' line, got '{line}'"))
            })?;
            relators.push(FreeWord::parse(rel_text)?);
        }
        Self::new(alphabet, relators)
    }
}

impl fmt::Display for Presentation {
    /// Inverse of [`Presentation::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens:")?;
        for g in &self.alphabet {
            write!(f, " {g}")?;
        }
        writeln!(f)?;
        for r in &self.relators {
            if r.is_identity() {
                writeln!(f, "rel:")?;
            } else {
                writeln!(f, "rel: {r}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MCG_N3: &str = "\
# mapping class group of the genus-3 closed nonorientable surface
gens: a1 a2 y
rel: a1 a2 a1 a2^-1 a1^-1 a2^-1
rel: y a1 y^-1 a1
rel: y a2 y^-1 a2
rel: y y
rel: a1 a2 a1 a2 a1 a2 a1 a2 a1 a2 a1 a2
";

    #[test]
    fn parse_display_round_trip() {
        let p = Presentation::parse(MCG_N3).unwrap();
        assert_eq!(p.alphabet().len(), 3);
        assert_eq!(p.relators().len(), 5);
        let reparsed = Presentation::parse(&p.to_string()).unwrap();
        assert_eq!(p, reparsed);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(Presentation::parse("").is_err());
        assert!(Presentation::parse("rel: a").is_err());
        assert!(Presentation::parse("gens: a a").is_err());
        assert!(Presentation::parse("gens: a\nrel: b").is_err());
        assert!(Presentation::parse("gens: a\nfoo: a").is_err());
    }

    #[test]
    fn relation_matrix_takes_exponent_sums() {
        let p = Presentation::parse("gens: a b\nrel: a b a b^-1 a^-1 b^-1\nrel: a a b").unwrap();
        let m = p.relation_matrix();
        assert_eq!(m, IntegerMatrix::from_i64(&[&[1, -1], &[2, 1]]));
    }

    #[test]
    fn abelianization_of_known_groups() {
        // Z * Z abelianizes to Z^2.
        let free2 = Presentation::parse("gens: a b").unwrap();
        assert_eq!(free2.abelianization().to_string(), "Z^2");

        // The mapping class group of the closed genus-3 nonorientable
        // surface abelianizes to Z/2 x Z/2.
        let p = Presentation::parse(MCG_N3).unwrap();
        let ab = p.abelianization();
        assert_eq!(ab.to_string(), "Z/2 x Z/2");

        // An identity relator imposes nothing.
        let p = Presentation::parse("gens: a\nrel:").unwrap();
        assert_eq!(p.abelianization().to_string(), "Z");
    }
}
