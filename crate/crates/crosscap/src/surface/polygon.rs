//! Polygon models of nonorientable surfaces.
//!
//! The genus-`g` nonorientable surface with `s` boundary circles and `n`
//! marked points is presented as a single polygon whose sides are labeled
//!
//! ```text
//! a_1 ... a_{g-1} a_g a_{g-1} ... a_1   (crosscap block)
//! v_1 v_1  ...  v_n v_n                 (one block per marked point)
//! v_{n+1} u_1 v_{n+1}  ...              (one block per boundary circle)
//! a_1 a_2 ... a_g a_{g-1} ... a_2       (return block)
//! ```
//!
//! and glued by identifying equal labels (see the sibling `complex` module
//! for the exact identification).  Each `a_j` with `1 < j < g` appears four
//! times, `a_1` three times, `a_g` twice, each `v_i` twice, and each `u_i`
//! once — the `u_i` sides stay free and become the boundary circles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Parameters of a nonorientable surface: genus (number of crosscaps),
/// boundary circles, and marked points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub boundary: u32,
    pub punctures: u32,
}

impl SurfaceSpec {
    /// Builds a spec; the genus must be at least 1.
    pub fn new(genus: u32, boundary: u32, punctures: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::SurfaceParams(
                "genus must be at least 1 for a nonorientable surface".into(),
            ));
        }
        Ok(Self {
            genus,
            boundary,
            punctures,
        })
    }

    /// Euler characteristic of the underlying compact surface.
    pub fn euler_characteristic(&self) -> i64 {
        2 - i64::from(self.genus) - i64::from(self.boundary)
    }
}

impl fmt::Display for SurfaceSpec {
    /// Renders as e.g. `N_{3,2}^0` (genus, boundary circles; marked points).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N_{{{},{}}}^{}",
            self.genus, self.boundary, self.punctures
        )
    }
}

/// A polygon side label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// Crosscap arc `a_i`.
    A(u32),
    /// Marked-point or boundary fold arc `v_i`.
    V(u32),
    /// Free boundary arc `u_i`.
    U(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(i) => write!(f, "a{i}"),
            Label::V(i) => write!(f, "v{i}"),
            Label::U(i) => write!(f, "u{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::SurfaceParams(format!("invalid side label '{s}'"));
        let (kind, index) = s.split_at(1);
        let index: u32 = index.parse().map_err(|_| err())?;
        if index == 0 {
            return Err(err());
        }
        match kind {
            "a" => Ok(Label::A(index)),
            "v" => Ok(Label::V(index)),
            "u" => Ok(Label::U(index)),
            _ => Err(err()),
        }
    }
}

/// A labeled polygon: the side word of a surface, with signs recording the
/// direction each side is traversed relative to its identification partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonModel {
    spec: SurfaceSpec,
    word: Vec<(Label, i8)>,
}

impl PolygonModel {
    /// Wraps a side word after checking that its label multiset is the one
    /// the surface requires: `a_1` three times (twice when `g = 1`), middle
    /// `a_j` four times, `a_g` twice, every `v_i` twice, every `u_i` once.
    ///
    /// Only multiplicities are checked here; the block structure is
    /// validated by gluing, so reorderings of the marked-point and boundary
    /// blocks are accepted.
    pub fn new(spec: SurfaceSpec, word: Vec<(Label, i8)>) -> Result<Self> {
        let g = spec.genus;
        let vs = spec.punctures + spec.boundary;
        let mut counts: std::collections::BTreeMap<Label, u32> = std::collections::BTreeMap::new();
        for (label, sign) in &word {
            if *sign != 1 && *sign != -1 {
                return Err(Error::SurfaceParams(format!(
                    "side {label} has sign {sign}, expected +1 or -1"
                )));
            }
            *counts.entry(*label).or_insert(0) += 1;
        }
        let mut expected: std::collections::BTreeMap<Label, u32> = std::collections::BTreeMap::new();
        for j in 1..=g {
            let mult = if g == 1 {
                2 // a_1 is the only arc: one crosscap pair
            } else if j == 1 {
                3
            } else if j == g {
                2
            } else {
                4
            };
            expected.insert(Label::A(j), mult);
        }
        for i in 1..=vs {
            expected.insert(Label::V(i), 2);
        }
        for i in 1..=spec.boundary {
            expected.insert(Label::U(i), 1);
        }
        if counts != expected {
            for (label, want) in &expected {
                let got = counts.get(label).copied().unwrap_or(0);
                if got != *want {
                    return Err(Error::SurfaceParams(format!(
                        "label {label} appears {got} times, expected {want}"
                    )));
                }
            }
            let extra = counts.keys().find(|l| !expected.contains_key(l));
            return Err(Error::SurfaceParams(format!(
                "unexpected label {}",
                extra.expect("count mismatch implies an extra label")
            )));
        }
        Ok(Self { spec, word })
    }

    /// The surface parameters.
    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    /// The side word.
    pub fn word(&self) -> &[(Label, i8)] {
        &self.word
    }
}

impl fmt::Display for PolygonModel {
    /// One line of whitespace-separated tokens, `label` or `label^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (label, sign) in &self.word {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *sign == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{label}^-1")?;
            }
        }
        Ok(())
    }
}

/// Builds the canonical polygon word for a surface.
///
/// Marked-point blocks `v_i v_i^-1` come first (labels `v_1 ... v_n`), then
/// boundary blocks `v_{n+i} u_i v_{n+i}^-1`.  The word length is
/// `4g - 3 + 2n + 3s` for `g >= 2` and `2 + 2n + 3s` for `g = 1`.
pub fn build_polygon(spec: SurfaceSpec) -> PolygonModel {
    let g = spec.genus;
    let n = spec.punctures;
    let s = spec.boundary;
    let mut word: Vec<(Label, i8)> = Vec::new();

    // Crosscap block: a_1 ... a_{g-1} a_g a_{g-1} ... a_1, all forward.
    for j in 1..=g {
        word.push((Label::A(j), 1));
    }
    for j in (1..g).rev() {
        word.push((Label::A(j), 1));
    }

    // Marked points fold a v-arc onto itself; the fold corner is the point.
    for i in 1..=n {
        word.push((Label::V(i), 1));
        word.push((Label::V(i), -1));
    }
    // Boundary circles fold a v-arc around a free u-arc.
    for i in 1..=s {
        word.push((Label::V(n + i), 1));
        word.push((Label::U(i), 1));
        word.push((Label::V(n + i), -1));
    }

    // Return block: a_1 a_2 ... a_g a_{g-1} ... a_2.  The a_1 side is inert
    // (it folds onto itself when glued); the a_g and descending sides run
    // backwards against their crosscap-block partners.
    if g >= 2 {
        word.push((Label::A(1), 1));
        for j in 2..g {
            word.push((Label::A(j), 1));
        }
        word.push((Label::A(g), -1));
        for j in (2..g).rev() {
            word.push((Label::A(j), -1));
        }
    } else {
        word.push((Label::A(1), 1));
    }

    PolygonModel::new(spec, word).expect("canonical word satisfies its own multiplicities")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation_and_display() {
        assert!(SurfaceSpec::new(0, 1, 1).is_err());
        let spec = SurfaceSpec::new(3, 2, 0).unwrap();
        assert_eq!(spec.to_string(), "N_{3,2}^0");
        assert_eq!(spec.euler_characteristic(), -3);
    }

    #[test]
    fn label_round_trip() {
        for text in ["a1", "a12", "v3", "u1"] {
            let label: Label = text.parse().unwrap();
            assert_eq!(label.to_string(), text);
        }
        assert!("a0".parse::<Label>().is_err());
        assert!("b1".parse::<Label>().is_err());
        assert!("a".parse::<Label>().is_err());
    }

    #[test]
    fn word_lengths() {
        let cases = [
            ((1, 0, 0), 2),
            ((1, 1, 0), 5),
            ((2, 0, 0), 5),
            ((3, 0, 0), 9),
            ((4, 0, 1), 15),
            ((3, 2, 1), 17),
        ];
        for ((g, s, n), len) in cases {
            let spec = SurfaceSpec::new(g, s, n).unwrap();
            let expected = if g == 1 {
                2 + 2 * n + 3 * s
            } else {
                4 * g - 3 + 2 * n + 3 * s
            };
            assert_eq!(expected as usize, len);
            assert_eq!(build_polygon(spec).word().len(), len);
        }
    }

    #[test]
    fn canonical_words() {
        let spec = SurfaceSpec::new(3, 1, 1).unwrap();
        assert_eq!(
            build_polygon(spec).to_string(),
            "a1 a2 a3 a2 a1 v1 v1^-1 v2 u1 v2^-1 a1 a2 a3^-1 a2^-1"
        );
        let rp2 = SurfaceSpec::new(1, 0, 0).unwrap();
        assert_eq!(build_polygon(rp2).to_string(), "a1 a1");
        let klein = SurfaceSpec::new(2, 0, 0).unwrap();
        assert_eq!(build_polygon(klein).to_string(), "a1 a2 a1 a1 a2^-1");
    }

    #[test]
    fn multiplicity_validation() {
        let spec = SurfaceSpec::new(3, 1, 1).unwrap();
        let canonical = build_polygon(spec);

        // Swapping the two middle blocks (and their v labels) is accepted.
        let mut word = canonical.word().to_vec();
        // canonical: ... a1 [v1 v1^-1] [v2 u1 v2^-1] a1 ...
        let swapped: Vec<(Label, i8)> = word[..5]
            .iter()
            .copied()
            .chain([
                (Label::V(2), 1),
                (Label::U(1), 1),
                (Label::V(2), -1),
                (Label::V(1), 1),
                (Label::V(1), -1),
            ])
            .chain(word[10..].iter().copied())
            .collect();
        assert!(PolygonModel::new(spec, swapped).is_ok());

        // Dropping a side breaks the multiset.
        word.pop();
        assert!(PolygonModel::new(spec, word).is_err());

        // A foreign label is rejected.
        let mut word = canonical.word().to_vec();
        word[5] = (Label::V(9), 1);
        assert!(PolygonModel::new(spec, word).is_err());

        // Signs other than +1/-1 are rejected.
        let mut word = canonical.word().to_vec();
        word[0] = (Label::A(1), 2);
        assert!(PolygonModel::new(spec, word).is_err());
    }
}
