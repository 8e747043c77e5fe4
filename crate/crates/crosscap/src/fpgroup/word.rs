//! Freely reduced words in a free group.

use std::fmt;

use crate::error::{Error, Result};

/// A generator name: an ASCII identifier such as `a1`, `y`, or `g12`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol(String);

impl GeneratorSymbol {
    /// Validates and wraps a generator name.
    ///
    /// Names start with a letter or underscore and continue with letters,
    /// digits, or underscores, so they can never collide with the `^-1`
    /// inverse suffix or with token separators.
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let valid = match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if !valid {
            return Err(Error::WordParse(format!("invalid generator name '{name}'")));
        }
        Ok(Self(name.to_string()))
    }

    /// The name as a string slice.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A freely reduced word: a sequence of `(generator, exponent)` letters with
/// exponents `+1` or `-1` and no adjacent canceling pair.
///
/// All constructors reduce, so two words are equal in the free group exactly
/// when they are `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<(GeneratorSymbol, i8)>,
}

impl FreeWord {
    /// The empty word.
    pub fn identity() -> Self {
        Self::default()
    }

    /// The one-letter word `g`.
    pub fn generator(g: GeneratorSymbol) -> Self {
        Self {
            letters: vec![(g, 1)],
        }
    }

    /// Builds a word from letters, freely reducing.
    ///
    /// # Panics
    /// Panics if an exponent is not `+1` or `-1`.
    pub fn from_letters(letters: impl IntoIterator<Item = (GeneratorSymbol, i8)>) -> Self {
        let mut stack: Vec<(GeneratorSymbol, i8)> = Vec::new();
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "letter exponent must be +1 or -1");
            match stack.last() {
                Some((top, f)) if *top == g && *f == -e => {
                    stack.pop();
                }
                _ => stack.push((g, e)),
            }
        }
        Self { letters: stack }
    }

    /// The letters of the word, in order.
    pub fn letters(&self) -> &[(GeneratorSymbol, i8)] {
        &self.letters
    }

    /// Word length after free reduction.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// The concatenation `self * other`, freely reduced.
    pub fn concat(&self, other: &Self) -> Self {
        Self::from_letters(
            self.letters
                .iter()
                .chain(other.letters.iter())
                .cloned(),
        )
    }

    /// The inverse word.
    pub fn inverse(&self) -> Self {
        Self {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    /// `self` raised to an integer power.
    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Net exponent of `g` in the word.
    pub fn exponent_sum(&self, g: &GeneratorSymbol) -> i64 {
        self.letters
            .iter()
            .filter(|(h, _)| h == g)
            .map(|(_, e)| i64::from(*e))
            .sum()
    }

    /// Number of letters (either sign) naming `g`.
    pub fn occurrences(&self, g: &GeneratorSymbol) -> usize {
        self.letters.iter().filter(|(h, _)| h == g).count()
    }

    /// Removes canceling prefix/suffix pairs: the shortest word conjugate to
    /// `self`.
    pub fn cyclically_reduce(&self) -> Self {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 {
            let (first, last) = (&letters[0], &letters[letters.len() - 1]);
            if first.0 == last.0 && first.1 == -last.1 {
                letters.pop();
                letters.remove(0);
            } else {
                break;
            }
        }
        Self { letters }
    }

    /// The rotation moving the letter at `start` to the front.
    pub fn rotate(&self, start: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let n = self.letters.len();
        let start = start % n;
        Self {
            letters: self.letters[start..]
                .iter()
                .chain(self.letters[..start].iter())
                .cloned()
                .collect(),
        }
    }

    /// A canonical representative of the word up to cyclic rotation and
    /// inversion: the least rotation (letters compared by name, then `+1`
    /// before `-1`) over both the cyclic reduction of `self` and its inverse.
    ///
    /// Two relators impose the same relation if and only if their canonical
    /// cyclic forms agree.
    pub fn canonical_cyclic(&self) -> Self {
        let reduced = self.cyclically_reduce();
        if reduced.is_identity() {
            return reduced;
        }
        let key = |w: &FreeWord| -> Vec<(String, u8)> {
            w.letters
                .iter()
                .map(|(g, e)| (g.as_str().to_string(), if *e == 1 { 0 } else { 1 }))
                .collect()
        };
        let mut best: Option<(Vec<(String, u8)>, FreeWord)> = None;
        for w in [&reduced, &reduced.inverse()] {
            for start in 0..w.len() {
                let rot = w.rotate(start);
                let k = key(&rot);
                if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                    best = Some((k, rot));
                }
            }
        }
        best.expect("nonempty word has a rotation").1
    }

    /// Replaces every occurrence of `g` by `replacement` (and `g^-1` by its
    /// inverse), freely reducing the result.
    pub fn substitute(&self, g: &GeneratorSymbol, replacement: &FreeWord) -> Self {
        let inv = replacement.inverse();
        let mut letters = Vec::new();
        for (h, e) in &self.letters {
            if h == g {
                let rep = if *e == 1 { replacement } else { &inv };
                letters.extend(rep.letters.iter().cloned());
            } else {
                letters.push((h.clone(), *e));
            }
        }
        Self::from_letters(letters)
    }

    /// Parses a whitespace-separated word such as `a1 a2^-1 y`.
    ///
    /// Each token is a generator name with an optional `^-1` suffix.  The
    /// empty string parses to the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.strip_suffix("^-1") {
                Some(name) => (name, -1),
                None => {
                    if token.contains('^') {
                        return Err(Error::WordParse(format!(
                            "token '{token}': only the ^-1 suffix is supported"
                        )));
                    }
                    (token, 1)
                }
            };
            letters.push((GeneratorSymbol::new(name)?, exp));
        }
        Ok(Self::from_letters(letters))
    }
}

impl fmt::Display for FreeWord {
    /// Inverse of [`FreeWord::parse`]: letters joined by single spaces, with
    /// `^-1` marking negative exponents.  The identity prints as the empty
    /// string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, e) in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> FreeWord {
        FreeWord::parse(text).unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        for text in ["", "a1", "a1 a2^-1 y", "x x x"] {
            assert_eq!(w(text).to_string(), text);
        }
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(FreeWord::parse("a^2").is_err());
        assert!(FreeWord::parse("a^1").is_err());
        assert!(FreeWord::parse("1a").is_err());
        assert!(FreeWord::parse("a-b").is_err());
    }

    #[test]
    fn construction_reduces() {
        assert!(w("a a^-1").is_identity());
        assert_eq!(w("a b b^-1 a"), w("a a"));
        assert_eq!(w("a b").concat(&w("b^-1 c")), w("a c"));
        assert!(w("a b c").concat(&w("c^-1 b^-1 a^-1")).is_identity());
    }

    #[test]
    fn inverse_and_pow() {
        assert_eq!(w("a b^-1").inverse(), w("b a^-1"));
        assert_eq!(w("a b").pow(2), w("a b a b"));
        assert_eq!(w("a b").pow(-1), w("b^-1 a^-1"));
        assert!(w("a b").pow(0).is_identity());
    }

    #[test]
    fn exponent_sums() {
        let word = w("a b a b^-1 a^-1 b^-1");
        let a = GeneratorSymbol::new("a").unwrap();
        let b = GeneratorSymbol::new("b").unwrap();
        assert_eq!(word.exponent_sum(&a), 1);
        assert_eq!(word.exponent_sum(&b), -1);
        assert_eq!(word.occurrences(&a), 3);
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("a b c b^-1 a^-1").cyclically_reduce(), w("c"));
        assert_eq!(w("a b").cyclically_reduce(), w("a b"));
        assert!(w("a a^-1").cyclically_reduce().is_identity());
    }

    #[test]
    fn canonical_cyclic_identifies_conjugates_and_inverses() {
        // All of these impose the same relation as a b a b^-1 a^-1 b^-1.
        let base = w("a b a b^-1 a^-1 b^-1").canonical_cyclic();
        let variants = [
            w("b a b^-1 a^-1 b^-1 a"),             // rotation
            w("b a b a^-1 b^-1 a^-1"),             // inverse
            w("x a b a b^-1 a^-1 b^-1 x^-1"),      // conjugate
        ];
        for v in variants {
            assert_eq!(v.canonical_cyclic(), base);
        }
        assert_ne!(w("a b a^-1 b^-1").canonical_cyclic(), base);
    }

    #[test]
    fn canonical_cyclic_prefers_positive_exponents() {
        // Rotations of the commutator: the canonical form starts with the
        // lexicographically least name with exponent +1.
        let c = w("b^-1 a^-1 b a").canonical_cyclic();
        assert_eq!(c, w("a b a^-1 b^-1"));
    }

    #[test]
    fn substitution() {
        let word = w("g1 g3 g1^-1");
        let g1 = GeneratorSymbol::new("g1").unwrap();
        assert_eq!(word.substitute(&g1, &w("g3^-1")), w("g3^-1 g3 g3"));
        assert_eq!(word.substitute(&g1, &FreeWord::identity()), w("g3"));
    }
}
