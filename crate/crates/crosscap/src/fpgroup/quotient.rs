//! Homomorphisms onto finite cyclic groups and coset transversals.
//!
//! A map `phi` from a presented group `G` onto `Z/m` singles out the kernel
//! subgroup of index `m`.  To rewrite that subgroup we need a *Schreier
//! transversal*: one coset representative word per residue, closed under
//! prefixes.  Both objects are validated eagerly so that the rewriting
//! machinery can assume they are coherent.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fpgroup::presentation::Presentation;
use crate::fpgroup::word::{FreeWord, GeneratorSymbol};

/// A homomorphism from a presented group to the cyclic group `Z/m`, given by
/// the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuotientHom {
    modulus: u32,
    images: BTreeMap<GeneratorSymbol, u32>,
}

impl FiniteQuotientHom {
    /// Builds the map; images are reduced mod `m`.
    ///
    /// # Errors
    /// Rejects `modulus == 0`.
    pub fn new(
        modulus: u32,
        images: impl IntoIterator<Item = (GeneratorSymbol, u32)>,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Invalid("modulus must be at least 1".into()));
        }
        let images = images
            .into_iter()
            .map(|(g, v)| (g, v % modulus))
            .collect();
        Ok(Self { modulus, images })
    }

    /// The modulus `m`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Image of a single generator, if assigned.
    pub fn image(&self, g: &GeneratorSymbol) -> Option<u32> {
        self.images.get(g).copied()
    }

    /// Image of a word: the exponent-weighted sum of generator images.
    ///
    /// # Errors
    /// Returns [`Error::UnknownGenerator`] if a letter has no assigned image.
    pub fn apply(&self, w: &FreeWord) -> Result<u32> {
        let m = i64::from(self.modulus);
        let mut acc = 0i64;
        for (g, e) in w.letters() {
            let img = self
                .image(g)
                .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            acc = (acc + i64::from(*e) * i64::from(img)).rem_euclid(m);
        }
        Ok(acc as u32)
    }

    /// Checks that the assignment kills every relator of `p`, i.e. that it
    /// really defines a homomorphism `G -> Z/m`.
    pub fn check_hom(&self, p: &Presentation) -> Result<()> {
        for g in p.alphabet() {
            if self.image(g).is_none() {
                return Err(Error::UnknownGenerator(g.to_string()));
            }
        }
        for r in p.relators() {
            let v = self.apply(r)?;
            if v != 0 {
                return Err(Error::NotAHomomorphism {
                    relator: r.to_string(),
                    image: i64::from(v),
                    modulus: self.modulus,
                });
            }
        }
        Ok(())
    }
}

/// A Schreier transversal for the kernel of a [`FiniteQuotientHom`]: one
/// representative word per residue class, indexed by residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    reps: Vec<FreeWord>,
}

impl Transversal {
    /// Validates and wraps a list of representatives, indexed by residue.
    ///
    /// Requirements: exactly `m` words; the class-0 representative is the
    /// empty word; `phi(rep_c) = c` for every `c`; and the set is closed
    /// under prefixes (the Schreier condition), which is what makes the
    /// rewriting generators below a basis-like generating set.
    pub fn new(reps: Vec<FreeWord>, phi: &FiniteQuotientHom) -> Result<Self> {
        let m = phi.modulus() as usize;
        if reps.len() != m {
            return Err(Error::TransversalInvalid(format!(
                "expected {m} representatives, got {}",
                reps.len()
            )));
        }
        if !reps[0].is_identity() {
            return Err(Error::TransversalInvalid(
                "the class-0 representative must be the empty word".into(),
            ));
        }
        for (c, rep) in reps.iter().enumerate() {
            let v = phi.apply(rep)?;
            if v as usize != c {
                return Err(Error::TransversalInvalid(format!(
                    "representative '{rep}' of class {c} maps to {v}"
                )));
            }
        }
        for rep in &reps {
            let letters = rep.letters();
            for cut in 0..letters.len() {
                let prefix = FreeWord::from_letters(letters[..cut].iter().cloned());
                if !reps.contains(&prefix) {
                    return Err(Error::TransversalInvalid(format!(
                        "prefix '{prefix}' of '{rep}' is not a representative"
                    )));
                }
            }
        }
        Ok(Self { reps })
    }

    /// The default transversal: powers of the first generator whose image is
    /// a unit mod `m`, so class `c` is represented by `t^k` with
    /// `k * phi(t) = c (mod m)` and `0 <= k < m`.
    ///
    /// # Errors
    /// Fails if no single generator generates `Z/m`; supply an explicit
    /// transversal in that case.
    pub fn for_kernel(p: &Presentation, phi: &FiniteQuotientHom) -> Result<Self> {
        let m = phi.modulus();
        if m == 1 {
            // The kernel is the whole group.
            return Self::new(vec![FreeWord::identity()], phi);
        }
        let t = p
            .alphabet()
            .iter()
            .find(|g| {
                phi.image(g)
                    .is_some_and(|v| num_integer::gcd(v, m) == 1)
            })
            .ok_or_else(|| {
                Error::TransversalUnavailable(format!(
                    "no generator maps to a unit mod {m}; pass an explicit transversal"
                ))
            })?;
        let img = phi.image(t).expect("image checked above");
        let mut reps = vec![FreeWord::identity(); m as usize];
        let mut class = 0u32;
        let mut word = FreeWord::identity();
        // Walk t^0, t^1, ..., t^(m-1); the images cycle through all residues.
        for _ in 0..m {
            reps[class as usize] = word.clone();
            word = word.concat(&FreeWord::generator(t.clone()));
            class = (class + img) % m;
        }
        Self::new(reps, phi)
    }

    /// The representative of residue class `c`.
    pub fn rep(&self, c: u32) -> &FreeWord {
        &self.reps[c as usize]
    }

    /// Number of classes (the index of the subgroup).
    pub fn index(&self) -> usize {
        self.reps.len()
    }
}
