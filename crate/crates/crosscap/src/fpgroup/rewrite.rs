//! Subgroup presentations by coset rewriting, and presentation cleanup.
//!
//! Given a presented group `G`, a homomorphism `phi: G -> Z/m`, and a
//! Schreier transversal `U = {rep_0, ..., rep_{m-1}}` for the kernel, the
//! kernel is generated by the *rewriting generators*
//!
//! ```text
//! s(c, x) = rep_c · x · rep_{c + phi(x)}^{-1}
//! ```
//!
//! over all classes `c` and alphabet letters `x`, omitting the pairs where
//! `rep_c · x` freely equals a representative (those `s(c, x)` are trivial).
//! A presentation of the kernel on these generators has one relator for each
//! pair (original relator, starting class): scan the relator left to right,
//! tracking the class, and emit the rewriting generator of each letter's
//! pair.  This is exact — no quotients are taken and no information is lost.
//!
//! The raw output is redundant, so [`tietze_simplify`] repeatedly deletes
//! duplicate or empty relators and eliminates generators that some relator
//! mentions exactly once.  Both transformations preserve the presented group
//! (and in particular its abelianization).

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::fpgroup::presentation::Presentation;
use crate::fpgroup::quotient::{FiniteQuotientHom, Transversal};
use crate::fpgroup::word::{FreeWord, GeneratorSymbol};

/// One rewriting generator of the kernel subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierGenerator {
    /// Fresh name for the generator in the subgroup presentation.
    pub symbol: GeneratorSymbol,
    /// The residue class `c` of the defining pair.
    pub class: u32,
    /// The alphabet letter `x` of the defining pair.
    pub letter: GeneratorSymbol,
    /// The value `rep_c · x · rep_{c + phi(x)}^{-1}` as a word in the
    /// original generators.
    pub word: FreeWord,
}

/// A rewritten subgroup: its presentation plus the dictionary back to words
/// in the original group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupPresentation {
    /// Presentation of the kernel on the fresh generator symbols.
    pub presentation: Presentation,
    /// The rewriting generators, in enumeration order.
    pub generators: Vec<SchreierGenerator>,
}

/// Enumerates the rewriting generators of the kernel of `phi`.
///
/// Pairs are visited class-major (class `0` first), then in alphabet order.
/// Fresh names `g1, g2, ...` are assigned in that order, skipping any name
/// already present in the alphabet.
pub fn schreier_generators(
    p: &Presentation,
    phi: &FiniteQuotientHom,
    transversal: &Transversal,
) -> Result<Vec<SchreierGenerator>> {
    phi.check_hom(p)?;
    let used: BTreeSet<&str> = p.alphabet().iter().map(GeneratorSymbol::as_str).collect();
    let mut counter = 0u32;
    let mut fresh = || loop {
        counter += 1;
        let name = format!("g{counter}");
        if !used.contains(name.as_str()) {
            return GeneratorSymbol::new(&name).expect("generated name is valid");
        }
    };

    let m = phi.modulus();
    let mut gens = Vec::new();
    for class in 0..m {
        for letter in p.alphabet() {
            let img = phi.image(letter).expect("check_hom verified coverage");
            let target = (class + img) % m;
            let step = transversal
                .rep(class)
                .concat(&FreeWord::generator(letter.clone()));
            if step == *transversal.rep(target) {
                continue; // trivial pair: rep_c · x is itself a representative
            }
            let word = step.concat(&transversal.rep(target).inverse());
            gens.push(SchreierGenerator {
                symbol: fresh(),
                class,
                letter: letter.clone(),
                word,
            });
        }
    }
    Ok(gens)
}

/// Symbol table from pairs `(class, letter)` to fresh symbols; trivial pairs
/// map to `None`.
fn pair_table<'a>(
    p: &Presentation,
    phi: &FiniteQuotientHom,
    gens: &'a [SchreierGenerator],
) -> Result<BTreeMap<(u32, GeneratorSymbol), Option<&'a GeneratorSymbol>>> {
    let mut table = BTreeMap::new();
    for class in 0..phi.modulus() {
        for letter in p.alphabet() {
            table.insert((class, letter.clone()), None);
        }
    }
    for g in gens {
        let slot = table
            .get_mut(&(g.class, g.letter.clone()))
            .ok_or_else(|| {
                Error::Invalid(format!(
                    "generator {} refers to pair ({}, {}) outside this rewriting",
                    g.symbol, g.class, g.letter
                ))
            })?;
        *slot = Some(&g.symbol);
    }
    Ok(table)
}

/// Rewrites `word`, scanned starting from residue class `start`, into the
/// fresh generators.  The table lookups drive the scan:
/// a positive letter `x` at class `c` emits `s(c, x)` and advances the class;
/// a negative letter first steps the class back, then emits the inverse.
fn rewrite_from(
    word: &FreeWord,
    start: u32,
    phi: &FiniteQuotientHom,
    table: &BTreeMap<(u32, GeneratorSymbol), Option<&GeneratorSymbol>>,
) -> Result<FreeWord> {
    let m = phi.modulus();
    let mut class = start;
    let mut letters = Vec::new();
    for (x, e) in word.letters() {
        let img = phi
            .image(x)
            .ok_or_else(|| Error::UnknownGenerator(x.to_string()))?;
        let pair_class = if *e == 1 {
            let here = class;
            class = (class + img) % m;
            here
        } else {
            class = (class + m - img % m) % m;
            class
        };
        let slot = table
            .get(&(pair_class, x.clone()))
            .ok_or_else(|| Error::UnknownGenerator(x.to_string()))?;
        if let Some(symbol) = slot {
            letters.push(((*symbol).clone(), *e));
        }
    }
    Ok(FreeWord::from_letters(letters))
}

/// Rewrites a kernel element as a word in the rewriting generators.
///
/// # Errors
/// Fails if `word` is not in the kernel of `phi`, mentions letters outside
/// the presentation, or if `gens` does not come from this rewriting.
pub fn rewrite_word(
    word: &FreeWord,
    p: &Presentation,
    phi: &FiniteQuotientHom,
    gens: &[SchreierGenerator],
) -> Result<FreeWord> {
    let v = phi.apply(word)?;
    if v != 0 {
        return Err(Error::Invalid(format!(
            "word '{word}' maps to {v} mod {}, so it is not in the kernel",
            phi.modulus()
        )));
    }
    let table = pair_table(p, phi, gens)?;
    rewrite_from(word, 0, phi, &table)
}

/// Presents the kernel of `phi` on the rewriting generators.
///
/// There is one relator per (original relator, starting class) pair, emitted
/// relator-major.  The output is exact but redundant; feed it through
/// [`tietze_simplify`] for a readable presentation.
pub fn reidemeister_schreier(
    p: &Presentation,
    phi: &FiniteQuotientHom,
    transversal: &Transversal,
) -> Result<SubgroupPresentation> {
    let gens = schreier_generators(p, phi, transversal)?;
    let table = pair_table(p, phi, &gens)?;
    let alphabet: Vec<GeneratorSymbol> = gens.iter().map(|g| g.symbol.clone()).collect();
    let mut relators = Vec::new();
    for r in p.relators() {
        for class in 0..phi.modulus() {
            relators.push(rewrite_from(r, class, phi, &table)?);
        }
    }
    Ok(SubgroupPresentation {
        presentation: Presentation::new(alphabet, relators)?,
        generators: gens,
    })
}

/// Simplifies a presentation without changing the presented group.
///
/// Repeats until stable:
/// 1. cyclically reduce every relator and drop empty ones,
/// 2. drop relators equal to an earlier one up to rotation and inversion,
/// 3. pick the first generator that some relator mentions exactly once
///    (shortest such relator wins) and eliminate it by substituting the word
///    the relator solves it to.
///
/// Relators in the result are in canonical cyclic form: the least rotation
/// of the relator or its inverse.
pub fn tietze_simplify(p: &Presentation) -> Presentation {
    let mut alphabet = p.alphabet().to_vec();
    let mut relators: Vec<FreeWord> = p.relators().to_vec();
    loop {
        relators = relators
            .iter()
            .map(FreeWord::cyclically_reduce)
            .filter(|r| !r.is_identity())
            .collect();
        let mut seen = HashSet::new();
        relators.retain(|r| seen.insert(r.canonical_cyclic()));

        // Find an eliminable generator: earliest in the alphabet, using its
        // shortest defining relator (earliest on ties).
        let mut choice: Option<(usize, usize)> = None;
        'search: for (gi, g) in alphabet.iter().enumerate() {
            let mut best: Option<usize> = None;
            for (ri, r) in relators.iter().enumerate() {
                if r.occurrences(g) == 1
                    && best.is_none_or(|b: usize| r.len() < relators[b].len())
                {
                    best = Some(ri);
                }
            }
            if let Some(ri) = best {
                choice = Some((gi, ri));
                break 'search;
            }
        }
        let Some((gi, ri)) = choice else { break };

        let g = alphabet.remove(gi);
        let r = relators.remove(ri);
        let pos = r
            .letters()
            .iter()
            .position(|(h, _)| *h == g)
            .expect("relator contains the generator");
        let rot = r.rotate(pos);
        let e = rot.letters()[0].1;
        let rest = FreeWord::from_letters(rot.letters()[1..].iter().cloned());
        // rot reads g·w or g^-1·w, so g equals w^-1 or w respectively.
        let replacement = if e == 1 { rest.inverse() } else { rest };
        for rel in &mut relators {
            *rel = rel.substitute(&g, &replacement);
        }
    }

    let mut seen = HashSet::new();
    let canonical: Vec<FreeWord> = relators
        .iter()
        .map(FreeWord::canonical_cyclic)
        .filter(|r| seen.insert(r.clone()))
        .collect();
    Presentation::new(alphabet, canonical).expect("simplification keeps the alphabet consistent")
}
