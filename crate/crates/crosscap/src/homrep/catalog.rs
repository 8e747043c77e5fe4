//! Generating sets of the twist subgroup and its index in the full group.
//!
//! The twist subgroup of the mapping class group of `N_{g,s}^n` — the
//! subgroup generated by all Dehn twists about two-sided circles — is
//! generated by twists about an explicit finite list of curves whenever
//! `g >= 3`.  The list depends on the parity of the genus:
//!
//! - the common core `C` consists of the chain curves `a_2, ..., a_{g-1}`,
//!   the companions `b_1, ..., b_r` (with one extra `b_{r+1}` for even
//!   genus, where `r = (g-1)/2` rounded down), `c_1, ..., c_r`, the
//!   separators `e_1, ..., e_{n+s-1}`, and the boundary curves
//!   `u_1, ..., u_s`;
//! - genus 3 adds `f_1, ..., f_{n+s-1}` and `xi`;
//! - odd genus at least 5 adds `psi` and `xi`;
//! - even genus adds `lambda`, `psi`, and `xi`.
//!
//! The twist subgroup has finite index `2^{n+1} * n!` in the full mapping
//! class group, factored as `n!` (permutations of the marked points) times
//! `2^n` (local orientation reversals at the marked points) times `2` (the
//! determinant of the action on homology).  [`subgroup_indices`] returns
//! that factorization exactly.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::homrep::GeneratorName;
use crate::surface::SurfaceSpec;

/// Returns the curves whose twists generate the twist subgroup, in family
/// order: `a`'s, `b`'s, `c`'s, `e`'s, `u`'s, then the genus-dependent
/// extras.
///
/// # Errors
/// Fails for genus below 3, where the twist subgroup needs a different
/// analysis.
pub fn twist_generators(spec: &SurfaceSpec) -> Result<Vec<GeneratorName>> {
    let g = spec.genus;
    if g < 3 {
        return Err(Error::SurfaceParams(format!(
            "twist-subgroup catalogs require genus at least 3, got {g}"
        )));
    }
    let r = (g - 1) / 2;
    // Number of e- (and for genus 3, f-) curves: n + s - 1, or none when
    // there is at most one marked point or boundary circle in total.
    let separators = (spec.punctures + spec.boundary).saturating_sub(1);

    let mut out = Vec::new();
    out.extend((2..g).map(GeneratorName::A));
    let b_top = if g % 2 == 0 { r + 1 } else { r };
    out.extend((1..=b_top).map(GeneratorName::B));
    out.extend((1..=r).map(GeneratorName::C));
    out.extend((1..=separators).map(GeneratorName::E));
    out.extend((1..=spec.boundary).map(GeneratorName::U));
    if g == 3 {
        out.extend((1..=separators).map(GeneratorName::F));
        out.push(GeneratorName::Xi);
    } else if g % 2 == 1 {
        out.push(GeneratorName::Psi);
        out.push(GeneratorName::Xi);
    } else {
        out.push(GeneratorName::Lambda);
        out.push(GeneratorName::Psi);
        out.push(GeneratorName::Xi);
    }
    Ok(out)
}

/// The index of the twist subgroup in the mapping class group, as the
/// product `n! * 2^n * 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFactors {
    /// `n!`: the marked points can be permuted arbitrarily.
    pub permutations: BigUint,
    /// `2^n`: each marked point admits a local orientation reversal.
    pub local_reversals: BigUint,
    /// `2`: the determinant of the homology action distinguishes twists
    /// from the crosscap slide.
    pub determinant: BigUint,
}

impl IndexFactors {
    /// The full index `2^{n+1} * n!`.
    pub fn total(&self) -> BigUint {
        &self.permutations * &self.local_reversals * &self.determinant
    }
}

impl fmt::Display for IndexFactors {
    /// Renders as e.g. `n!=2 2^n=4 2=2 total=16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n!={} 2^n={} 2={} total={}",
            self.permutations,
            self.local_reversals,
            self.determinant,
            self.total()
        )
    }
}

/// Computes the factored index of the twist subgroup for `n` marked points.
///
/// # Errors
/// Fails for genus below 3.
pub fn subgroup_indices(spec: &SurfaceSpec) -> Result<IndexFactors> {
    if spec.genus < 3 {
        return Err(Error::SurfaceParams(format!(
            "the index formula requires genus at least 3, got {}",
            spec.genus
        )));
    }
    let n = spec.punctures;
    let mut permutations = BigUint::one();
    for k in 2..=u64::from(n) {
        permutations *= k;
    }
    Ok(IndexFactors {
        permutations,
        local_reversals: BigUint::one() << n,
        determinant: BigUint::from(2u32),
    })
}
