//! Abelianization of the twist subgroup.
//!
//! For genus at least 3, the abelianized twist subgroup of `N_{g,s}^n` is
//! generated by remarkably few classes.  Conjugate elements are equal in
//! the abelianization, and twists about nonseparating circles of the same
//! topological type are conjugate by (products of) twists, so whole
//! families of generators collapse: every chain twist `[t_a_i]` equals
//! `[t_a1]`, the companions `b_i` and `c_i` fold into the same class or
//! its negative, and the separator twists `e_i`, `f_i` follow suit.  What
//! survives is
//!
//! - `A = [t_a1]` — the common class of all nonseparating chain twists,
//! - `B = [t_b]` — one extra companion class, present only for even genus
//!   (the curve `b_{r+1}` crossing all the crosscaps),
//! - `XI = [t_xi]` — the twist about the separating curve around the
//!   crosscaps,
//! - `U_j = [t_u_j]` — one class per boundary circle.
//!
//! The relations among these symbols depend only on `g` and `s`, never on
//! the number of marked points.  [`build_ledger`] writes them down
//! case by case, [`compute_h1`] feeds the resulting relation matrix to the
//! Smith normal form, and [`explain`] renders the whole derivation.  The
//! outcome, for every `g >= 3`:
//!
//! ```text
//! g = 3, s = 0:   Z/12
//! g = 3, s >= 1:  Z/24 x (Z/2)^{s-1}
//! g = 4, s = 0:   Z x Z/2
//! g = 4, s >= 1:  Z x (Z/2)^s
//! g = 5, 6:       Z/2
//! g >= 7:         0
//! ```

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{invariant_factors, AbelianInvariants, IntegerMatrix};
use crate::surface::SurfaceSpec;

/// Generator of the abelianized twist subgroup after the conjugacy
/// reductions described in the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum H1Symbol {
    /// Class of the chain twist `t_a1` (and of every twist conjugate to it).
    A,
    /// Class of the extra companion twist, even genus only.
    B,
    /// Class of the separating twist `t_xi`.
    Xi,
    /// Class of the boundary twist `t_u_j`.
    U(u32),
}

/// One linear relation among the ledger symbols, with a one-line
/// geometric justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// Coefficients over the ledger's symbols, in symbol order.
    pub coeffs: Vec<i64>,
    /// Why the relation holds.
    pub source: &'static str,
}

/// The symbols and relations presenting the abelianized twist subgroup.
#[derive(Debug, Clone)]
pub struct RelationLedger {
    spec: SurfaceSpec,
    symbols: Vec<H1Symbol>,
    names: Vec<String>,
    relations: Vec<Relation>,
}

impl RelationLedger {
    /// The surface this ledger describes.
    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    /// The surviving generators, in order: `A`, `B` (even genus), `XI`,
    /// then the boundary classes.
    pub fn symbols(&self) -> &[H1Symbol] {
        &self.symbols
    }

    /// Rendered names of the symbols, e.g. `[t_b3]` for the extra
    /// companion class on a genus-6 surface.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The relations, in the fixed case-split order.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The relations as an integer matrix, one row per relation.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let rows = self.relations.len();
        let cols = self.symbols.len();
        let data = self
            .relations
            .iter()
            .flat_map(|r| r.coeffs.iter().map(|&c| BigInt::from(c)))
            .collect();
        IntegerMatrix::new(rows, cols, data)
    }

    /// Invariant factors of the group the ledger presents.
    pub fn invariants(&self) -> AbelianInvariants {
        invariant_factors(&self.relation_matrix(), self.symbols.len())
            .expect("ledger matrix width equals its symbol count")
    }

    fn render_relation(&self, relation: &Relation) -> String {
        let mut out = String::new();
        for (coeff, name) in relation.coeffs.iter().zip(&self.names) {
            if *coeff == 0 {
                continue;
            }
            if out.is_empty() {
                if *coeff < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *coeff < 0 { " - " } else { " + " });
            }
            if coeff.abs() != 1 {
                out.push_str(&coeff.abs().to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(" = 0");
        out
    }
}

impl fmt::Display for RelationLedger {
    /// Header, one line per relation with its justification, and the
    /// resulting invariants.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "H1 ledger for {}", self.spec)?;
        writeln!(f, "generators: {}", self.names.join(" "))?;
        for relation in &self.relations {
            writeln!(f, "{}    # {}", self.render_relation(relation), relation.source)?;
        }
        write!(f, "H1 = {}", self.invariants())
    }
}

/// Builds the relation ledger for a surface of genus at least 3.
///
/// The relations, in order, each guarded by its regime (`r = (g-1)/2`
/// rounded down):
///
/// 1. `g >= 7`: `A = 0`.
/// 2. even `g >= 6`: `B = 0`.
/// 3. `g >= 5`: every `U_j = 0`.
/// 4. `g >= 4`: `XI = 0`.
/// 5. `g = 4`, `s >= 1`: `U_1 + ... + U_s = 0`.
/// 6. `g = 3`: `12 A = XI`, and for `s >= 1` also `XI = U_1 + ... + U_s`.
/// 7. `g >= 4`: `2 A = 0`.
/// 8. every `g`: `2 U_j = 0`.
/// 9. `g = 3`, `s = 0`: `12 A = 0`.
/// 10. `g = 3`: `24 A = 0`.
///
/// # Errors
/// Fails for genus below 3.
pub fn build_ledger(spec: &SurfaceSpec) -> Result<RelationLedger> {
    let g = spec.genus;
    let s = spec.boundary;
    if g < 3 {
        return Err(Error::SurfaceParams(format!(
            "the twist-subgroup ledger requires genus at least 3, got {g}"
        )));
    }

    let mut symbols = vec![H1Symbol::A];
    let mut names = vec!["[t_a1]".to_string()];
    if g % 2 == 0 {
        symbols.push(H1Symbol::B);
        names.push(format!("[t_b{}]", (g - 1) / 2 + 1));
    }
    symbols.push(H1Symbol::Xi);
    names.push("[t_xi]".to_string());
    for j in 1..=s {
        symbols.push(H1Symbol::U(j));
        names.push(format!("[t_u{j}]"));
    }

    let index_of = |sym: H1Symbol| symbols.iter().position(|&x| x == sym).unwrap();
    let row = |terms: &[(H1Symbol, i64)]| -> Vec<i64> {
        let mut coeffs = vec![0i64; symbols.len()];
        for &(sym, c) in terms {
            coeffs[index_of(sym)] += c;
        }
        coeffs
    };
    let all_u = |sign: i64| -> Vec<(H1Symbol, i64)> {
        (1..=s).map(|j| (H1Symbol::U(j), sign)).collect()
    };

    let mut relations = Vec::new();
    let mut push = |coeffs: Vec<i64>, source: &'static str| {
        relations.push(Relation { coeffs, source });
    };

    if g >= 7 {
        push(
            row(&[(H1Symbol::A, 1)]),
            "genus >= 7: a lantern of nonseparating circles kills the chain twist class",
        );
    }
    if g % 2 == 0 && g >= 6 {
        push(
            row(&[(H1Symbol::B, 1)]),
            "even genus >= 6: the extra companion twist class vanishes",
        );
    }
    if g >= 5 {
        for j in 1..=s {
            push(
                row(&[(H1Symbol::U(j), 1)]),
                "genus >= 5: boundary twists are null-homologous",
            );
        }
    }
    if g >= 4 {
        push(
            row(&[(H1Symbol::Xi, 1)]),
            "genus >= 4: the separating twist equals the square of the crosscap slide \
             and vanishes",
        );
    }
    if g == 4 && s >= 1 {
        push(
            row(&all_u(1)),
            "genus 4: the boundary twist classes sum to zero",
        );
    }
    if g == 3 {
        push(
            row(&[(H1Symbol::A, 12), (H1Symbol::Xi, -1)]),
            "genus 3: the star relation (t_a1 t_a2)^6 = t_xi abelianizes to 12[t_a1] = [t_xi]",
        );
        if s >= 1 {
            let mut terms = vec![(H1Symbol::Xi, 1)];
            terms.extend(all_u(-1));
            push(
                row(&terms),
                "genus 3: the separating twist splits as the sum of the boundary twists",
            );
        }
    }
    if g >= 4 {
        push(
            row(&[(H1Symbol::A, 2)]),
            "genus >= 4: the chain twist is conjugate to its inverse",
        );
    }
    for j in 1..=s {
        push(
            row(&[(H1Symbol::U(j), 2)]),
            "squares of boundary twists are null-homologous",
        );
    }
    if g == 3 && s == 0 {
        push(
            row(&[(H1Symbol::A, 12)]),
            "genus 3, closed: the star curve bounds, so 12[t_a1] = 0",
        );
    }
    if g == 3 {
        push(
            row(&[(H1Symbol::A, 24)]),
            "genus 3: doubling the star relation gives 24[t_a1] = 0",
        );
    }

    Ok(RelationLedger {
        spec: *spec,
        symbols,
        names,
        relations,
    })
}

/// First homology of the twist subgroup of `N_{g,s}^n`, for `g >= 3`.
///
/// The answer does not depend on the number of marked points: no ledger
/// relation mentions them.
///
/// # Errors
/// Fails for genus below 3.
pub fn compute_h1(spec: &SurfaceSpec) -> Result<AbelianInvariants> {
    Ok(build_ledger(spec)?.invariants())
}

/// Renders the full derivation: generators, each relation with its
/// justification, and the resulting group.
///
/// # Errors
/// Fails for genus below 3.
pub fn explain(spec: &SurfaceSpec) -> Result<String> {
    Ok(build_ledger(spec)?.to_string())
}
