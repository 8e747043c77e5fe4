//! Smith normal form, exact determinants, and abelian invariants.
//!
//! The Smith normal form of an integer matrix `A` is a diagonal matrix
//! `S = U * A * V` with unimodular `U`, `V`, non-negative diagonal entries,
//! and each diagonal entry dividing the next.  The nonzero entries `>= 2`
//! are the invariant factors of the cokernel, which is how every homology
//! and abelianization computation in this crate bottoms out:
//!
//! ```text
//! Z^cols / rowspace(A)  ≅  Z^(cols - rank)  ⊕  Z/d_1 ⊕ ... ⊕ Z/d_k
//! ```
//!
//! The reduction repeatedly pivots on a minimal-magnitude entry of the
//! trailing block and reduces its row and column by centered division, so a
//! leftover remainder at least halves the next pivot; the divisibility chain
//! is restored by folding an offending row into the pivot row.  Re-selecting
//! the pivot after every pass is essential: it keeps quotients small and
//! avoids the exponential entry growth of naive elimination.  Every
//! elementary operation is mirrored into `U` or `V`, so the certificates are
//! exact by construction.
//!
//! Determinants use the Bareiss fraction-free algorithm: all intermediate
//! divisions are exact, so nothing ever leaves the integers.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::IntegerMatrix;

/// A Smith normal form together with its unimodular certificates.
///
/// The invariant `u * a * v == s` holds for the input matrix `a`, with
/// `|det u| = |det v| = 1`, `s` diagonal with non-negative entries, and each
/// diagonal entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// The diagonal form.
    pub s: IntegerMatrix,
    /// Left certificate (`rows x rows`, unimodular).
    pub u: IntegerMatrix,
    /// Right certificate (`cols x cols`, unimodular).
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries; equals the rank of the input.
    pub fn rank(&self) -> usize {
        self.s
            .diagonal()
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }
}

/// Computes the Smith normal form `S = U * A * V` of `a`.
///
/// Works for any shape, including empty and zero matrices.  The diagonal of
/// `S` is non-negative and forms a divisibility chain `d_1 | d_2 | ...`.
pub fn snf(a: &IntegerMatrix) -> SmithForm {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    let mut t = 0;
    'step: while t < rows.min(cols) {
        // Clear row t and column t.  Each pass pivots on a globally minimal
        // nonzero entry of the trailing block and reduces its row and column
        // by centered division, leaving remainders of at most half the pivot.
        // A pass that leaves any remainder therefore at least halves the next
        // pivot, so the loop ends after O(log |pivot|) passes; re-selecting
        // the pivot every pass is what keeps the quotients — and with them
        // the rank-one fill each reduction causes — small.
        loop {
            let Some((pi, pj)) = min_nonzero(&s, t) else {
                break 'step; // trailing block is zero: done
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut dirty = false;
            for i in t + 1..rows {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let q = -centered_quotient(s.at(i, t), s.at(t, t));
                if !q.is_zero() {
                    s.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
                dirty |= !s.at(i, t).is_zero();
            }
            for j in t + 1..cols {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let q = -centered_quotient(s.at(t, j), s.at(t, t));
                if !q.is_zero() {
                    s.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
                dirty |= !s.at(t, j).is_zero();
            }
            if !dirty {
                break; // both passes divided exactly: row and column are clear
            }
        }

        // Divisibility: the pivot must divide every entry of the trailing
        // block.  If not, fold the offending row into row t; re-clearing
        // leaves a remainder below half the pivot, so this terminates.
        let pivot = s.at(t, t).clone();
        let offender = (t + 1..rows)
            .find(|&i| (t + 1..cols).any(|j| !(s.at(i, j) % &pivot).is_zero()));
        if let Some(i) = offender {
            let one = BigInt::one();
            s.add_row_multiple(t, i, &one);
            u.add_row_multiple(t, i, &one);
            continue; // retry the same pivot slot
        }
        t += 1;
    }

    // Sign normalization: negating a row is unimodular.
    for i in 0..rows.min(cols) {
        if s.at(i, i).sign() == Sign::Minus {
            s.negate_row(i);
            u.negate_row(i);
        }
    }

    SmithForm { s, u, v }
}

/// Locates a nonzero entry of minimal absolute value in `m[t.., t..]`.
fn min_nonzero(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let x = m.at(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.at(bi, bj).magnitude() <= x.magnitude() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Quotient of `a` by `p` with the remainder centered in `[-|p|/2, |p|/2]`.
fn centered_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(p);
    // `div_mod_floor` leaves `r` with the sign of `p` and `|r| < |p|`;
    // stepping the quotient once re-centers any remainder past the midpoint.
    if r.magnitude() * 2u32 > *p.magnitude() {
        q + 1
    } else {
        q
    }
}

/// Computes the determinant by Bareiss fraction-free elimination.
///
/// All intermediate divisions are exact, so the computation stays in the
/// integers with polynomially-bounded entry sizes.  The determinant of the
/// empty `0 x 0` matrix is 1.
///
/// # Errors
/// Returns [`Error::NotSquare`] for non-square input.
pub fn det(a: &IntegerMatrix) -> Result<BigInt> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                return Ok(BigInt::zero()); // whole column is zero: singular
            };
            m.swap_rows(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                *m.at_mut(i, j) = val;
            }
        }
        prev = m.at(k, k).clone();
    }
    let d = m.at(n - 1, n - 1).clone();
    Ok(if negate { -d } else { d })
}

/// Inverts a matrix with determinant `+-1`, staying in the integers.
///
/// From `U * M * V = I` it follows that `M^-1 = V * U`.
///
/// # Errors
/// Returns [`Error::NotSquare`] for non-square input and a generic error if
/// the matrix is not unimodular.
pub fn unimodular_inverse(m: &IntegerMatrix) -> Result<IntegerMatrix> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let form = snf(m);
    if form.s != IntegerMatrix::identity(m.rows()) {
        return Err(Error::Invalid(
            "matrix is not unimodular, so it has no integer inverse".into(),
        ));
    }
    Ok(&form.v * &form.u)
}

/// The isomorphism type of a finitely generated abelian group.
///
/// Stored as a free rank plus invariant factors `d_1 | d_2 | ... | d_k` with
/// every `d_i >= 2`, kept in ascending (divisibility) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianInvariants {
    /// Builds an invariant list, validating that every factor is `>= 2` and
    /// that consecutive factors divide each other.
    pub fn new(free_rank: usize, torsion: Vec<BigUint>) -> Result<Self> {
        let two = BigUint::from(2u32);
        for d in &torsion {
            if *d < two {
                return Err(Error::Invalid(format!(
                    "invariant factor {d} is smaller than 2"
                )));
            }
        }
        for w in torsion.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::Invalid(format!(
                    "invariant factors must form a divisibility chain: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { free_rank, torsion })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// Rank of the free part.
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors in ascending divisibility order.
    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    /// True for the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.torsion
            .iter()
            .fold(BigUint::one(), |acc, d| acc * d)
    }
}

impl fmt::Display for AbelianInvariants {
    /// Renders as e.g. `0`, `Z`, `Z^3`, `Z/12`, or `Z x Z/24 x Z/2`.
    ///
    /// The free part comes first; torsion factors are printed largest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in self.torsion.iter().rev() {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// The cokernel `Z^ambient / rowspace(a)` as abelian invariants.
///
/// The rows of `a` are relation vectors on the first `a.cols()` of `ambient`
/// free generators; generators beyond `a.cols()` are unconstrained and only
/// add free rank.
///
/// # Errors
/// Returns [`Error::AmbientTooSmall`] if `ambient < a.cols()`.
pub fn invariant_factors(a: &IntegerMatrix, ambient: usize) -> Result<AbelianInvariants> {
    if ambient < a.cols() {
        return Err(Error::AmbientTooSmall {
            ambient,
            cols: a.cols(),
        });
    }
    let form = snf(a);
    let rank = form.rank();
    let one = BigInt::one();
    let torsion: Vec<BigUint> = form
        .s
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_zero() && *d != one)
        .map(|d| d.to_biguint().expect("diagonal is non-negative"))
        .collect();
    AbelianInvariants::new(ambient - rank, torsion)
}
