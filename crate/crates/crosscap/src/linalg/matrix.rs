//! Dense matrices over the arbitrary-precision integers.
//!
//! Row-major storage of [`BigInt`] entries.  The type is deliberately small:
//! just enough structure for exact homological algebra (products, transposes,
//! elementary row/column operations, and a bit-exact text format).

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A dense `rows x cols` matrix with [`BigInt`] entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    /// Builds a matrix from row-major data.
    ///
    /// # Panics
    /// Panics if `data.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "matrix data length {} does not match {}x{}",
            data.len(),
            rows,
            cols
        );
        Self { rows, cols, data }
    }

    /// The `rows x cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Builds a matrix from machine-integer rows; handy in tests and examples.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows in matrix literal");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Self::new(r, c, data)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Immutable entry access.
    ///
    /// # Panics
    /// Panics if out of range.
    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }

    /// Mutable entry access.
    ///
    /// # Panics
    /// Panics if out of range.
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    /// The main-diagonal entries (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i).clone())
            .collect()
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Swaps rows `i` and `j`.
    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Swaps columns `i` and `j`.
    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.data.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    /// Row operation `row[i] += q * row[j]` (`i != j`).
    pub fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        assert_ne!(i, j, "row operation requires distinct rows");
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let add = q * &self.data[j * self.cols + k];
            self.data[i * self.cols + k] += add;
        }
    }

    /// Column operation `col[i] += q * col[j]` (`i != j`).
    pub fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        assert_ne!(i, j, "column operation requires distinct columns");
        if q.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let add = q * &self.data[k * self.cols + j];
            self.data[k * self.cols + i] += add;
        }
    }

    /// Negates row `i`.
    pub fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -self.data[i * self.cols + k].clone();
            self.data[i * self.cols + k] = v;
        }
    }

    /// Parses the plain-text matrix format.
    ///
    /// Line 1 holds `rows cols`; each subsequent non-empty line holds one row
    /// of whitespace-separated integers.  Blank lines and lines starting with
    /// `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::MatrixParse("empty input".into()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::MatrixParse(format!(
                "header must be 'rows cols', got '{header}'"
            )));
        }
        let rows: usize = dims[0]
            .parse()
            .map_err(|_| Error::MatrixParse(format!("bad row count '{}'", dims[0])))?;
        let cols: usize = dims[1]
            .parse()
            .map_err(|_| Error::MatrixParse(format!("bad column count '{}'", dims[1])))?;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::MatrixParse(format!("expected {rows} rows, got {i}")))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::MatrixParse(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    entries.len(),
                    cols
                )));
            }
            for e in entries {
                let v: BigInt = e
                    .parse()
                    .map_err(|_| Error::MatrixParse(format!("bad integer '{e}'")))?;
                data.push(v);
            }
        }
        if let Some(extra) = lines.next() {
            return Err(Error::MatrixParse(format!(
                "unexpected trailing line '{extra}'"
            )));
        }
        Ok(Self::new(rows, cols, data))
    }

    /// Serializes to the text format accepted by [`IntegerMatrix::parse_text`].
    ///
    /// Round-trips bit-exactly: `parse_text(&m.to_text()) == m`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = IntegerMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.at(k, j);
                    *out.at_mut(i, j) += add;
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.at(i, j).to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.at(i, j), width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let a = IntegerMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let id = IntegerMatrix::identity(2);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
        let b = IntegerMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let ab = &a * &b;
        assert_eq!(ab, IntegerMatrix::from_i64(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn transpose_involutive() {
        let a = IntegerMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().rows(), 3);
    }

    #[test]
    fn text_round_trip() {
        let a = IntegerMatrix::from_i64(&[&[7, -3], &[0, 125]]);
        let text = a.to_text();
        assert_eq!(text, "2 2\n7 -3\n0 125\n");
        assert_eq!(IntegerMatrix::parse_text(&text).unwrap(), a);
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let text = "# boundary matrix\n2 1\n\n3\n-4\n";
        let a = IntegerMatrix::parse_text(text).unwrap();
        assert_eq!(a, IntegerMatrix::from_i64(&[&[3], &[-4]]));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(IntegerMatrix::parse_text("").is_err());
        assert!(IntegerMatrix::parse_text("2").is_err());
        assert!(IntegerMatrix::parse_text("1 2\n5").is_err());
        assert!(IntegerMatrix::parse_text("1 1\nx").is_err());
        assert!(IntegerMatrix::parse_text("1 1\n3\n4").is_err());
    }

    #[test]
    fn row_and_col_ops() {
        let mut a = IntegerMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        a.add_row_multiple(1, 0, &BigInt::from(5));
        assert_eq!(a, IntegerMatrix::from_i64(&[&[1, 0], &[5, 1]]));
        a.swap_rows(0, 1);
        assert_eq!(a, IntegerMatrix::from_i64(&[&[5, 1], &[1, 0]]));
        a.add_col_multiple(0, 1, &BigInt::from(-1));
        assert_eq!(a, IntegerMatrix::from_i64(&[&[4, 1], &[1, 0]]));
        a.negate_row(0);
        assert_eq!(a, IntegerMatrix::from_i64(&[&[-4, -1], &[1, 0]]));
    }
}
