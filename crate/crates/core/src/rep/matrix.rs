//! Exact rational matrices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>, // row-major
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        assert_eq!(entries.len(), rows * cols);
        RationalMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        RationalMatrix { rows: n, cols: n, entries }
    }

    pub fn from_ints(rows: usize, cols: usize, ints: &[i64]) -> Self {
        RationalMatrix::new(
            rows,
            cols,
            ints.iter().map(|&x| BigRational::from(BigInt::from(x))).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    /// Matrix product self · other.
    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = vec![BigRational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[i * other.cols + j] += a * other.at(k, j);
                }
            }
        }
        RationalMatrix::new(self.rows, other.cols, out)
    }

    /// Determinant of the square matrix with rows 0..len and the given column
    /// selection (0-based, repetitions allowed and give zero).
    pub fn minor_det(&self, len: usize, col_sel: &[usize]) -> BigRational {
        debug_assert_eq!(col_sel.len(), len);
        let mut m: Vec<Vec<BigRational>> = (0..len)
            .map(|r| col_sel.iter().map(|&c| self.at(r, c).clone()).collect())
            .collect();
        det_in_place(&mut m)
    }
}

fn det_in_place(m: &mut Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Text format: one row per line (or per ";"), entries comma separated,
/// each "p" or "p/q".
impl FromStr for RationalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (lineno, line) in s.split(|c| c == '\n' || c == ';').enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split(',') {
                row.push(parse_rational(tok.trim(), lineno + 1)?);
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::FormatError { line: 0, message: "empty matrix".into() });
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::FormatError { line: 0, message: "ragged matrix rows".into() });
        }
        let n = rows.len();
        Ok(RationalMatrix::new(n, cols, rows.into_iter().flatten().collect()))
    }
}

fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let bad = || Error::FormatError { line, message: format!("bad rational {tok:?}") };
    if let Some((p, q)) = tok.split_once('/') {
        let num: BigInt = p.trim().parse().map_err(|_| bad())?;
        let den: BigInt = q.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = tok.parse().map_err(|_| bad())?;
        Ok(BigRational::from(num))
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> =
                (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            write!(f, "{}", row.join(","))?;
        }
        Ok(())
    }
}
