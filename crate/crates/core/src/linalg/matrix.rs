use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidShape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows of machine integers.
    ///
    /// Panics on ragged or empty input; meant for literals and tests.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(
            rows.iter().all(|r| r.as_ref().len() == cols),
            "ragged matrix literal"
        );
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::new(rows.len(), cols, entries).expect("empty matrix literal")
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidShape("rows have different lengths".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal<I: IntoIterator<Item = i64>>(diag: I) -> Self {
        let diag: Vec<i64> = diag.into_iter().collect();
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.cols)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Exact product `self * rhs`.
    pub fn multiply(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += lhs * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // Sylvester's identity guarantees exact division.
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Determinant of the submatrix picked out by `rows` and `cols`.
    pub(crate) fn minor(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        IntMatrix::new(rows.len(), cols.len(), entries)
            .and_then(|m| m.determinant())
            .expect("square minor")
    }

    /// Gcd of all entries, zero for the zero matrix.
    pub fn content(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let delta = factor * self.get(src, c);
            self.entries[dst * self.cols + c] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let delta = factor * self.get(r, src);
            self.entries[r * self.cols + dst] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.entries[idx] = -&self.entries[idx];
        }
    }

    pub(crate) fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let idx = r * self.cols + c;
            self.entries[idx] = -&self.entries[idx];
        }
    }

    /// Block-diagonal embedding of a 2x2 matrix into the upper-left corner of I₃.
    pub fn embed_upper_left(block: &IntMatrix) -> IntMatrix {
        assert_eq!(
            (block.rows, block.cols),
            (2, 2),
            "embedding expects a 2x2 block"
        );
        let mut m = IntMatrix::identity(3);
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, c, block.get(r, c).clone());
            }
        }
        m
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        self.get(r, c)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Square integer matrix with determinant ±1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    m: IntMatrix,
    det: i8,
}

impl UnimodularMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        let det = m.determinant()?;
        let det = if det.is_one() {
            1
        } else if det == -BigInt::one() {
            -1
        } else {
            return Err(Error::NotUnimodular { det });
        };
        Ok(Self { m, det })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            m: IntMatrix::identity(n),
            det: 1,
        }
    }

    /// Wraps a matrix whose determinant the caller has already established.
    pub(crate) fn from_parts_unchecked(m: IntMatrix, det: i8) -> Self {
        debug_assert_eq!(m.determinant().ok(), Some(BigInt::from(det)));
        Self { m, det }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn det(&self) -> i8 {
        self.det
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    /// Exact inverse: the adjugate divided by the determinant.
    pub fn inverse(&self) -> UnimodularMatrix {
        let n = self.size();
        if n == 1 {
            return self.clone();
        }
        let mut inv = IntMatrix::zeros(n, n);
        let idx: Vec<usize> = (0..n).collect();
        for r in 0..n {
            for c in 0..n {
                // inv[r][c] = cofactor(c, r) / det
                let rows: Vec<usize> = idx.iter().copied().filter(|&i| i != c).collect();
                let cols: Vec<usize> = idx.iter().copied().filter(|&j| j != r).collect();
                let mut cof = self.m.minor(&rows, &cols);
                if (r + c) % 2 == 1 {
                    cof = -cof;
                }
                if self.det < 0 {
                    cof = -cof;
                }
                inv.set(r, c, cof);
            }
        }
        Self {
            m: inv,
            det: self.det,
        }
    }

    pub fn multiply(&self, rhs: &UnimodularMatrix) -> Result<UnimodularMatrix> {
        let m = self.m.multiply(&rhs.m)?;
        Ok(Self {
            m,
            det: self.det * rhs.det,
        })
    }
}

impl fmt::Debug for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.m, f)
    }
}

impl AsRef<IntMatrix> for UnimodularMatrix {
    fn as_ref(&self) -> &IntMatrix {
        &self.m
    }
}

pub fn inverse_unimodular(a: &UnimodularMatrix) -> UnimodularMatrix {
    a.inverse()
}

pub fn multiply(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.multiply(b)
}

pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    a.determinant()
}
