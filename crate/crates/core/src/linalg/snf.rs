//! Smith normal form with transformation matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{IntMatrix, UnimodularMatrix};
use crate::error::{Error, Result};

/// `u · input · v = d` with `d` diagonal, non-negative, and `d₁ | d₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: UnimodularMatrix,
    pub d: IntMatrix,
    pub v: UnimodularMatrix,
}

impl SnfResult {
    /// The `min(rows, cols)` diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_det: i8,
    v_det: i8,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_rows(i, j);
            self.u.swap_rows(i, j);
            self.u_det = -self.u_det;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_cols(i, j);
            self.v.swap_cols(i, j);
            self.v_det = -self.v_det;
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.u.negate_row(r);
        self.u_det = -self.u_det;
    }

    /// Smallest nonzero |entry| in the trailing block from `t`, ties broken
    /// by row then column.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let x = self.a.get(r, c);
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| mag < *b) {
                    best = Some((r, c, mag));
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    /// Clears row and column `t` outside the pivot. Returns false when a
    /// nonzero remainder forces a new pivot.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for r in t + 1..self.a.rows() {
            if self.a.get(r, t).is_zero() {
                continue;
            }
            let q = self.a.get(r, t).div_floor(self.a.get(t, t));
            self.add_row(r, t, &-q);
            clean &= self.a.get(r, t).is_zero();
        }
        for c in t + 1..self.a.cols() {
            if self.a.get(t, c).is_zero() {
                continue;
            }
            let q = self.a.get(t, c).div_floor(self.a.get(t, t));
            self.add_col(c, t, &-q);
            clean &= self.a.get(t, c).is_zero();
        }
        clean
    }

    /// First trailing row holding an entry the pivot does not divide.
    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.a.get(t, t);
        (t + 1..self.a.rows())
            .find(|&r| (t + 1..self.a.cols()).any(|c| !self.a.get(r, c).is_multiple_of(p)))
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut red = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        u_det: 1,
        v_det: 1,
    };
    for t in 0..m.min(n) {
        loop {
            let Some((r, c)) = red.pivot(t) else {
                return red.finish();
            };
            red.swap_rows(t, r);
            red.swap_cols(t, c);
            if !red.clear_cross(t) {
                continue;
            }
            match red.non_divisible_row(t) {
                Some(r) => red.add_row(t, r, &BigInt::from(1)),
                None => break,
            }
        }
        if red.a.get(t, t).is_negative() {
            red.negate_row(t);
        }
    }
    red.finish()
}

impl Reducer {
    fn finish(self) -> SnfResult {
        SnfResult {
            u: UnimodularMatrix::from_parts_unchecked(self.u, self.u_det),
            d: self.a,
            v: UnimodularMatrix::from_parts_unchecked(self.v, self.v_det),
        }
    }
}

/// Gcd of all `k×k` minors; zero when every minor vanishes.
pub fn gcd_of_k_minors(a: &IntMatrix, k: usize) -> Result<BigInt> {
    if k == 0 || k > a.rows().min(a.cols()) {
        return Err(Error::MinorOrderOutOfRange {
            k,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let row_sets = combinations(a.rows(), k);
    let col_sets = combinations(a.cols(), k);
    let mut g = BigInt::zero();
    for rows in &row_sets {
        for cols in &col_sets {
            g = g.gcd(&a.minor(rows, cols));
        }
    }
    Ok(g)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] != i + n - k) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[&[i64]]) -> Vec<BigInt> {
        let a = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&a);
        let prod = snf
            .u
            .matrix()
            .multiply(&a)
            .unwrap()
            .multiply(snf.v.matrix())
            .unwrap();
        assert_eq!(prod, snf.d);
        snf.diagonal()
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_matrix_untouched() {
        let snf = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert!(snf.d.is_zero());
        assert_eq!(snf.u.matrix(), &IntMatrix::identity(2));
        assert_eq!(snf.v.matrix(), &IntMatrix::identity(3));
    }

    #[test]
    fn small_examples() {
        assert_eq!(diag_of(&[&[2, 4], &[6, 8]]), big(&[2, 4]));
        let snf = smith_normal_form(&IntMatrix::from_rows(&[[1, 0, -1], [0, 0, 1]]));
        assert_eq!(snf.d, IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0]]));
        assert_eq!(diag_of(&[&[2, 0], &[0, 3]]), big(&[1, 6]));
        assert_eq!(diag_of(&[&[-5]]), big(&[5]));
        assert_eq!(diag_of(&[&[0, 0], &[0, -7]]), big(&[7, 0]));
    }

    #[test]
    fn needs_divisibility_fix() {
        assert_eq!(
            diag_of(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]),
            big(&[1, 2, 12])
        );
    }

    #[test]
    fn determinants_of_transforms_recorded() {
        let snf = smith_normal_form(&IntMatrix::from_rows(&[[0, 2, 1], [3, 0, -1], [1, 1, 4]]));
        assert_eq!(
            snf.u.matrix().determinant().unwrap(),
            BigInt::from(snf.u.det())
        );
        assert_eq!(
            snf.v.matrix().determinant().unwrap(),
            BigInt::from(snf.v.det())
        );
    }

    #[test]
    fn minor_gcds() {
        let a = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        assert_eq!(gcd_of_k_minors(&a, 1).unwrap(), BigInt::from(2));
        assert_eq!(gcd_of_k_minors(&a, 2).unwrap(), BigInt::from(8));
        let b = IntMatrix::from_rows(&[[1, 0, -1], [0, 0, 1]]);
        assert_eq!(gcd_of_k_minors(&b, 2).unwrap(), BigInt::from(1));
        assert!(gcd_of_k_minors(&b, 3).is_err());
        assert!(gcd_of_k_minors(&b, 0).is_err());
        assert_eq!(
            gcd_of_k_minors(&IntMatrix::zeros(2, 2), 1).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn combinations_enumerated() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 2), vec![vec![0, 1]]);
        assert_eq!(combinations(4, 1).len(), 4);
    }
}
