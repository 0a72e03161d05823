//! Test-side oracles, written independently of the library's algorithms:
//! schoolbook products, cofactor-expansion determinants and brute-force
//! minor gcds over plain `Vec<Vec<BigInt>>`.

#![allow(dead_code)]

use hopf_core::linalg::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Rows = Vec<Vec<BigInt>>;

pub fn rows_of(m: &IntMatrix) -> Rows {
    m.to_rows()
}

pub fn rows_i64(rows: &[Vec<i64>]) -> Rows {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn naive_product(a: &Rows, b: &Rows) -> Rows {
    let n = a.len();
    let inner = b.len();
    let m = b[0].len();
    assert!(a.iter().all(|r| r.len() == inner));
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = BigInt::zero();
            for k in 0..inner {
                acc += &a[i][k] * &b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn cofactor_det(a: &Rows) -> BigInt {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n));
    match n {
        0 => BigInt::one(),
        1 => a[0][0].clone(),
        _ => (0..n)
            .map(|c| {
                let sub: Rows = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &a[0][c] * cofactor_det(&sub);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last: Vec<Vec<usize>> = subsets(n - 1, k - 1)
        .into_iter()
        .map(|mut s| {
            s.push(n - 1);
            s
        })
        .collect();
    let mut out = subsets(n - 1, k);
    out.append(&mut with_last);
    out
}

pub fn minor_gcd(a: &Rows, k: usize) -> BigInt {
    let (m, n) = (a.len(), a[0].len());
    let mut g = BigInt::zero();
    for rs in subsets(m, k) {
        for cs in subsets(n, k) {
            let sub: Rows = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect())
                .collect();
            g = g.gcd(&cofactor_det(&sub));
        }
    }
    g
}

pub fn identity(n: usize) -> Rows {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Third column `(0, 0, 1)` and determinant one, checked by cofactor expansion.
pub fn extendable_oracle(a: &Rows) -> bool {
    a.len() == 3
        && a.iter().all(|r| r.len() == 3)
        && a[0][2].is_zero()
        && a[1][2].is_zero()
        && a[2][2].is_one()
        && cofactor_det(a).is_one()
}

/// `(L₁·L₂·…)·input·(R₁·R₂·…) = output` and every factor extendable.
pub fn certificate_oracle(input: &Rows, left: &[Rows], right: &[Rows], output: &Rows) -> bool {
    if !left.iter().chain(right).all(extendable_oracle) {
        return false;
    }
    if output.len() != 3 || output.iter().any(|r| r.len() != 3) {
        return false;
    }
    let mut acc = input.clone();
    for l in left.iter().rev() {
        acc = naive_product(l, &acc);
    }
    for r in right {
        acc = naive_product(&acc, r);
    }
    acc == *output
}

/// Shape `[[a, c, 1], [b, d, 0], [0, 0, 1]]` with `ad − bc = 1`.
pub fn normal_form_shape(m: &Rows) -> bool {
    m[0][2].is_one()
        && m[1][2].is_zero()
        && m[2][0].is_zero()
        && m[2][1].is_zero()
        && m[2][2].is_one()
        && (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_one()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
