//! Bézout coefficients and the unimodular completions built from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, UnimodularMatrix};
use crate::error::{Error, Result};

/// Non-negative gcd with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Returns `(g, x, y)` with `x·a + y·b = g = gcd(a, b) ≥ 0`.
///
/// Coefficients come straight out of the classical Euclidean recursion
/// (truncating division), with all three negated at the end when the
/// recursion lands on a negative gcd. `(0, 0)` maps to `(0, 0, 0)`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (g, x, y) = euclid(a.clone(), b.clone());
    if g.is_negative() {
        (-g, -x, -y)
    } else {
        (g, x, y)
    }
}

fn euclid(a: BigInt, b: BigInt) -> (BigInt, BigInt, BigInt) {
    if b.is_zero() {
        if a.is_zero() {
            return (BigInt::zero(), BigInt::zero(), BigInt::zero());
        }
        return (a, BigInt::one(), BigInt::zero());
    }
    let (q, r) = a.div_rem(&b);
    let (g, x, y) = euclid(b, r);
    let next_y = &x - &q * &y;
    (g, y, next_y)
}

/// Completes a primitive integer vector `(a, b, p)` to a determinant-one
/// matrix whose third column is exactly `(a, b, p)`.
///
/// First `x·a + y·b = g₁ = gcd(a, b)`, then `s·g₁ + t·p = 1`. The result is
/// `B·C` with `B = [[a/g₁, −y, 0], [b/g₁, x, 0], [0, 0, 1]]` carrying
/// `(g₁, 0, p)` to `(a, b, p)` and `C = [[t, 0, g₁], [0, 1, 0], [−s, 0, p]]`.
pub fn complete_primitive_to_sl3(v: &[BigInt; 3]) -> Result<UnimodularMatrix> {
    let [a, b, p] = v;
    let content = gcd(&gcd(a, b), p);
    if !content.is_one() {
        return Err(Error::NotPrimitive { gcd: content });
    }
    let (g1, x, y) = extended_gcd(a, b);
    let outer = if g1.is_zero() {
        IntMatrix::identity(3)
    } else {
        let z = BigInt::zero;
        IntMatrix::from_big_rows(vec![
            vec![a / &g1, -&y, z()],
            vec![b / &g1, x, z()],
            vec![z(), z(), BigInt::one()],
        ])?
    };
    let (_, s, t) = extended_gcd(&g1, p);
    let inner = IntMatrix::from_big_rows(vec![
        vec![t, BigInt::zero(), g1],
        vec![BigInt::zero(), BigInt::one(), BigInt::zero()],
        vec![-s, BigInt::zero(), p.clone()],
    ])?;
    let m = outer.multiply(&inner)?;
    Ok(UnimodularMatrix::from_parts_unchecked(m, 1))
}

/// The 2×2 matrix `[[x, y], [−h, g]]` (with `x·g + y·h = 1`) that carries
/// `(g, h)ᵀ` to `(1, 0)ᵀ`.
pub fn sl2_carry_to_e1(g: &BigInt, h: &BigInt) -> Result<UnimodularMatrix> {
    let (d, x, y) = extended_gcd(g, h);
    if !d.is_one() {
        return Err(Error::NotPrimitive { gcd: d });
    }
    let m = IntMatrix::from_big_rows(vec![vec![x, y], vec![-h, g.clone()]])?;
    Ok(UnimodularMatrix::from_parts_unchecked(m, 1))
}
