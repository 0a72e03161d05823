//! Seeded generators for primitive triples, completions and extendable maps.

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use super::LogTransformParams;
use crate::linalg::{complete_primitive_to_sl3, gcd, IntMatrix, UnimodularMatrix};

/// Uniform primitive triple with entries in `[-bound, bound]` (rejection sampled).
pub fn random_primitive_triple<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> [BigInt; 3] {
    assert!(bound >= 1, "bound must admit a primitive vector");
    loop {
        let t: [BigInt; 3] = std::array::from_fn(|_| BigInt::from(rng.gen_range(-bound..=bound)));
        if gcd(&gcd(&t[0], &t[1]), &t[2]).is_one() {
            return t;
        }
    }
}

/// Random matrix `[[r, t, 0], [s, u, 0], [v, w, 1]]` with `ru − ts = 1`.
pub fn random_extendable<R: Rng + ?Sized>(rng: &mut R) -> IntMatrix {
    let mut m = IntMatrix::identity(3);
    for _ in 0..rng.gen_range(0..8) {
        let src = rng.gen_range(0..2);
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        m.add_row_multiple(1 - src, src, &sign.into());
    }
    m.set(2, 0, rng.gen_range(-4i64..=4).into());
    m.set(2, 1, rng.gen_range(-4i64..=4).into());
    m
}

/// Another completion of the same triple: the canonical one times a random
/// extendable matrix, which fixes the third column.
pub fn random_completion<R: Rng + ?Sized>(rng: &mut R, triple: &[BigInt; 3]) -> LogTransformParams {
    let base = complete_primitive_to_sl3(triple).expect("primitive triple");
    let twist = random_extendable(rng);
    let m = base.matrix().multiply(&twist).expect("3x3");
    let completion = UnimodularMatrix::new(m).expect("product of determinant-one factors");
    LogTransformParams::with_completion(completion).expect("det +1 completion")
}
