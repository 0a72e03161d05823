use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{IntMatrix, UnimodularMatrix};

/// Product of `word_length` elementary shears `I ± E_ij` (i ≠ j), drawn from
/// a ChaCha stream keyed by `seed`.
pub fn random_sl3(seed: u64, word_length: usize) -> UnimodularMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_sl3_from(&mut rng, word_length)
}

pub fn random_sl3_from<R: Rng + ?Sized>(rng: &mut R, word_length: usize) -> UnimodularMatrix {
    let mut m = IntMatrix::identity(3);
    for _ in 0..word_length {
        let src = rng.gen_range(0..3);
        let dst = (src + rng.gen_range(1..3)) % 3;
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        m.add_row_multiple(dst, src, &sign.into());
    }
    UnimodularMatrix::from_parts_unchecked(m, 1)
}
