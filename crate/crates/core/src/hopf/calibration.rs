//! Sign calibration of the Hopf gluing.
//!
//! The meridian of either side may be oriented either way, so ζ is only
//! pinned down up to `D·ζ·D′` with `D, D′ ∈ {I, diag(1, 1, −1)}`. The
//! calibrated variant is the first one, in declaration order, on which the
//! two routes to `π₁` agree for a fixed seeded sample.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    compose_two_fiber_with, pi1_single_gluing, pi1_two_log_transforms, random_completion,
    random_primitive_triple, zeta_matrix, GluingMatrix,
};
use crate::linalg::IntMatrix;

const CALIBRATION_SEED: u64 = 0x5a37_a0b1;
const CALIBRATION_PAIRS: usize = 128;
const CALIBRATION_BOUND: i64 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaVariant {
    /// `ζ`
    Raw,
    /// `diag(1,1,−1)·ζ`
    FlipTarget,
    /// `ζ·diag(1,1,−1)`
    FlipSource,
    /// `diag(1,1,−1)·ζ·diag(1,1,−1)`
    FlipBoth,
}

impl ZetaVariant {
    pub const ALL: [ZetaVariant; 4] = [
        ZetaVariant::Raw,
        ZetaVariant::FlipTarget,
        ZetaVariant::FlipSource,
        ZetaVariant::FlipBoth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ZetaVariant::Raw => "zeta",
            ZetaVariant::FlipTarget => "flip*zeta",
            ZetaVariant::FlipSource => "zeta*flip",
            ZetaVariant::FlipBoth => "flip*zeta*flip",
        }
    }

    pub fn matrix(self) -> GluingMatrix {
        let mut m: IntMatrix = zeta_matrix().matrix().clone();
        if matches!(self, ZetaVariant::FlipTarget | ZetaVariant::FlipBoth) {
            m.negate_row(2);
        }
        if matches!(self, ZetaVariant::FlipSource | ZetaVariant::FlipBoth) {
            m.negate_col(2);
        }
        GluingMatrix::new(m).expect("sign flips keep |det| = 1")
    }
}

impl fmt::Display for ZetaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ZetaVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ZetaVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown zeta variant {s:?}"))
    }
}

/// Number of sampled pairs (two completions each) on which the composed
/// gluing and the direct presentation disagree for `variant`.
fn disagreements(variant: ZetaVariant, seed: u64, pairs: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..pairs {
        let plus = random_primitive_triple(&mut rng, CALIBRATION_BOUND);
        let minus = random_primitive_triple(&mut rng, CALIBRATION_BOUND);
        let direct = pi1_two_log_transforms(&plus, &minus).expect("primitive");
        for _ in 0..2 {
            let p = random_completion(&mut rng, &plus);
            let m = random_completion(&mut rng, &minus);
            if pi1_single_gluing(&compose_two_fiber_with(variant, &p, &m)) != direct {
                bad += 1;
            }
        }
    }
    bad
}

/// First variant with full agreement on a seeded sample, if any.
pub fn calibrate_zeta(seed: u64, pairs: usize) -> Option<ZetaVariant> {
    ZetaVariant::ALL
        .into_iter()
        .find(|&v| disagreements(v, seed, pairs) == 0)
}

/// Process-wide calibrated variant, computed once.
///
/// Falls back to [`ZetaVariant::Raw`] when no variant calibrates, so the
/// disagreement stays visible to the agreement checks downstream.
pub fn calibrated_zeta_variant() -> ZetaVariant {
    static VARIANT: OnceLock<ZetaVariant> = OnceLock::new();
    *VARIANT.get_or_init(|| {
        calibrate_zeta(CALIBRATION_SEED, CALIBRATION_PAIRS).unwrap_or(ZetaVariant::Raw)
    })
}
