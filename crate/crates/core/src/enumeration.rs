//! Deterministic sweeps over logarithmic-transformation parameters.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abelian::FgAbelianGroup;
use crate::error::{Error, Result};
use crate::hopf::{
    compose_two_fiber, mu_of, pi1_two_log_transforms, GluingMatrix, LogTransformParams,
};
use crate::linalg::{gcd, random_sl3_from, IntMatrix};

pub const DEFAULT_WORD_LENGTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepMode {
    /// Every `(a, b, p, c, d, q)` in the product of the inclusive ranges,
    /// in that order.
    Tuples { ranges: [RangeInclusive<i64>; 6] },
    /// `sample_count` pairs `(φ₊, φ₋)` of random SL(3, Z) words; the
    /// parameters are their third columns.
    Matrices {
        sample_count: usize,
        seed: u64,
        word_length: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub homology_hopf_only: bool,
    pub parallel: bool,
}

impl SweepSpec {
    pub fn tuples(ranges: [RangeInclusive<i64>; 6]) -> Self {
        Self {
            mode: SweepMode::Tuples { ranges },
            homology_hopf_only: false,
            parallel: false,
        }
    }

    pub fn matrices(sample_count: usize, seed: u64) -> Self {
        Self {
            mode: SweepMode::Matrices {
                sample_count,
                seed,
                word_length: DEFAULT_WORD_LENGTH,
            },
            homology_hopf_only: false,
            parallel: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let SweepMode::Tuples { ranges } = &self.mode {
            const NAMES: [&str; 6] = ["a", "b", "p", "c", "d", "q"];
            for (name, r) in NAMES.iter().zip(ranges) {
                if r.is_empty() {
                    return Err(Error::InvalidSweep(format!(
                        "range for {name} is empty ({}..={})",
                        r.start(),
                        r.end()
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    /// `(a, b, p, c, d, q)`
    pub params: [BigInt; 6],
    /// Composed gluing `φ₊⁻¹ ζ φ₋` (matrix mode only).
    pub matrix: Option<IntMatrix>,
    /// Torsion order, `0` when `π₁ = Z²`.
    pub mu: BigInt,
    pub homology_hopf: bool,
    pub group: FgAbelianGroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutput {
    pub records: Vec<SweepRecord>,
    /// Non-primitive tuples (tuple mode) left out of `records`.
    pub skipped: usize,
    /// Records dropped by the homology-Hopf filter.
    pub filtered: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub homology_hopf: usize,
    pub by_mu: BTreeMap<BigInt, usize>,
}

fn is_primitive(t: &[BigInt; 3]) -> bool {
    gcd(&gcd(&t[0], &t[1]), &t[2]).is_one()
}

fn record(params: [BigInt; 6], matrix: Option<IntMatrix>) -> Option<SweepRecord> {
    let [a, b, p, c, d, q] = params.clone();
    let (plus, minus) = ([a, b, p], [c, d, q]);
    if !is_primitive(&plus) || !is_primitive(&minus) {
        return None;
    }
    let group = pi1_two_log_transforms(&plus, &minus).ok()?;
    let mu = mu_of(&group);
    Some(SweepRecord {
        params,
        matrix,
        homology_hopf: mu.is_one(),
        mu,
        group,
    })
}

fn tuple_cells(ranges: &[RangeInclusive<i64>; 6]) -> Vec<[i64; 6]> {
    let mut cells = vec![[0i64; 6]];
    for (i, r) in ranges.iter().enumerate() {
        cells = cells
            .into_iter()
            .flat_map(|cell| {
                r.clone().map(move |x| {
                    let mut next = cell;
                    next[i] = x;
                    next
                })
            })
            .collect();
    }
    cells
}

fn matrix_cell(seed: u64, index: usize, word_length: usize) -> SweepRecord {
    // one independent stream per sample so chunking cannot change results
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let phi_plus = random_sl3_from(&mut rng, word_length);
    let phi_minus = random_sl3_from(&mut rng, word_length);
    let plus = LogTransformParams::with_completion(phi_plus).expect("det +1");
    let minus = LogTransformParams::with_completion(phi_minus).expect("det +1");
    let composed: GluingMatrix = compose_two_fiber(&plus, &minus);
    let [a, b, p] = plus.triple();
    let [c, d, q] = minus.triple();
    record([a, b, p, c, d, q], Some(composed.matrix().clone()))
        .expect("columns of SL(3, Z) matrices are primitive")
}

pub fn sweep(spec: &SweepSpec) -> Result<SweepOutput> {
    spec.validate()?;
    let raw: Vec<Option<SweepRecord>> = match &spec.mode {
        SweepMode::Tuples { ranges } => {
            let cells = tuple_cells(ranges);
            let eval = |cell: &[i64; 6]| record(cell.map(BigInt::from), None);
            if spec.parallel {
                cells.par_iter().map(eval).collect()
            } else {
                cells.iter().map(eval).collect()
            }
        }
        &SweepMode::Matrices {
            sample_count,
            seed,
            word_length,
        } => {
            let eval = |i: usize| Some(matrix_cell(seed, i, word_length));
            if spec.parallel {
                (0..sample_count).into_par_iter().map(eval).collect()
            } else {
                (0..sample_count).map(eval).collect()
            }
        }
    };
    let total = raw.len();
    let kept: Vec<SweepRecord> = raw.into_iter().flatten().collect();
    let skipped = total - kept.len();
    let before = kept.len();
    let records: Vec<SweepRecord> = kept
        .into_iter()
        .filter(|r| !spec.homology_hopf_only || r.homology_hopf)
        .collect();
    Ok(SweepOutput {
        filtered: before - records.len(),
        records,
        skipped,
    })
}

pub fn summarize(records: &[SweepRecord]) -> SweepSummary {
    records.iter().fold(SweepSummary::default(), |mut s, r| {
        s.total += 1;
        s.homology_hopf += usize::from(r.homology_hopf);
        *s.by_mu.entry(r.mu.clone()).or_default() += 1;
        s
    })
}
