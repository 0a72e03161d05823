//! Finitely generated abelian groups given by generators and relations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};

/// Abelian presentation: each relation is an exponent row over the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    num_generators: usize,
    relations: Vec<Vec<BigInt>>,
}

impl Presentation {
    pub fn new(num_generators: usize, relations: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some((i, row)) = relations
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != num_generators)
        {
            return Err(Error::InvalidShape(format!(
                "relation {i} has {} exponents, expected {num_generators}",
                row.len()
            )));
        }
        Ok(Self {
            num_generators,
            relations,
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(num_generators: usize, rows: &[R]) -> Result<Self> {
        let relations = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::new(num_generators, relations)
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.relations
    }

    /// Relation matrix, or `None` when there are no relations or generators.
    pub fn relation_matrix(&self) -> Option<IntMatrix> {
        if self.relations.is_empty() || self.num_generators == 0 {
            return None;
        }
        Some(IntMatrix::from_big_rows(self.relations.clone()).expect("validated rows"))
    }
}

/// `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_m` with `1 < d₁ | d₂ | … | d_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Validates the invariant-factor chain (ascending, each > 1, each dividing the next).
    pub fn new(rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self> {
        let one = BigInt::one();
        if invariant_factors.iter().any(|d| *d <= one) {
            return Err(Error::InvalidShape(
                "invariant factors must all exceed 1".into(),
            ));
        }
        if invariant_factors
            .windows(2)
            .any(|w| !(&w[1] % &w[0]).is_zero())
        {
            return Err(Error::InvalidShape(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        Ok(Self {
            rank,
            invariant_factors,
        })
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z^rank ⊕ Z/n` with the `n ∈ {0, 1}` cases folded into rank.
    pub fn with_cyclic(rank: usize, n: &BigInt) -> Self {
        if n.is_zero() {
            Self::free(rank + 1)
        } else {
            let n = n.magnitude().clone().into();
            if n == BigInt::one() {
                Self::free(rank)
            } else {
                Self {
                    rank,
                    invariant_factors: vec![n],
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The cokernel of the relation matrix, read off its Smith normal form.
pub fn group_from_presentation(p: &Presentation) -> FgAbelianGroup {
    let Some(m) = p.relation_matrix() else {
        return FgAbelianGroup::free(p.num_generators());
    };
    let diag = smith_normal_form(&m).diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let one = BigInt::one();
    FgAbelianGroup {
        rank: p.num_generators() - nonzero,
        invariant_factors: diag.into_iter().filter(|d| *d > one).collect(),
    }
}

pub fn is_isomorphic(g1: &FgAbelianGroup, g2: &FgAbelianGroup) -> bool {
    g1 == g2
}

/// Order of the torsion subgroup; 1 when torsion-free.
///
/// Torsion of a finitely generated group is always finite, so no "infinite"
/// case exists.
pub fn torsion_order(g: &FgAbelianGroup) -> BigInt {
    g.invariant_factors.iter().product()
}
