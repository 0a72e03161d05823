//! Gluing matrices for `(T²×D²) ∪ (T²×D²)` and the two-fiber logarithmic
//! transformation calculus on the Hopf surface.
//!
//! Convention: a gluing matrix acts on `H₁(T³) = Z³` in the ordered basis
//! `(α, β, γ)`, where `α, β` span the fiber torus and `γ` is the meridian of
//! the disc factor. Column `j` is the image of the `j`-th basis vector, so
//! composing maps is multiplying matrices in the same order.

mod calibration;
mod reduce;
mod sampling;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::abelian::{group_from_presentation, FgAbelianGroup, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{complete_primitive_to_sl3, gcd, IntMatrix, UnimodularMatrix};

pub use calibration::{calibrate_zeta, calibrated_zeta_variant, ZetaVariant};
pub use reduce::{
    framing_block, reduce_to_normal_form, reduce_to_standard, standard_form, verify_certificate,
    CertificateFault, NormalForm, ReductionCertificate,
};
pub use sampling::{random_completion, random_extendable, random_primitive_triple};

pub const CONVENTION: &str = "columns-are-images-alpha-beta-gamma";

/// A 3×3 unimodular gluing matrix in the `(α, β, γ)` basis.
///
/// Entry names follow the layout `[[a, c, g], [b, d, h], [e, f, k]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GluingMatrix(UnimodularMatrix);

impl GluingMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if (m.rows(), m.cols()) != (3, 3) {
            return Err(Error::InvalidShape(format!(
                "gluing matrix must be 3x3, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        UnimodularMatrix::new(m).map(Self)
    }

    pub fn from_unimodular(m: UnimodularMatrix) -> Result<Self> {
        Self::new(m.into_matrix())
    }

    /// Panics unless `rows` is a valid gluing matrix; meant for literals.
    pub fn from_rows(rows: [[i64; 3]; 3]) -> Self {
        Self::new(IntMatrix::from_rows(&rows)).expect("literal gluing matrix")
    }

    pub fn matrix(&self) -> &IntMatrix {
        self.0.matrix()
    }

    pub fn unimodular(&self) -> &UnimodularMatrix {
        &self.0
    }

    pub fn det(&self) -> i8 {
        self.0.det()
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        self.matrix().get(r, c)
    }

    /// Meridian image along α.
    pub fn g(&self) -> &BigInt {
        self.entry(0, 2)
    }

    /// Meridian image along β.
    pub fn h(&self) -> &BigInt {
        self.entry(1, 2)
    }

    /// Meridian image along γ.
    pub fn k(&self) -> &BigInt {
        self.entry(2, 2)
    }

    pub fn e(&self) -> &BigInt {
        self.entry(2, 0)
    }

    pub fn f(&self) -> &BigInt {
        self.entry(2, 1)
    }

    /// `gcd(g, h)`, zero when both vanish.
    pub fn meridian_gcd(&self) -> BigInt {
        gcd(self.g(), self.h())
    }
}

impl fmt::Debug for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GluingMatrix({})", self.matrix())
    }
}

/// Raw van Kampen gluing of the Hopf surface: `α ↦ α`, `β ↦ β`, `γ ↦ α − γ`.
pub fn zeta_matrix() -> GluingMatrix {
    GluingMatrix::from_rows([[1, 0, 1], [0, 1, 0], [0, 0, -1]])
}

/// The identity-framed normal form `[[1, 0, 1], [0, 1, 0], [0, 0, 1]]`.
pub fn standard_matrix() -> GluingMatrix {
    GluingMatrix::from_rows([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
}

/// Whether a boundary map extends over `T²×D²`: third column `(0, 0, 1)`
/// and determinant `+1`.
pub fn is_extendable(m: &IntMatrix) -> bool {
    if (m.rows(), m.cols()) != (3, 3) {
        return false;
    }
    m.get(0, 2).is_zero()
        && m.get(1, 2).is_zero()
        && m.get(2, 2).is_one()
        && m.determinant().is_ok_and(|d| d.is_one())
}

/// Flips the meridian on the source side when `det = −1`.
pub fn normalize_to_sl3(m: &GluingMatrix) -> GluingMatrix {
    if m.det() > 0 {
        return m.clone();
    }
    let mut flipped = m.matrix().clone();
    flipped.negate_col(2);
    GluingMatrix(UnimodularMatrix::from_parts_unchecked(flipped, 1))
}

/// `π₁(X_φ) = Z ⊕ Z/gcd(g, h)`, where `gcd(0, 0) = 0` yields `Z²`.
pub fn pi1_single_gluing(m: &GluingMatrix) -> FgAbelianGroup {
    FgAbelianGroup::with_cyclic(1, &m.meridian_gcd())
}

pub fn is_homology_hopf(m: &GluingMatrix) -> bool {
    m.meridian_gcd().is_one()
}

/// Direction `(a, b)` and meridian coefficient `p` of one logarithmic
/// transformation, together with a determinant-one completion whose third
/// column is `(a, b, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogTransformParams {
    a: BigInt,
    b: BigInt,
    p: BigInt,
    completion: UnimodularMatrix,
}

impl LogTransformParams {
    /// Uses the canonical completion of `(a, b, p)`.
    pub fn new(a: BigInt, b: BigInt, p: BigInt) -> Result<Self> {
        let completion = complete_primitive_to_sl3(&[a.clone(), b.clone(), p.clone()])?;
        Ok(Self {
            a,
            b,
            p,
            completion,
        })
    }

    pub fn from_i64(a: i64, b: i64, p: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), p.into())
    }

    /// Reads `(a, b, p)` off the third column of an explicit completion.
    pub fn with_completion(completion: UnimodularMatrix) -> Result<Self> {
        if completion.size() != 3 {
            return Err(Error::InvalidShape("completion must be 3x3".into()));
        }
        if completion.det() != 1 {
            return Err(Error::NotUnimodular {
                det: BigInt::from(completion.det()),
            });
        }
        let col = completion.matrix().column(2);
        let [a, b, p]: [BigInt; 3] = col.try_into().expect("3x3");
        Ok(Self {
            a,
            b,
            p,
            completion,
        })
    }

    pub fn triple(&self) -> [BigInt; 3] {
        [self.a.clone(), self.b.clone(), self.p.clone()]
    }

    pub fn direction(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    pub fn meridian_coefficient(&self) -> &BigInt {
        &self.p
    }

    pub fn multiplicity(&self) -> BigInt {
        self.p.abs()
    }

    pub fn completion(&self) -> &UnimodularMatrix {
        &self.completion
    }
}

/// `φ₊⁻¹ ∘ ζ ∘ φ₋` with the calibrated ζ variant.
pub fn compose_two_fiber(plus: &LogTransformParams, minus: &LogTransformParams) -> GluingMatrix {
    compose_two_fiber_with(calibrated_zeta_variant(), plus, minus)
}

pub fn compose_two_fiber_with(
    variant: ZetaVariant,
    plus: &LogTransformParams,
    minus: &LogTransformParams,
) -> GluingMatrix {
    let m = plus
        .completion
        .inverse()
        .multiply(variant.matrix().unimodular())
        .and_then(|x| x.multiply(&minus.completion))
        .expect("3x3 factors");
    GluingMatrix(m)
}

/// Abelianized `π₁` after logarithmic transformations `(a, b, p)` on the
/// north fiber and `(c, d, q)` on the south fiber, from the relations
/// `α^a β^b (αγ⁻¹)^p = 1` and `α^c β^d γ^q = 1`.
pub fn pi1_two_log_transforms(plus: &[BigInt; 3], minus: &[BigInt; 3]) -> Result<FgAbelianGroup> {
    for t in [plus, minus] {
        let content = gcd(&gcd(&t[0], &t[1]), &t[2]);
        if !content.is_one() {
            return Err(Error::NotPrimitive { gcd: content });
        }
    }
    presentation_two_log_transforms(plus, minus).map(|p| group_from_presentation(&p))
}

/// Rows `(a + p, b, −p)` and `(c, d, q)` over `(α, β, γ)`.
pub fn presentation_two_log_transforms(
    plus: &[BigInt; 3],
    minus: &[BigInt; 3],
) -> Result<Presentation> {
    let [a, b, p] = plus;
    Presentation::new(3, vec![vec![a + p, b.clone(), -p], minus.to_vec()])
}

/// Torsion order encoding used in tables: `0` for `Z²`, else `|torsion|`.
pub fn mu_of(group: &FgAbelianGroup) -> BigInt {
    if group.rank() >= 2 {
        BigInt::zero()
    } else {
        crate::abelian::torsion_order(group)
    }
}
