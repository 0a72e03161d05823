//! Reduction of homology-Hopf gluing matrices to the normal form
//! `[[a, c, 1], [b, d, 0], [0, 0, 1]]`, with certificates made of
//! extendable factors.
//!
//! Multiplying a gluing matrix on either side by a matrix that extends over
//! `T²×D²` does not change the diffeomorphism type of the glued manifold, so a
//! certificate is a chain of such moves together with the exact product.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{is_extendable, standard_matrix, GluingMatrix};
use crate::error::{Error, Result};
use crate::linalg::{sl2_carry_to_e1, IntMatrix};

/// The 2×2 block of `[[a, c, 1], [b, d, 0], [0, 0, 1]]`, with `ad − bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl NormalForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(Self { a, b, c, d })
    }

    /// Recognizes the exact normal-form shape.
    pub fn from_matrix(m: &IntMatrix) -> Option<Self> {
        if (m.rows(), m.cols()) != (3, 3) {
            return None;
        }
        let shape_ok = m.get(0, 2).is_one()
            && m.get(1, 2).is_zero()
            && m.get(2, 0).is_zero()
            && m.get(2, 1).is_zero()
            && m.get(2, 2).is_one();
        if !shape_ok {
            return None;
        }
        Self::new(
            m.get(0, 0).clone(),
            m.get(1, 0).clone(),
            m.get(0, 1).clone(),
            m.get(1, 1).clone(),
        )
        .ok()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::embed_upper_left(&self.block());
        m.set(0, 2, BigInt::one());
        m
    }

    /// `[[a, c], [b, d]]`
    pub fn block(&self) -> IntMatrix {
        IntMatrix::from_big_rows(vec![
            vec![self.a.clone(), self.c.clone()],
            vec![self.b.clone(), self.d.clone()],
        ])
        .expect("2x2")
    }
}

/// Framing of the 2-handle attached along the meridian: the constant block
/// `[[a, c], [b, d]]`, always in `SL(2, Z)`.
pub fn framing_block(n: &NormalForm) -> IntMatrix {
    n.block()
}

/// `N₀ = [[1, 0, 1], [0, 1, 0], [0, 0, 1]]`.
pub fn standard_form() -> IntMatrix {
    standard_matrix().matrix().clone()
}

/// `(L₁·L₂·…) · input · (R₁·R₂·…) = output`.
///
/// `left_factors[0]` is the outermost left multiplier, `right_factors[0]` the
/// innermost right multiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub input: GluingMatrix,
    pub left_factors: Vec<IntMatrix>,
    pub right_factors: Vec<IntMatrix>,
    pub output: IntMatrix,
}

/// First reason a certificate fails to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateFault {
    LeftFactor(usize),
    RightFactor(usize),
    ProductMismatch,
}

impl std::fmt::Display for CertificateFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertificateFault::LeftFactor(i) => write!(f, "left factor {i} is not extendable"),
            CertificateFault::RightFactor(i) => write!(f, "right factor {i} is not extendable"),
            CertificateFault::ProductMismatch => {
                write!(f, "product of factors and input does not equal output")
            }
        }
    }
}

impl ReductionCertificate {
    pub fn identity(input: GluingMatrix) -> Self {
        let output = input.matrix().clone();
        Self {
            input,
            left_factors: Vec::new(),
            right_factors: Vec::new(),
            output,
        }
    }

    pub fn check(&self) -> std::result::Result<(), CertificateFault> {
        if let Some(i) = self.left_factors.iter().position(|m| !is_extendable(m)) {
            return Err(CertificateFault::LeftFactor(i));
        }
        if let Some(i) = self.right_factors.iter().position(|m| !is_extendable(m)) {
            return Err(CertificateFault::RightFactor(i));
        }
        let product = self
            .left_factors
            .iter()
            .rev()
            .try_fold(self.input.matrix().clone(), |acc, l| l.multiply(&acc))
            .and_then(|acc| {
                self.right_factors
                    .iter()
                    .try_fold(acc, |acc, r| acc.multiply(r))
            });
        match product {
            Ok(p) if p == self.output => Ok(()),
            _ => Err(CertificateFault::ProductMismatch),
        }
    }

    /// Normal form reached by the certificate, if its output has that shape.
    pub fn normal_form(&self) -> Option<NormalForm> {
        NormalForm::from_matrix(&self.output)
    }
}

pub fn verify_certificate(cert: &ReductionCertificate) -> bool {
    cert.check().is_ok()
}

fn check_reducible(m: &GluingMatrix) -> Result<()> {
    if m.det() != 1 {
        return Err(Error::OrientationReversing);
    }
    let gcd = m.meridian_gcd();
    if !gcd.is_one() {
        return Err(Error::NotHomologyHopf {
            g: m.g().clone(),
            h: m.h().clone(),
            gcd,
        });
    }
    Ok(())
}

/// Reduces a determinant-one homology-Hopf gluing matrix to normal form.
///
/// Three moves, always in this order, each skipped only when its factor is
/// the identity:
/// 1. left-multiply by `u ∈ SL(2, Z)` (upper-left block) carrying `(g, h)` to `(1, 0)`;
/// 2. left-multiply by the shear adding `−(k − 1)` times row 1 to row 3, making `k = 1`;
/// 3. right-multiply by the shear adding `−e`, `−f` times column 3 to columns 1, 2.
pub fn reduce_to_normal_form(m: &GluingMatrix) -> Result<(NormalForm, ReductionCertificate)> {
    check_reducible(m)?;
    let mut left: Vec<IntMatrix> = Vec::new();
    let mut right: Vec<IntMatrix> = Vec::new();
    let mut current = m.matrix().clone();

    let carry = sl2_carry_to_e1(m.g(), m.h())?;
    let carry = IntMatrix::embed_upper_left(carry.matrix());
    if carry != IntMatrix::identity(3) {
        current = carry.multiply(&current)?;
        left.insert(0, carry);
    }

    let k_minus_one = current.get(2, 2) - BigInt::one();
    if !k_minus_one.is_zero() {
        let mut shear = IntMatrix::identity(3);
        shear.set(2, 0, -k_minus_one);
        current = shear.multiply(&current)?;
        left.insert(0, shear);
    }

    let (e, f) = (current.get(2, 0).clone(), current.get(2, 1).clone());
    if !e.is_zero() || !f.is_zero() {
        let mut shear = IntMatrix::identity(3);
        shear.set(2, 0, -e);
        shear.set(2, 1, -f);
        current = current.multiply(&shear)?;
        right.push(shear);
    }

    let cert = ReductionCertificate {
        input: m.clone(),
        left_factors: left,
        right_factors: right,
        output: current,
    };
    let form = cert.normal_form().ok_or_else(|| {
        Error::ReductionMismatch(format!("{} is not in normal form", cert.output))
    })?;
    if let Err(fault) = cert.check() {
        return Err(Error::ReductionMismatch(fault.to_string()));
    }
    Ok((form, cert))
}

/// Continues past the normal form to `N₀` by right-multiplying with the
/// extendable embedding `[[d, −c, 0], [−b, a, 0], [0, 0, 1]]` of the block inverse.
pub fn reduce_to_standard(m: &GluingMatrix) -> Result<ReductionCertificate> {
    let (form, mut cert) = reduce_to_normal_form(m)?;
    let NormalForm { a, b, c, d } = form;
    let inverse_block = IntMatrix::from_big_rows(vec![vec![d, -c], vec![-b, a]])?;
    let undo = IntMatrix::embed_upper_left(&inverse_block);
    if undo != IntMatrix::identity(3) {
        cert.output = cert.output.multiply(&undo)?;
        cert.right_factors.push(undo);
    }
    if cert.output != standard_form() {
        return Err(Error::ReductionMismatch(format!(
            "expected N0, reached {}",
            cert.output
        )));
    }
    if let Err(fault) = cert.check() {
        return Err(Error::ReductionMismatch(fault.to_string()));
    }
    Ok(cert)
}
