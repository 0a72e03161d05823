use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible shapes: {left_rows}x{left_cols} and {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },

    #[error("vector is not primitive (gcd of entries is {gcd})")]
    NotPrimitive { gcd: BigInt },

    #[error("minor order {k} is out of range for a {rows}x{cols} matrix")]
    MinorOrderOutOfRange { k: usize, rows: usize, cols: usize },

    #[error("not a homology Hopf surface: gcd(g, h) = gcd({g}, {h}) = {gcd}")]
    NotHomologyHopf { g: BigInt, h: BigInt, gcd: BigInt },

    #[error("gluing matrix has determinant -1; flip the meridian with normalize_to_sl3 first")]
    OrientationReversing,

    #[error("reduction ended at an unexpected matrix: {0}")]
    ReductionMismatch(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid document: {0}")]
    Document(String),
}
