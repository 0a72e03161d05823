//! Exact integer calculus for 4-manifolds glued from two copies of `T²×D²`,
//! in particular logarithmic transformations on two fibers of the Hopf
//! surface `S¹×S³`.
//!
//! * [`linalg`]: arbitrary-precision matrices, Smith normal form, Bézout
//!   completions.
//! * [`abelian`]: finitely generated abelian groups from relation matrices.
//! * [`hopf`]: gluing matrices, `π₁`, homology-Hopf classification and
//!   certified reduction to normal form.
//! * [`enumeration`]: parameter sweeps.
//! * [`cli`]: the `hopf` command-line front end and its JSON/CSV formats.

pub mod abelian;
pub mod cli;
pub mod enumeration;
mod error;
pub mod hopf;
pub mod linalg;

pub use error::{Error, Result};
