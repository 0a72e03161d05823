//! Exact integer linear algebra.

mod gcd;
mod matrix;
mod random;
mod snf;

pub use gcd::{complete_primitive_to_sl3, extended_gcd, gcd, sl2_carry_to_e1};
pub use matrix::{determinant, inverse_unimodular, multiply, IntMatrix, UnimodularMatrix};
pub use random::{random_sl3, random_sl3_from};
pub use snf::{gcd_of_k_minors, smith_normal_form, SnfResult};
