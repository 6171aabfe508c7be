//! Exact dense linear algebra over a prime field.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, Fp, DEFAULT_CHAR};
pub use matrix::{poly_eval, poly_roots, Matrix};
pub use subspace::Subspace;
