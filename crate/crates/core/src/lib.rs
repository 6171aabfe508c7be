//! Computational engine for preprojective algebras of Dynkin type.
//!
//! The crate builds the algebras as graded structure-constant algebras, works
//! out their finite-dimensional module categories over a prime field, and
//! classifies (weakly) homological embeddings through Weyl group combinatorics.

pub mod error;
pub mod algebra;
pub mod classify;
pub mod linalg;
pub mod modrep;
pub mod quiver;
pub mod weyl;

pub use error::{Error, Result};
