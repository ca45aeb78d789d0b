//! Exact symmetry classes of polynomials and tensors for the dicyclic groups `T_{4n}`.
//!
//! The crate builds the ordinary and Brauer characters of `T_{4n}`, forms
//! symmetrized monomials and decomposable symmetrized tensors as exact vectors
//! over `Q(ζ_{4n})`, evaluates their Gram matrices both by direct expansion and
//! by closed-form group sums, and decides whether each symmetry class has an
//! orthogonal basis made of symmetrized elements.

pub mod cli;
pub mod cyclotomic;
pub mod dicyclic;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod obasis;
pub mod orbits;
pub mod symmetrize;

pub use error::{Result, SymclassError};
