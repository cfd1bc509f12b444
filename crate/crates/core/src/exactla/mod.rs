//! Exact linear algebra over the rationals.
//!
//! The scalar type keeps small values on a machine-word fast path and
//! promotes to arbitrary precision only when an intermediate result
//! overflows, so nothing is ever rounded. Matrices are dense; all
//! elimination uses first-nonzero pivoting with no magnitude heuristics,
//! which makes every basis this module returns deterministic.

mod mat;
mod scalar;

pub use mat::{Cokernel, Mat, Rref};
pub use scalar::Scalar;
