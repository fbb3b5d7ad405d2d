//! Exact arithmetic in the cyclotomic field `Q(zeta_m)` and exact dense
//! linear algebra over it.
//!
//! Elements are coefficient vectors in the power basis
//! `1, zeta, ..., zeta^(phi(m)-1)` reduced modulo the m-th cyclotomic
//! polynomial, with arbitrary-precision rational coefficients. Nothing in
//! this module rounds.

mod charpoly;
mod elt;
mod matrix;
mod nullspace;

pub use charpoly::charpoly;
pub use elt::{zeta_power, CycloElt, CycloField, Rational, MAX_FIELD_DEGREE};
pub use matrix::CycloMatrix;
pub use nullspace::{nullspace, nullspace_sparse, Nullspace, SparseRow};

use thiserror::Error;

/// Cap on the matrix dimension accepted by [`charpoly`].
pub const CHARPOLY_DIM_BOUND: usize = 64;

/// Cap on the column count accepted by [`nullspace`].
pub const NULLSPACE_COL_BOUND: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("{s} is not coprime to {m} (gcd = {g}): not a Galois automorphism")]
    NotCoprime { s: u64, m: u64, g: u64 },
    #[error("Q(zeta_{m}) has degree {degree}, above the supported {bound}")]
    DegreeBound { m: u64, degree: u64, bound: u64 },
    #[error("matrix dimension {dim} exceeds the bound {bound} for this operation")]
    MatrixBound { dim: usize, bound: usize },
    #[error("matrix is not a permutation matrix")]
    NotAPermutation,
}

#[cfg(test)]
mod tests;
