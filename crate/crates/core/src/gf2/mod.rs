//! Linear algebra over GF(2).
//!
//! Vectors and matrices are word-packed; row elimination works a machine
//! word at a time. Polynomials support exactly what period certification
//! needs: Berlekamp–Massey minimal polynomials, irreducibility, and the
//! multiplicative order of `x` in `GF(2)[x]/(p)`.

mod matrix;
mod poly;
mod vector;

pub use matrix::BitMatrix;
pub use poly::{
    berlekamp_massey, mersenne_factors, min_poly, poly_order, F2Poly, PolyOrder, DEFAULT_PROBES,
};
pub use vector::BitVector;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("minimal polynomial probe failed after {trials} trials; retry with more trials")]
    ProbeFailure { trials: usize },
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("polynomial {0} is reducible or has no invertible root")]
    Reducible(String),
    #[error("bad factorization: {0}")]
    BadFactorization(String),
    #[error("invalid hex: {0}")]
    InvalidHex(String),
}

/// GF(2) row rank.
pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

pub fn mat_mul(m: &BitMatrix, n: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
    m.mul(n)
}

pub fn mat_pow(m: &BitMatrix, e: u64) -> Result<BitMatrix, Gf2Error> {
    m.pow(e)
}
