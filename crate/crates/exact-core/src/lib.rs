//! Exact arithmetic substrate: integer Lorentzian vectors and matrices,
//! packed GF(2) matrices, and Smith normal form over the integers.

pub mod gf2;
pub mod linalg;
pub mod lorentz;
pub mod small;
pub mod snf;

pub use gf2::{gf2_solve, Gf2Matrix, Gf2Solve, Gf2Vector};
pub use lorentz::{lorentz_inner, reflection_in, LorentzMatrix, LorentzVector, VectorKind};
pub use small::SmallMatrix;
pub use snf::{invariant_factors_sparse, smith_normal_form, IntMatrix, SmithDecomposition, SparseIntMatrix};

pub use num_bigint::BigInt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("vector must have at least two coordinates")]
    TooShort,
    #[error("reflection normal must have Lorentzian norm 1, got {0}")]
    NonUnitNormal(BigInt),
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("matrix is not square")]
    NotSquare,
    #[error("ragged rows")]
    Ragged,
    #[error("integer overflow in small-matrix arithmetic")]
    Overflow,
    #[error("order exceeds bound {0}")]
    OrderBound(u32),
}

/// Greatest common divisor of a slice, always non-negative.
pub fn content(xs: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    use num_traits::Zero;
    xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}
