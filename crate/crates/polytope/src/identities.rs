use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{FaceLattice, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceIdentityReport {
    pub dim: usize,
    /// (k, a_k(Pⁿ), a_{n−1}(Pⁿ)·a_k(P^{n−1})/(n−k)) for 1 ≤ k ≤ n−2.
    pub checks: Vec<(usize, usize, BigRational)>,
    pub euler_characteristic: BigRational,
}

/// χ of the reflection group of a right-angled polytope: the sum over all
/// faces F (the polytope included, ideal vertices excluded) of
/// (−1/2)^{codim F}.
pub fn reflection_group_euler_characteristic(lattice: &FaceLattice) -> BigRational {
    let n = lattice.dim;
    let counts = lattice.counts();
    let mut chi = BigRational::zero();
    for (d, &c) in counts.iter().enumerate() {
        let codim = (n - d) as u32;
        let term = BigRational::new(BigInt::from(c), BigInt::from(2).pow(codim));
        if codim % 2 == 0 {
            chi += term;
        } else {
            chi -= term;
        }
    }
    chi
}

/// Check a_k(Pⁿ) = a_{n−1}(Pⁿ)·a_k(P^{n−1})/(n−k): every k-face lies on
/// n−k sides and every side is a copy of P^{n−1}.
pub fn verify_face_identities(
    pn: &FaceLattice,
    pn1: Option<&FaceLattice>,
) -> Result<FaceIdentityReport, PolytopeError> {
    let n = pn.dim;
    let a = pn.counts();
    let mut checks = Vec::new();
    if n >= 3 {
        let b = pn1
            .ok_or(PolytopeError::DimensionOutOfRange(n - 1))?
            .counts();
        for k in 1..=n - 2 {
            let rhs = BigRational::new(BigInt::from(a[n - 1] * b[k]), BigInt::from(n - k));
            if rhs != BigRational::from_integer(BigInt::from(a[k])) {
                return Err(PolytopeError::IdentityViolation {
                    k,
                    lhs: a[k].to_string(),
                    rhs: rhs.to_string(),
                });
            }
            checks.push((k, a[k], rhs));
        }
    }
    Ok(FaceIdentityReport {
        dim: n,
        checks,
        euler_characteristic: reflection_group_euler_characteristic(pn),
    })
}
