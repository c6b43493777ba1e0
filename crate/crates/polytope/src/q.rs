use std::collections::BTreeSet;

use hyp6_exact::LorentzMatrix;
use num_traits::Zero;

use crate::{build_polytope, PolytopeError, RightAngledPolytope};

/// A side of Qⁿ: the image k·u of a non-coordinate side u of Pⁿ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QSide {
    /// Index of the base side of Pⁿ (0-based, ≥ n).
    pub base_side: usize,
    /// Sign changes on the space coordinates; bit t negates coordinate t+1.
    pub k: u8,
    /// Large sides have two nonzero space coordinates (four copies).
    pub large: bool,
}

#[derive(Debug, Clone)]
pub struct QPolytope {
    pub base: RightAngledPolytope,
    pub polytope: RightAngledPolytope,
    pub sides: Vec<QSide>,
}

/// diag(±1,…,±1, 1) with the signs of `k` on the space coordinates.
pub fn k_matrix(n: usize, k: u8) -> LorentzMatrix {
    let mut d = vec![1i64; n + 1];
    for (t, x) in d.iter_mut().enumerate().take(n) {
        if k >> t & 1 == 1 {
            *x = -1;
        }
    }
    LorentzMatrix::diag(&d)
}

impl QPolytope {
    pub fn dim(&self) -> usize {
        self.base.dim
    }

    pub fn num_sides(&self) -> usize {
        self.sides.len()
    }

    /// Index of the Q side with base side `base` and sign pattern `k`;
    /// bits of `k` outside the support of the base normal are ignored.
    pub fn side_index(&self, base: usize, k: u8) -> Option<usize> {
        let u = k_matrix(self.dim(), k).apply(&self.base.normals[base]);
        self.polytope.normal_index(&u)
    }

    /// Permutation of Q sides induced by the sign change `k`.
    pub fn k_action(&self, k: u8) -> Vec<usize> {
        let m = k_matrix(self.dim(), k);
        self.polytope
            .normals
            .iter()
            .map(|u| {
                self.polytope
                    .normal_index(&m.apply(u))
                    .expect("K permutes the sides of Q")
            })
            .collect()
    }
}

/// Qⁿ = KⁿPⁿ for n ∈ {5, 6}. Sides run over the non-coordinate base sides
/// in order; within one base side the sign patterns b = 0, 1, 2, … flip
/// the supported space coordinates selected by the bits of b, lowest
/// coordinate first.
pub fn build_q(n: usize) -> Result<QPolytope, PolytopeError> {
    if !(5..=6).contains(&n) {
        return Err(PolytopeError::DimensionOutOfRange(n));
    }
    let base = build_polytope(n)?;
    let mut sides = Vec::new();
    let mut normals = Vec::new();
    for (j, u) in base.normals.iter().enumerate().skip(n) {
        let support: Vec<usize> = (0..n).filter(|&t| !u.coords()[t].is_zero()).collect();
        for b in 0u32..1 << support.len() {
            let mut k = 0u8;
            for (bit, &t) in support.iter().enumerate() {
                if b >> bit & 1 == 1 {
                    k |= 1 << t;
                }
            }
            normals.push(k_matrix(n, k).apply(u));
            sides.push(QSide {
                base_side: j,
                k,
                large: support.len() == 2,
            });
        }
    }
    let mut candidates = BTreeSet::new();
    for k in 0u16..1 << n {
        let m = k_matrix(n, k as u8);
        for v in base.vertices() {
            candidates.insert(m.apply(v));
        }
    }
    let polytope = RightAngledPolytope::from_parts(n, normals, candidates)?;
    Ok(QPolytope {
        base,
        polytope,
        sides,
    })
}
