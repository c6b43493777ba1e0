//! Right-angled polytopes Pⁿ = ΣⁿΔⁿ and Qⁿ = KⁿPⁿ, their canonical side
//! orders, vertex sets and complete face lattices.

mod construct;
mod face;
mod identities;
mod polytope;
mod q;

pub use construct::{build_polytope, canonical_side_order, cross_check_tables};
pub use face::{EdgeKind, Face, FaceLattice};
pub use identities::{reflection_group_euler_characteristic, verify_face_identities, FaceIdentityReport};
pub use polytope::RightAngledPolytope;
pub use q::{build_q, k_matrix, QPolytope, QSide};

use hyp6_coxeter::CoxeterError;
use hyp6_data::DataError;
use hyp6_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("dimension {0} outside the supported range")]
    DimensionOutOfRange(usize),
    #[error("side normal {0} is not a unit spacelike vector")]
    NonUnitNormal(String),
    #[error("point {point} lies outside the half-space of side {side}")]
    Outside { point: String, side: usize },
    #[error("side set {sides:?} has incident vertices spanning rank {rank}, expected {expected}")]
    InconsistentIncidence {
        sides: Vec<usize>,
        rank: usize,
        expected: usize,
    },
    #[error("side set {sides:?} is not maximal: side {extra} contains the same vertices")]
    NonMaximalSideSet { sides: Vec<usize>, extra: usize },
    #[error("face identity fails for k={k}: {lhs} != {rhs}")]
    IdentityViolation { k: usize, lhs: String, rhs: String },
    #[error("generated polytope disagrees with the embedded tables: {0}")]
    TableMismatch(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Data(#[from] DataError),
}
