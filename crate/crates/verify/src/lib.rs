//! Certificates for side-pairings of 8P⁶ and Q⁶: properness by face
//! cycles, and the GF(2) route to torsion-freeness through the code matrix.

mod certify;
mod code_matrix;
mod proper;
mod torsion;

pub use certify::{certify, certify_manifold, euler_characteristic_chain, ChiChain, ManifoldCertificate, VerifyContext};
pub use code_matrix::{build_code_matrix, CodeMatrix};
pub use proper::{face_cycles_proper, CycleStats, PropernessCertificate, Witness};
pub use torsion::{
    coset_check, orbit_certify, sigma_star_on_v, torsion_free_h, CosetCertificate, FaceKind, HCertificate,
    OrbitCertificate, OrbitVerdict, TorsionMode,
};

use hyp6_coxeter::CoxeterError;
use hyp6_data::DataError;
use hyp6_exact::ExactError;
use hyp6_pairing::PairingError;
use hyp6_polytope::PolytopeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("code matrix needs a 21-digit code for Q6, got dimension {0}")]
    CodeDimension(usize),
    #[error("V is not invariant under sigma: image of v{0} leaves V")]
    NotInvariant(usize),
    #[error("{what}: expected {expected}, got {got}")]
    Mismatch {
        what: String,
        expected: String,
        got: String,
    },
    #[error("no manifold with id {0} (valid ids are 1..9)")]
    UnknownManifold(usize),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Data(#[from] DataError),
}
