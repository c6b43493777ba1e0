//! Library side of the `hyp6` command: the embedded manifold records, the
//! reproduction suite behind `hyp6 report` and its test oracles.

pub mod oracle;
pub mod records;
pub mod suite;

use hyp6_coxeter::CoxeterError;
use hyp6_data::DataError;
use hyp6_exact::ExactError;
use hyp6_homology::HomologyError;
use hyp6_pairing::PairingError;
use hyp6_polytope::PolytopeError;
use hyp6_verify::VerifyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed record for manifold {id}: {msg}")]
    Record { id: usize, msg: String },
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}
