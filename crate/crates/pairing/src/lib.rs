//! Side-pairings of Qⁿ and of 8P⁶: base-64 codes, pairing arrays,
//! development of 8P⁶ onto Q⁶, restriction to Q⁵, and face-cycle tracing.

mod context;
mod cycles;
mod develop;
mod digit;
mod eightp;
mod qpairing;
mod restrict;
mod search;

pub use context::{P6Context, QContext};
pub use cycles::{trace_face_cycles, CornerGluing, Crossing, CycleReport, CycleViolation, DimStats};
pub use develop::{develop_to_q, Development, Placement};
pub use digit::{decode_digit, encode_digit, orientability_of_code, KElement, PairingCode, ALPHABET};
pub use eightp::{parse_8p_pairing, EightPGluing, EightPPairing, COPIES, SIDES};
pub use qpairing::{decode_q_code, QGluing, QSidePairing};
pub use restrict::{restrict_code, restrict_pairing};
pub use search::{search_pairings, search_pairings_until, SearchConstraints, SearchOutcome};

use hyp6_coxeter::CoxeterError;
use hyp6_exact::ExactError;
use hyp6_polytope::PolytopeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PairingError {
    #[error("character {0:?} is not a base-64 code digit")]
    InvalidDigit(char),
    #[error("digit {digit:?} has value {value}, too large for dimension {dim}")]
    DigitOutOfRange { digit: char, value: u8, dim: usize },
    #[error("code has {got} digits, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("no code convention for dimension {0}")]
    UnsupportedDimension(usize),
    #[error("row {row}, column {col}: malformed token {token:?}")]
    MalformedToken { row: usize, col: usize, token: String },
    #[error("pairing array must be 8 rows of 27 tokens, found {rows} rows (row {bad_row} has {cols} tokens)")]
    BadShape { rows: usize, bad_row: usize, cols: usize },
    #[error("row {row}, column {col}: polytope index {k} outside 1..8")]
    PolytopeIndex { row: usize, col: usize, k: u32 },
    #[error("row {row}, column {col}: power {p} outside 0..7")]
    Power { row: usize, col: usize, p: u32 },
    #[error("involution law fails at polytope {i}, side {j}")]
    InvolutionViolation { i: usize, j: usize },
    #[error("partner of Q side {0} is not a side of Q")]
    PartnerLookup(usize),
    #[error("side {side} of Q: {what}")]
    BadQPairing { side: usize, what: String },
    #[error("development conflict at sign pattern {k:#08b}")]
    DevelopmentConflict { k: u8 },
    #[error("development covers {0} copies of P6, expected 64")]
    IncompleteCover(usize),
    #[error("boundary crossing at copy {k:#08b}, side {side} matches {matches} Q pairings")]
    AmbiguousDigit { k: u8, side: usize, matches: usize },
    #[error("base side {base} receives inconsistent digits {a} and {b}")]
    InconsistentDigit { base: usize, a: u8, b: u8 },
    #[error("base side {0} receives no digit")]
    MissingDigit(usize),
    #[error("Q side {0}: pairing does not preserve the cross-section x1 = 0")]
    InvarianceViolation(usize),
    #[error("face image {0:?} is not a face")]
    BadFaceImage(Vec<usize>),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
