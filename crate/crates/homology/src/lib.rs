//! Integral homology of the hyperbolic 6-manifolds glued from eight
//! copies of P⁶, and of their cusp cross-sections.

mod complex;
mod groups;
mod truncate;

pub use complex::{build_quotient_complex, cusp_sections, ComplexExport, QuotientCell, QuotientCellComplex};
pub use groups::{homology_groups, HomologyGroup, HomologyGroups};
pub use truncate::{CellKind, TruncatedCell, TruncatedPolytope, CUT_SCALE};

use hyp6_pairing::PairingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("cell {0} of the truncated polytope has a degenerate frame")]
    DegenerateFrame(usize),
    #[error("boundary of boundary is nonzero in degree {0}")]
    BoundarySquare(usize),
    #[error("cell ({copy}, {cell}) is identified with itself with reversed orientation")]
    OrientationClash { copy: usize, cell: usize },
    #[error("Abar does not permute the cells of the truncated polytope")]
    NotEquivariant,
    #[error("pairing is not proper: {0}")]
    NotProper(String),
    #[error(transparent)]
    Pairing(#[from] PairingError),
}
