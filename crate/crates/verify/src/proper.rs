use hyp6_pairing::{trace_face_cycles, CornerGluing, CycleViolation};
use hyp6_polytope::FaceLattice;
use serde::Serialize;

use crate::VerifyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStats {
    pub dim: usize,
    pub orbits: usize,
    pub corners: usize,
    pub expected_length: usize,
    /// (cycle length, number of cycles), ascending by length.
    pub lengths: Vec<(usize, usize)>,
}

/// First violating face cycle. Sides are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: String,
    pub dim: usize,
    pub copy: usize,
    pub sides: Vec<usize>,
    pub length: Option<usize>,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropernessCertificate {
    pub proper: bool,
    pub incomplete: bool,
    pub violations: usize,
    pub cycles: Vec<CycleStats>,
    pub witness: Option<Witness>,
}

impl PropernessCertificate {
    pub fn orbits(&self, dim: usize) -> usize {
        self.cycles.get(dim).map_or(0, |c| c.orbits)
    }
}

/// Trace every face cycle with exact placements; proper iff each k-face
/// cycle has 2^{n−k} corners and returns with trivial holonomy.
pub fn face_cycles_proper<G: CornerGluing + ?Sized>(
    gluing: &G,
    lattice: &FaceLattice,
) -> Result<PropernessCertificate, VerifyError> {
    let report = trace_face_cycles(gluing, lattice)?;
    let witness = report.violations.first().map(|v| {
        let (kind, dim, copy, face, length) = match *v {
            CycleViolation::WrongLength {
                dim,
                copy,
                face,
                length,
                ..
            } => ("wrong cycle length", dim, copy, face, Some(length)),
            CycleViolation::Holonomy { dim, copy, face } => ("nontrivial holonomy", dim, copy, face, None),
            CycleViolation::Overflow { dim, copy, face } => ("unbounded placements", dim, copy, face, None),
        };
        Witness {
            kind: kind.to_string(),
            dim,
            copy,
            sides: lattice.face(face).sides.iter().map(|s| s + 1).collect(),
            length,
            expected: 1 << (lattice.dim - dim),
        }
    });
    Ok(PropernessCertificate {
        proper: report.is_proper(),
        incomplete: report.incomplete,
        violations: report.violations.len(),
        cycles: report
            .stats
            .iter()
            .map(|s| CycleStats {
                dim: s.dim,
                orbits: s.orbits,
                corners: s.corners,
                expected_length: s.expected_length,
                lengths: s.lengths.iter().map(|(&l, &c)| (l, c)).collect(),
            })
            .collect(),
        witness,
    })
}
