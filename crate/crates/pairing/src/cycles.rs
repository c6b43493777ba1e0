use std::collections::BTreeMap;

use hyp6_exact::{ExactError, SmallMatrix};
use hyp6_polytope::FaceLattice;

use crate::PairingError;

/// What happens when a corner crosses one of its sides.
#[derive(Debug, Clone, Copy)]
pub struct Crossing<'a> {
    /// Copy of the polytope on the other side.
    pub copy: usize,
    /// Right factor applied to the placement of the current copy.
    pub step: &'a SmallMatrix,
    /// How side indices of the current copy map to the new one.
    pub side_map: &'a [usize],
}

/// A gluing of one or more copies of a polytope along sides. `cross`
/// returns `None` for sides not yet paired.
pub trait CornerGluing {
    fn copies(&self) -> usize;
    fn cross(&self, copy: usize, side: usize) -> Option<Crossing<'_>>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleViolation {
    /// The cycle of a k-face has the wrong number of corners.
    WrongLength {
        dim: usize,
        copy: usize,
        face: usize,
        length: usize,
        expected: usize,
    },
    /// A corner was reached with two different placements.
    Holonomy { dim: usize, copy: usize, face: usize },
    /// Placements grew beyond machine integers; cannot happen in a proper
    /// cycle, where every placement contains the base face.
    Overflow { dim: usize, copy: usize, face: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimStats {
    pub dim: usize,
    pub corners: usize,
    pub orbits: usize,
    pub expected_length: usize,
    /// Cycle length → number of cycles.
    pub lengths: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub stats: Vec<DimStats>,
    pub violations: Vec<CycleViolation>,
    /// Some crossing had no pairing.
    pub incomplete: bool,
}

impl CycleReport {
    pub fn is_proper(&self) -> bool {
        self.violations.is_empty() && !self.incomplete
    }

    pub fn orbits(&self, dim: usize) -> usize {
        self.stats.get(dim).map_or(0, |s| s.orbits)
    }
}

pub(crate) struct Orbit {
    pub corners: Vec<(usize, usize)>,
    pub open: bool,
    pub violation: Option<CycleViolation>,
}

fn image_face(
    lattice: &FaceLattice,
    face: usize,
    map: &[usize],
) -> Result<usize, PairingError> {
    let mut sides: Vec<usize> = lattice.face(face).sides.iter().map(|&s| map[s]).collect();
    sides.sort_unstable();
    lattice.find(&sides).ok_or(PairingError::BadFaceImage(sides))
}

/// Breadth-first walk over the corners of one face cycle, carrying the
/// placement of each copy around the starting face. Stops early once
/// `limit` corners are exceeded.
pub(crate) fn trace_orbit<G: CornerGluing + ?Sized>(
    gluing: &G,
    lattice: &FaceLattice,
    copy: usize,
    face: usize,
    limit: usize,
    seen: &mut BTreeMap<(usize, usize), SmallMatrix>,
) -> Result<Orbit, PairingError> {
    let dim = lattice.face(face).dim;
    let size = lattice.dim + 1;
    seen.clear();
    seen.insert((copy, face), SmallMatrix::identity(size));
    let mut corners = vec![(copy, face)];
    let mut head = 0;
    let mut open = false;
    while head < corners.len() {
        let (c, f) = corners[head];
        head += 1;
        let h = seen[&(c, f)].clone();
        for &s in &lattice.face(f).sides {
            let Some(x) = gluing.cross(c, s) else {
                open = true;
                continue;
            };
            let f2 = image_face(lattice, f, x.side_map)?;
            let h2 = match h.mul(x.step) {
                Ok(m) => m,
                Err(ExactError::Overflow) => {
                    return Ok(Orbit {
                        corners,
                        open,
                        violation: Some(CycleViolation::Overflow { dim, copy, face }),
                    })
                }
                Err(e) => return Err(e.into()),
            };
            match seen.get(&(x.copy, f2)) {
                Some(old) if *old != h2 => {
                    return Ok(Orbit {
                        corners,
                        open,
                        violation: Some(CycleViolation::Holonomy { dim, copy, face }),
                    });
                }
                Some(_) => {}
                None => {
                    seen.insert((x.copy, f2), h2);
                    corners.push((x.copy, f2));
                    if corners.len() > limit {
                        let length = corners.len();
                        return Ok(Orbit {
                            corners,
                            open,
                            violation: Some(CycleViolation::WrongLength {
                                dim,
                                copy,
                                face,
                                length,
                                expected: 1 << (lattice.dim - dim),
                            }),
                        });
                    }
                }
            }
        }
    }
    let expected = 1usize << (lattice.dim - dim);
    let violation = (!open && corners.len() != expected).then(|| CycleViolation::WrongLength {
        dim,
        copy,
        face,
        length: corners.len(),
        expected,
    });
    Ok(Orbit {
        corners,
        open,
        violation,
    })
}

/// Trace every face cycle of dimension below n. A gluing is proper when
/// each k-face cycle has exactly 2^{n−k} corners and trivial holonomy.
pub fn trace_face_cycles<G: CornerGluing + ?Sized>(
    gluing: &G,
    lattice: &FaceLattice,
) -> Result<CycleReport, PairingError> {
    let n = lattice.dim;
    let nf = lattice.faces().len();
    let mut visited = vec![false; gluing.copies() * nf];
    let mut seen = BTreeMap::new();
    let mut stats = Vec::new();
    let mut violations = Vec::new();
    let mut incomplete = false;
    for dim in 0..n {
        let mut st = DimStats {
            dim,
            corners: 0,
            orbits: 0,
            expected_length: 1 << (n - dim),
            lengths: BTreeMap::new(),
        };
        for copy in 0..gluing.copies() {
            for &face in lattice.of_dim(dim) {
                if visited[copy * nf + face] {
                    continue;
                }
                let orbit = trace_orbit(gluing, lattice, copy, face, usize::MAX, &mut seen)?;
                incomplete |= orbit.open;
                for &(c, f) in &orbit.corners {
                    visited[c * nf + f] = true;
                }
                st.corners += orbit.corners.len();
                st.orbits += 1;
                *st.lengths.entry(orbit.corners.len()).or_insert(0) += 1;
                if let Some(v) = orbit.violation {
                    violations.push(v);
                }
            }
        }
        stats.push(st);
    }
    Ok(CycleReport {
        stats,
        violations,
        incomplete,
    })
}
