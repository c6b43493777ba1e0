use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use hyp6_exact::linalg::IncrementalBasis;

use crate::{PolytopeError, RightAngledPolytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// One actual and one ideal endpoint.
    Ray,
    /// Two ideal endpoints.
    Line,
    /// Two actual endpoints.
    Segment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// The n − dim sides containing the face, ascending.
    pub sides: Vec<usize>,
    /// Incident vertices (combined index), ascending.
    pub vertices: Vec<usize>,
    pub edge_kind: Option<EdgeKind>,
}

/// All faces of a right-angled polytope, including the polytope itself
/// (dimension n, no sides). Faces are sorted by dimension, then side set.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub dim: usize,
    num_sides: usize,
    faces: Vec<Face>,
    index: HashMap<Vec<usize>, usize>,
    by_dim: Vec<Vec<usize>>,
}

impl FaceLattice {
    /// Enumerate faces top-down as pairwise-perpendicular side sets with a
    /// nonempty common vertex set, checking dimension and maximality.
    pub fn enumerate(p: &RightAngledPolytope) -> Result<Self, PolytopeError> {
        let m = p.num_sides();
        let n = p.dim;
        let mut perp = vec![FixedBitSet::with_capacity(m); m];
        for (i, j) in p.perpendicular_pairs() {
            perp[i].insert(j);
            perp[j].insert(i);
        }
        let vectors: Vec<Vec<_>> = p.vertices().map(|v| v.coords().to_vec()).collect();
        let mut all = FixedBitSet::with_capacity(p.num_vertices());
        all.insert_range(..);
        let mut sides_all = FixedBitSet::with_capacity(m);
        sides_all.insert_range(..);

        let mut faces = Vec::new();
        // (sides, common vertices, sides perpendicular to all of them)
        let mut stack = vec![(Vec::new(), all, sides_all)];
        while let Some((t, vs, allowed)) = stack.pop() {
            let face = make_face(p, &vectors, &t, &vs)?;
            faces.push(face);
            if t.len() == n {
                continue;
            }
            let start = t.last().map_or(0, |&s| s + 1);
            for s in allowed.ones().filter(|&s| s >= start) {
                let mut vs2 = vs.clone();
                vs2.intersect_with(p.incidence(s));
                if vs2.is_clear() {
                    continue;
                }
                let mut t2 = t.clone();
                t2.push(s);
                let mut allowed2 = allowed.clone();
                allowed2.intersect_with(&perp[s]);
                stack.push((t2, vs2, allowed2));
            }
        }
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.sides.cmp(&b.sides)));
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.sides.clone(), i))
            .collect();
        let mut by_dim = vec![Vec::new(); n + 1];
        for (i, f) in faces.iter().enumerate() {
            by_dim[f.dim].push(i);
        }
        Ok(FaceLattice {
            dim: n,
            num_sides: m,
            faces,
            index,
            by_dim,
        })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    /// Face with exactly this (ascending) side set.
    pub fn find(&self, sides: &[usize]) -> Option<usize> {
        self.index.get(sides).copied()
    }

    pub fn of_dim(&self, d: usize) -> &[usize] {
        &self.by_dim[d]
    }

    /// Number of faces of each dimension 0..=n.
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn edge_kind_counts(&self) -> HashMap<EdgeKind, usize> {
        let mut out = HashMap::new();
        for &i in self.of_dim(1) {
            if let Some(k) = self.faces[i].edge_kind {
                *out.entry(k).or_insert(0) += 1;
            }
        }
        out
    }

    /// Codimension-one faces of `id`: the faces with one more side.
    pub fn facets_of(&self, id: usize) -> Vec<usize> {
        let f = &self.faces[id];
        if f.dim == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for s in 0..self.num_sides {
            let Err(pos) = f.sides.binary_search(&s) else {
                continue;
            };
            let mut t = f.sides.clone();
            t.insert(pos, s);
            if let Some(g) = self.find(&t) {
                out.push(g);
            }
        }
        out
    }

    /// Pairs i < j of sides meeting in a codimension-two face.
    pub fn adjacency_graph(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .of_dim(self.dim.saturating_sub(2))
            .iter()
            .map(|&i| (self.faces[i].sides[0], self.faces[i].sides[1]))
            .collect();
        out.sort();
        out
    }
}

fn make_face(
    p: &RightAngledPolytope,
    vectors: &[Vec<hyp6_exact::BigInt>],
    t: &[usize],
    vs: &FixedBitSet,
) -> Result<Face, PolytopeError> {
    let n = p.dim;
    let dim = n - t.len();
    let vertices: Vec<usize> = vs.ones().collect();
    let mut basis = IncrementalBasis::new();
    for &v in &vertices {
        basis.insert(&vectors[v]);
        if basis.rank() > dim + 1 {
            break;
        }
    }
    let ok = if dim == 0 {
        vertices.len() == 1 && !p.is_ideal(vertices[0])
    } else {
        basis.rank() == dim + 1
    };
    if !ok {
        return Err(PolytopeError::InconsistentIncidence {
            sides: t.to_vec(),
            rank: basis.rank(),
            expected: dim + 1,
        });
    }
    for s in 0..p.num_sides() {
        if t.contains(&s) {
            continue;
        }
        if vs.is_subset(p.incidence(s)) {
            return Err(PolytopeError::NonMaximalSideSet {
                sides: t.to_vec(),
                extra: s,
            });
        }
    }
    let edge_kind = (dim == 1).then(|| {
        let ideal = vertices.iter().filter(|&&v| p.is_ideal(v)).count();
        match ideal {
            0 => EdgeKind::Segment,
            1 => EdgeKind::Ray,
            _ => EdgeKind::Line,
        }
    });
    Ok(Face {
        dim,
        sides: t.to_vec(),
        vertices,
        edge_kind,
    })
}
