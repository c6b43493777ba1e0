use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use hyp6_exact::{linalg, BigInt, LorentzVector, VectorKind};
use num_traits::{One, Signed, Zero};

use crate::PolytopeError;

/// A finite-volume right-angled polytope given by ordered outward unit
/// normals and its actual and ideal vertices.
#[derive(Debug, Clone)]
pub struct RightAngledPolytope {
    pub dim: usize,
    pub normals: Vec<LorentzVector>,
    /// Timelike vertices, lexicographically sorted.
    pub actual_vertices: Vec<LorentzVector>,
    /// Lightlike vertices, lexicographically sorted.
    pub ideal_vertices: Vec<LorentzVector>,
    /// `incidence[i]` holds the vertices v with ⟨u_i, v⟩ = 0; vertices are
    /// numbered actual first, then ideal.
    incidence: Vec<FixedBitSet>,
    normal_index: HashMap<LorentzVector, usize>,
    vertex_index: HashMap<LorentzVector, usize>,
}

impl RightAngledPolytope {
    /// Validate `normals` and keep the candidate points at which the
    /// incident normals have full rank n.
    pub fn from_parts<I>(dim: usize, normals: Vec<LorentzVector>, candidates: I) -> Result<Self, PolytopeError>
    where
        I: IntoIterator<Item = LorentzVector>,
    {
        for u in &normals {
            if !u.norm().is_one() {
                return Err(PolytopeError::NonUnitNormal(u.to_string()));
            }
        }
        let mut actual = BTreeSet::new();
        let mut ideal = BTreeSet::new();
        for c in candidates {
            let c = c.primitive_point()?;
            let mut on: Vec<Vec<BigInt>> = Vec::new();
            for (i, u) in normals.iter().enumerate() {
                let ip = u.inner(&c)?;
                if ip.is_positive() {
                    return Err(PolytopeError::Outside {
                        point: c.to_string(),
                        side: i + 1,
                    });
                }
                if ip.is_zero() {
                    on.push(u.coords().to_vec());
                }
            }
            if linalg::rank(&on) < dim {
                continue;
            }
            match c.kind() {
                VectorKind::Timelike => {
                    actual.insert(c);
                }
                VectorKind::Lightlike => {
                    ideal.insert(c);
                }
                VectorKind::Spacelike => {
                    return Err(PolytopeError::Outside {
                        point: c.to_string(),
                        side: 0,
                    })
                }
            }
        }
        let actual_vertices: Vec<_> = actual.into_iter().collect();
        let ideal_vertices: Vec<_> = ideal.into_iter().collect();
        let nv = actual_vertices.len() + ideal_vertices.len();
        let all: Vec<&LorentzVector> = actual_vertices.iter().chain(ideal_vertices.iter()).collect();
        let mut incidence = Vec::with_capacity(normals.len());
        for u in &normals {
            let mut b = FixedBitSet::with_capacity(nv);
            for (k, v) in all.iter().enumerate() {
                if u.inner(v)?.is_zero() {
                    b.insert(k);
                }
            }
            incidence.push(b);
        }
        let normal_index = normals.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect();
        let vertex_index = all.iter().enumerate().map(|(i, &v)| (v.clone(), i)).collect();
        Ok(RightAngledPolytope {
            dim,
            normals,
            actual_vertices,
            ideal_vertices,
            incidence,
            normal_index,
            vertex_index,
        })
    }

    pub fn num_sides(&self) -> usize {
        self.normals.len()
    }

    pub fn num_actual(&self) -> usize {
        self.actual_vertices.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.actual_vertices.len() + self.ideal_vertices.len()
    }

    /// Vertex by combined index (actual first).
    pub fn vertex(&self, i: usize) -> &LorentzVector {
        let a = self.actual_vertices.len();
        if i < a {
            &self.actual_vertices[i]
        } else {
            &self.ideal_vertices[i - a]
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = &LorentzVector> {
        self.actual_vertices.iter().chain(self.ideal_vertices.iter())
    }

    pub fn is_ideal(&self, i: usize) -> bool {
        i >= self.actual_vertices.len()
    }

    pub fn normal_index(&self, u: &LorentzVector) -> Option<usize> {
        self.normal_index.get(u).copied()
    }

    pub fn vertex_index(&self, v: &LorentzVector) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    pub fn incidence(&self, side: usize) -> &FixedBitSet {
        &self.incidence[side]
    }

    pub fn vertex_sides(&self, v: usize) -> Vec<usize> {
        (0..self.num_sides())
            .filter(|&s| self.incidence[s].contains(v))
            .collect()
    }

    pub fn inner(&self, i: usize, j: usize) -> BigInt {
        self.normals[i]
            .inner(&self.normals[j])
            .expect("normals share one ambient dimension")
    }

    pub fn perpendicular(&self, i: usize, j: usize) -> bool {
        self.inner(i, j).is_zero()
    }

    /// Unordered pairs i < j of sides with ⟨u_i, u_j⟩ = 0.
    pub fn perpendicular_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.num_sides();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.perpendicular(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
