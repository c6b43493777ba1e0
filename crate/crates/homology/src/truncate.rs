use std::collections::HashMap;

use hyp6_exact::linalg::{det, greedy_basis};
use hyp6_exact::{BigInt, LorentzVector};
use hyp6_pairing::P6Context;
use num_traits::{Signed, Zero};

use crate::HomologyError;

/// Each ideal vertex v is cut off by the hyperplane orthogonal to
/// CUT_SCALE·v − w, which separates v from every other vertex.
pub const CUT_SCALE: i64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKind {
    /// A face of P⁶ (truncated if it reaches an ideal vertex).
    Face(usize),
    /// The cross-section at ideal vertex `vertex` of a face through it.
    Cut { vertex: usize, face: usize },
}

#[derive(Debug, Clone)]
pub struct TruncatedCell {
    pub kind: CellKind,
    pub dim: usize,
    /// Side indices containing the cell.
    pub sides: Vec<usize>,
    /// Columns spanning the linear hull of the cell.
    frame: Vec<Vec<BigInt>>,
    /// A point in the relative interior.
    interior: Vec<BigInt>,
}

impl TruncatedCell {
    pub fn is_cut(&self) -> bool {
        matches!(self.kind, CellKind::Cut { .. })
    }
}

/// P⁶ with its 27 ideal vertices truncated: the original faces plus one
/// cube-like cross-section cell per (ideal vertex, face through it).
#[derive(Debug, Clone)]
pub struct TruncatedPolytope {
    pub cells: Vec<TruncatedCell>,
    /// Facets of each cell with incidence signs.
    pub boundary: Vec<Vec<(usize, i8)>>,
    /// Cells lying in each side.
    pub on_side: Vec<Vec<usize>>,
    /// (cell image, orientation sign) of each cell under Āᵖ, p = 0..7.
    pub action: Vec<Vec<(usize, i8)>>,
    index: HashMap<CellKind, usize>,
}

fn lorentz(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let n = a.len() - 1;
    let mut s = BigInt::zero();
    for i in 0..n {
        s += &a[i] * &b[i];
    }
    s - &a[n] * &b[n]
}

fn combo(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(p, q)| a * p - b * q).collect()
}

fn sum(vs: &[&[BigInt]]) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); vs[0].len()];
    for v in vs {
        for (t, x) in s.iter_mut().zip(v.iter()) {
            *t += x;
        }
    }
    s
}

/// sign det(Fᵀ G) for column frames spanning the same subspace.
fn orientation(f: &[Vec<BigInt>], g: &[Vec<BigInt>]) -> i8 {
    let m: Vec<Vec<BigInt>> = f
        .iter()
        .map(|a| g.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
        .collect();
    let d = det(&m);
    if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    }
}

impl TruncatedPolytope {
    pub fn build(ctx: &P6Context) -> Result<Self, HomologyError> {
        let p = &ctx.polytope;
        let lat = &ctx.lattice;
        let verts: Vec<Vec<BigInt>> = p.vertices().map(|v| v.coords().to_vec()).collect();
        let w: Vec<BigInt> = ctx.center.iter().map(|&x| BigInt::from(x)).collect();
        let scale = BigInt::from(CUT_SCALE);
        let cut_normal = |v: usize| -> Vec<BigInt> {
            verts[v].iter().zip(&w).map(|(x, c)| &scale * x - c).collect()
        };
        // point where the segment from v towards y meets the cut at v
        let cut_point = |v: usize, y: &[BigInt]| -> Vec<BigInt> {
            let nv = cut_normal(v);
            let a = lorentz(&verts[v], &nv);
            let b = lorentz(y, &nv);
            combo(&a, y, &b, &verts[v])
        };

        let mut cells = Vec::new();
        let mut index = HashMap::new();
        let mut push = |kind: CellKind, dim: usize, sides: Vec<usize>, span: Vec<Vec<BigInt>>, interior| {
            let basis = greedy_basis(&span);
            let frame: Vec<Vec<BigInt>> = basis.into_iter().map(|i| span[i].clone()).collect();
            index.insert(kind, cells.len());
            cells.push(TruncatedCell {
                kind,
                dim,
                sides,
                frame,
                interior,
            });
        };
        for d in 0..=6 {
            for &f in lat.of_dim(d) {
                let face = lat.face(f);
                let span: Vec<Vec<BigInt>> = face.vertices.iter().map(|&v| verts[v].clone()).collect();
                let refs: Vec<&[BigInt]> = span.iter().map(Vec::as_slice).collect();
                let q = sum(&refs);
                push(CellKind::Face(f), d, face.sides.clone(), span, q);
            }
            if d == 6 {
                break;
            }
            for &f in lat.of_dim(d + 1) {
                let face = lat.face(f);
                for &v in face.vertices.iter().filter(|&&v| p.is_ideal(v)) {
                    let mut span = Vec::new();
                    for &e in lat.of_dim(1) {
                        let edge = lat.face(e);
                        if edge.vertices.contains(&v) && face.sides.iter().all(|s| edge.sides.contains(s)) {
                            let y = edge.vertices.iter().find(|&&u| u != v).expect("edge has two ends");
                            span.push(cut_point(v, &verts[*y]));
                        }
                    }
                    let refs: Vec<&[BigInt]> = face.vertices.iter().map(|&u| verts[u].as_slice()).collect();
                    let x = sum(&refs);
                    let q = cut_point(v, &x);
                    push(CellKind::Cut { vertex: v, face: f }, d, face.sides.clone(), span, q);
                }
            }
        }
        for (i, c) in cells.iter().enumerate() {
            if c.frame.len() != c.dim + 1 {
                return Err(HomologyError::DegenerateFrame(i));
            }
        }

        let facet_kinds = |c: &TruncatedCell| -> Vec<CellKind> {
            let mut out = Vec::new();
            match c.kind {
                CellKind::Face(f) => {
                    if c.dim == 0 {
                        return out;
                    }
                    let face = lat.face(f);
                    for s in 0..27 {
                        if face.sides.contains(&s) {
                            continue;
                        }
                        let mut t = face.sides.clone();
                        t.push(s);
                        t.sort_unstable();
                        if let Some(g) = lat.find(&t) {
                            if lat.face(g).dim + 1 == c.dim {
                                out.push(CellKind::Face(g));
                            }
                        }
                    }
                    for &v in face.vertices.iter().filter(|&&v| p.is_ideal(v)) {
                        out.push(CellKind::Cut { vertex: v, face: f });
                    }
                }
                CellKind::Cut { vertex, face } => {
                    let face = lat.face(face);
                    for s in 0..27 {
                        if face.sides.contains(&s) {
                            continue;
                        }
                        let mut t = face.sides.clone();
                        t.push(s);
                        t.sort_unstable();
                        if let Some(g) = lat.find(&t) {
                            let gf = lat.face(g);
                            if gf.dim >= 1 && gf.dim + 1 == face.dim && gf.vertices.contains(&vertex) {
                                out.push(CellKind::Cut { vertex, face: g });
                            }
                        }
                    }
                }
            }
            out
        };
        let mut boundary = Vec::with_capacity(cells.len());
        for c in &cells {
            let mut row = Vec::new();
            for k in facet_kinds(c) {
                let g = index[&k];
                let mut n = vec![c.interior.clone()];
                n.extend(cells[g].frame.iter().cloned());
                let s = orientation(&c.frame, &n);
                if s == 0 {
                    return Err(HomologyError::DegenerateFrame(g));
                }
                row.push((g, s));
            }
            boundary.push(row);
        }

        let mut on_side = vec![Vec::new(); 27];
        for (i, c) in cells.iter().enumerate() {
            for &s in &c.sides {
                on_side[s].push(i);
            }
        }

        let mut action = Vec::with_capacity(8);
        for pw in 0..8u8 {
            let a = ctx.abar_powers[pw as usize].to_lorentz();
            let vmap: Vec<usize> = p
                .vertices()
                .map(|v| p.vertex_index(&a.apply(v)).ok_or(HomologyError::NotEquivariant))
                .collect::<Result<_, _>>()?;
            let mut row = Vec::with_capacity(cells.len());
            for c in &cells {
                let mut sides: Vec<usize> = c.sides.iter().map(|&s| ctx.sigma_pow(pw, s)).collect();
                sides.sort_unstable();
                let f2 = lat.find(&sides).ok_or(HomologyError::NotEquivariant)?;
                let kind = match c.kind {
                    CellKind::Face(_) => CellKind::Face(f2),
                    CellKind::Cut { vertex, .. } => CellKind::Cut {
                        vertex: vmap[vertex],
                        face: f2,
                    },
                };
                let j = *index.get(&kind).ok_or(HomologyError::NotEquivariant)?;
                let moved: Vec<Vec<BigInt>> = c
                    .frame
                    .iter()
                    .map(|col| {
                        a.apply(&LorentzVector::new(col.clone()).expect("7 coordinates"))
                            .into_coords()
                    })
                    .collect();
                let s = orientation(&cells[j].frame, &moved);
                if s == 0 {
                    return Err(HomologyError::NotEquivariant);
                }
                row.push((j, s));
            }
            action.push(row);
        }

        let t = TruncatedPolytope {
            cells,
            boundary,
            on_side,
            action,
            index,
        };
        t.check_boundary_square()?;
        Ok(t)
    }

    pub fn cell_index(&self, kind: CellKind) -> Option<usize> {
        self.index.get(&kind).copied()
    }

    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; 7];
        for cell in &self.cells {
            c[cell.dim] += 1;
        }
        c
    }

    fn check_boundary_square(&self) -> Result<(), HomologyError> {
        for (i, row) in self.boundary.iter().enumerate() {
            let mut acc: HashMap<usize, i32> = HashMap::new();
            for &(g, s) in row {
                for &(h, t) in &self.boundary[g] {
                    *acc.entry(h).or_insert(0) += i32::from(s * t);
                }
            }
            if acc.values().any(|&x| x != 0) {
                return Err(HomologyError::BoundarySquare(self.cells[i].dim));
            }
        }
        Ok(())
    }
}
