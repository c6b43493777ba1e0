use hyp6_exact::{gf2_solve, Gf2Matrix, Gf2Vector};
use hyp6_pairing::P6Context;
use hyp6_polytope::EdgeKind;
use serde::Serialize;

use crate::{CodeMatrix, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TorsionMode {
    /// All 72 vertex sets and 216 line-edge sets.
    Full,
    /// One representative per ⟨Ā⟩-orbit, after checking the action is free.
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceKind {
    Vertex,
    LineEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HCertificate {
    pub mode: TorsionMode,
    pub h_torsion_free: bool,
    pub conditions_checked: usize,
    /// Whether Ā acts freely on the vertices and line edges (reduced mode).
    pub free_action: Option<bool>,
    /// Column sets checked, 1-based, in order.
    pub column_sets: Vec<(FaceKind, Vec<usize>)>,
    /// First dependent column set, if any.
    pub dependent: Option<Vec<usize>>,
}

/// Side sets of the actual vertices and line edges of P⁶ with their
/// vertex tuples.
fn torsion_faces(ctx: &P6Context) -> Vec<(FaceKind, &[usize], &[usize])> {
    let l = &ctx.lattice;
    let mut out: Vec<(FaceKind, &[usize], &[usize])> = l
        .of_dim(0)
        .iter()
        .map(|&f| (FaceKind::Vertex, l.face(f).sides.as_slice(), l.face(f).vertices.as_slice()))
        .collect();
    out.extend(l.of_dim(1).iter().filter_map(|&f| {
        let face = l.face(f);
        (face.edge_kind == Some(EdgeKind::Line))
            .then(|| (FaceKind::LineEdge, face.sides.as_slice(), face.vertices.as_slice()))
    }));
    out
}

fn independent(c: &CodeMatrix, sides: &[usize]) -> bool {
    c.matrix.column_subset_rank(sides) == sides.len()
}

/// H is torsion-free iff the columns of C over the sides of every
/// actual vertex and every line edge are independent.
pub fn torsion_free_h(c: &CodeMatrix, ctx: &P6Context, mode: TorsionMode) -> HCertificate {
    let faces = torsion_faces(ctx);
    let sigma = &ctx.sigma_powers[1];
    let (free_action, selected): (Option<bool>, Vec<(FaceKind, Vec<usize>)>) = match mode {
        TorsionMode::Full => (None, faces.iter().map(|(k, s, _)| (*k, s.to_vec())).collect()),
        TorsionMode::Reduced => {
            let mut free = true;
            let mut seen = vec![false; faces.len()];
            let index: std::collections::HashMap<&[usize], usize> =
                faces.iter().enumerate().map(|(i, f)| (f.1, i)).collect();
            let mut reps = Vec::new();
            for start in 0..faces.len() {
                if seen[start] {
                    continue;
                }
                let mut orbit = vec![start];
                let mut cur = faces[start].1.to_vec();
                loop {
                    let mut next: Vec<usize> = cur.iter().map(|&s| sigma[s]).collect();
                    next.sort_unstable();
                    let Some(&i) = index.get(next.as_slice()) else {
                        free = false;
                        break;
                    };
                    if i == start {
                        break;
                    }
                    orbit.push(i);
                    cur = next;
                }
                free &= orbit.len() == 8;
                for &i in &orbit {
                    seen[i] = true;
                }
                let rep = *orbit.iter().min_by_key(|&&i| faces[i].2).expect("nonempty");
                reps.push((faces[rep].0, faces[rep].1.to_vec()));
            }
            (Some(free), reps)
        }
    };
    let dependent = selected
        .iter()
        .find(|(_, s)| !independent(c, s))
        .map(|(_, s)| s.iter().map(|x| x + 1).collect());
    HCertificate {
        mode,
        h_torsion_free: dependent.is_none() && free_action != Some(false),
        conditions_checked: selected.len(),
        free_action,
        column_sets: selected
            .into_iter()
            .map(|(k, s)| (k, s.into_iter().map(|x| x + 1).collect()))
            .collect(),
        dependent,
    }
}

/// v_i = w_i + e_i in GF(2)²⁷ for the non-coordinate sides i.
fn v_vector(c: &CodeMatrix, i: usize) -> Gf2Vector {
    let mut v = Gf2Vector::zeros(27);
    for t in c.column(i).ones() {
        v.set(t, true);
    }
    v.set(i, true);
    v
}

/// Coordinates of x in the basis v₇..v₂₇ when x ∈ V.
fn v_coordinates(c: &CodeMatrix, x: &Gf2Vector) -> Option<Gf2Vector> {
    let mut head = Gf2Vector::zeros(6);
    let mut coords = Gf2Vector::zeros(21);
    for i in 6..27 {
        if x.get(i) {
            coords.set(i - 6, true);
            head.xor_assign(&c.column(i));
        }
    }
    (0..6).all(|t| head.get(t) == x.get(t)).then_some(coords)
}

fn permute(x: &Gf2Vector, sigma: &[usize]) -> Gf2Vector {
    let mut y = Gf2Vector::zeros(x.len());
    for j in x.ones() {
        y.flip(sigma[j]);
    }
    y
}

/// The matrix of σ★ (e_i ↦ e_{σ(i)}) on V = span{v₇..v₂₇}; column j is
/// the image of v_{j+6}.
pub fn sigma_star_on_v(c: &CodeMatrix, sigma: &[usize]) -> Result<Gf2Matrix, VerifyError> {
    let mut cols = Vec::with_capacity(21);
    for i in 6..27 {
        let image = permute(&v_vector(c, i), sigma);
        cols.push(v_coordinates(c, &image).ok_or(VerifyError::NotInvariant(i + 1))?);
    }
    Ok(Gf2Matrix::from_columns(&cols)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitVerdict {
    Certified,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCertificate {
    pub verdict: OrbitVerdict,
    /// I + σ★⁴ in the v-basis.
    pub i_plus_sigma4: Vec<Vec<u8>>,
    /// Target Σₜ e_{σᵗ(2)} as v-indices (7..27) when it lies in V.
    pub target: Option<Vec<usize>>,
    /// A solution x (v-indices) when one exists.
    pub solution: Option<Vec<usize>>,
    pub diagnosis: String,
}

/// The target Σ_{t=0}^{7} e_{σᵗ(2)} must not lie in the image of I+σ★⁴
/// restricted to V. Certified iff (I+σ★⁴)x = target has no solution.
pub fn orbit_certify(
    c: &CodeMatrix,
    sigma_star: &Gf2Matrix,
    sigma: &[usize],
) -> Result<OrbitCertificate, VerifyError> {
    let m = sigma_star.pow(4).add(&Gf2Matrix::identity(21));
    let mut t = Gf2Vector::zeros(27);
    let mut j = 1;
    for _ in 0..8 {
        t.flip(j);
        j = sigma[j];
    }
    let i_plus_sigma4 = m.to_u8_rows();
    let Some(coords) = v_coordinates(c, &t) else {
        return Ok(OrbitCertificate {
            verdict: OrbitVerdict::Inconclusive,
            i_plus_sigma4,
            target: None,
            solution: None,
            diagnosis: "target does not lie in V".to_string(),
        });
    };
    let solve = gf2_solve(&m, &coords)?;
    let target = Some(coords.ones().map(|i| i + 7).collect());
    Ok(match solve.solution {
        None => OrbitCertificate {
            verdict: OrbitVerdict::Certified,
            i_plus_sigma4,
            target,
            solution: None,
            diagnosis: format!(
                "rank {} < augmented rank {}: no solution in V",
                solve.rank, solve.augmented_rank
            ),
        },
        Some(x) => OrbitCertificate {
            verdict: OrbitVerdict::Inconclusive,
            i_plus_sigma4,
            target,
            solution: Some(x.ones().map(|i| i + 7).collect()),
            diagnosis: "system is solvable; the argument gives no conclusion".to_string(),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetCertificate {
    pub v_independent: bool,
    pub rank_c: usize,
    /// [Γ₂⁶ : H] = 2^{rank C}.
    pub index: u64,
}

/// The v_i are independent and span ker C, so GF(2)²⁷/V has 2^{rank C}
/// elements, one per coset of H in Γ₂⁶.
pub fn coset_check(c: &CodeMatrix) -> CosetCertificate {
    let rows: Vec<Gf2Vector> = (6..27).map(|i| v_vector(c, i)).collect();
    let v = Gf2Matrix::from_rows(rows).expect("equal lengths");
    let rank_c = c.matrix.rank();
    CosetCertificate {
        v_independent: v.rank() == 21 && rank_c + 21 == 27,
        rank_c,
        index: 1 << rank_c,
    }
}
