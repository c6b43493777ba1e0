use std::collections::HashMap;

use hyp6_exact::{LorentzMatrix, LorentzVector};

use crate::CoxeterError;

/// Generator of the ℤ/8 action extending the symmetry of N.
pub fn matrix_a() -> LorentzMatrix {
    LorentzMatrix::from_i64_rows(&[
        vec![1, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 1, 0, -1],
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, -1, 0, -1, 0, 0, 1],
        vec![0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, -1, -1, 0, 1],
        vec![0, -1, 0, -1, -1, 0, 2],
    ])
}

/// Image of A in Σ⁶.
pub fn matrix_abar() -> LorentzMatrix {
    LorentzMatrix::from_i64_rows(&[
        vec![1, 0, 0, 0, 0, 0, 0],
        vec![0, -1, 0, 0, -1, 0, 1],
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, -1, 0, -1, 0, 0, 1],
        vec![0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, -1, -1, 0, 1],
        vec![0, -1, 0, -1, -1, 0, 2],
    ])
}

/// diag(1,…,−1,…,1) with the minus sign in slot `i` (1-based).
pub fn coordinate_reflection(size: usize, i: usize) -> LorentzMatrix {
    let mut d = vec![1i64; size];
    d[i - 1] = -1;
    LorentzMatrix::diag(&d)
}

pub fn matrix_r2() -> LorentzMatrix {
    coordinate_reflection(7, 2)
}

/// Order-8 symmetry of the 5-manifold N, acting on ℝ^{5,1}.
pub fn symmetry_of_n() -> LorentzMatrix {
    LorentzMatrix::from_i64_rows(&[
        vec![1, 0, 0, 1, 0, -1],
        vec![0, 0, 0, 0, 1, 0],
        vec![-1, 0, -1, 0, 0, 1],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, -1, -1, 0, 1],
        vec![-1, 0, -1, -1, 0, 2],
    ])
}

/// Longest element of Σ⁸, generating Γ₂⁸ ∩ Σ⁸.
pub fn longest_element_e8() -> LorentzMatrix {
    let mut rows = vec![vec![0i64; 9]; 9];
    for (i, row) in rows.iter_mut().enumerate().take(8) {
        for (j, x) in row.iter_mut().enumerate().take(8) {
            *x = if i == j { -3 } else { -2 };
        }
        row[8] = 6;
    }
    rows[8] = vec![-6, -6, -6, -6, -6, -6, -6, -6, 17];
    LorentzMatrix::from_i64_rows(&rows)
}

/// Permutation π (0-based) with S·u_i = u_{π(i)}.
pub fn sigma_permutation(
    s: &LorentzMatrix,
    normals: &[LorentzVector],
) -> Result<Vec<usize>, CoxeterError> {
    let index: HashMap<&LorentzVector, usize> =
        normals.iter().enumerate().map(|(i, u)| (u, i)).collect();
    normals
        .iter()
        .enumerate()
        .map(|(i, u)| {
            index
                .get(&s.apply(u))
                .copied()
                .ok_or(CoxeterError::NotASymmetry(i + 1))
        })
        .collect()
}

/// Nontrivial cycles, each starting at its least element, ordered by it.
pub fn cycle_decomposition(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut j = perm[start];
        while j != start {
            seen[j] = true;
            cycle.push(j);
            j = perm[j];
        }
        if cycle.len() > 1 {
            out.push(cycle);
        }
    }
    out
}

/// Cycle notation with 1-based labels, e.g. `(1 2)(3 5 4)`.
pub fn format_cycles(cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| {
            let xs: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            format!("({})", xs.join(" "))
        })
        .collect()
}
