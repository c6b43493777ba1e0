use std::cmp::Ordering;

use hyp6_coxeter::{group_orbit, sigma_generator_indices, simplex_generators};
use hyp6_data::DataSet;
use hyp6_exact::{BigInt, LorentzMatrix, LorentzVector};
use num_traits::{One, Zero};

use crate::{PolytopeError, RightAngledPolytope};

const ORBIT_BOUND: usize = 200_000;

fn is_coordinate_side(u: &LorentzVector) -> Option<usize> {
    let c = u.coords();
    let nz: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
    (nz.len() == 1 && c[nz[0]] == -BigInt::one() && nz[0] + 1 < c.len()).then(|| nz[0])
}

/// Table 2 ordering: the coordinate sides −e₁,…,−e_n first, then by the
/// time coordinate and the reversed space coordinates.
pub fn canonical_side_order(a: &LorentzVector, b: &LorentzVector) -> Ordering {
    match (is_coordinate_side(a), is_coordinate_side(b)) {
        (Some(i), Some(j)) => i.cmp(&j),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => {
            let (x, y) = (a.coords(), b.coords());
            let n = x.len() - 1;
            x[n].cmp(&y[n])
                .then_with(|| x[..n].iter().rev().cmp(y[..n].iter().rev()))
        }
    }
}

/// Pⁿ as the Σⁿ-orbit of Δⁿ, for 2 ≤ n ≤ 7. For n = 6 the result is
/// checked against the embedded Tables 2 and 3.
pub fn build_polytope(n: usize) -> Result<RightAngledPolytope, PolytopeError> {
    if !(2..=7).contains(&n) {
        return Err(PolytopeError::DimensionOutOfRange(n));
    }
    let data = simplex_generators(n)?;
    let sigma = sigma_generator_indices(n)?;
    let gens: Vec<LorentzMatrix> = sigma.iter().map(|&i| data.generator(i).clone()).collect();
    let seeds: Vec<LorentzVector> = (1..=n + 1)
        .filter(|i| !sigma.contains(i))
        .map(|i| data.roots[i - 1].clone())
        .collect();
    let mut normals = group_orbit(&gens, &seeds, ORBIT_BOUND)?;
    normals.sort_by(canonical_side_order);
    let mut candidates = Vec::new();
    for (i, v) in data.vertices.iter().enumerate() {
        if i + 1 == n {
            continue;
        }
        candidates.extend(group_orbit(&gens, &[v.point.clone()], ORBIT_BOUND)?);
    }
    let p = RightAngledPolytope::from_parts(n, normals, candidates)?;
    if n == 6 {
        cross_check_tables(&p, DataSet::embedded()?)?;
    }
    Ok(p)
}

/// Compare P⁶ with the embedded normals (in order) and vertices (in order).
pub fn cross_check_tables(p: &RightAngledPolytope, data: &DataSet) -> Result<(), PolytopeError> {
    let normals = data.int_rows("p6_normals.txt")?;
    let vertices = data.int_rows("p6_vertices.txt")?;
    let got_n: Vec<Vec<i64>> = p.normals.iter().filter_map(|u| u.to_i64s()).collect();
    if got_n != normals {
        let at = got_n.iter().zip(&normals).position(|(a, b)| a != b);
        return Err(PolytopeError::TableMismatch(format!(
            "side normals differ (first difference at row {:?}, {} generated vs {} tabulated)",
            at.map(|i| i + 1),
            got_n.len(),
            normals.len()
        )));
    }
    let got_v: Vec<Vec<i64>> = p.vertices().filter_map(|v| v.to_i64s()).collect();
    if got_v != vertices {
        let at = got_v.iter().zip(&vertices).position(|(a, b)| a != b);
        return Err(PolytopeError::TableMismatch(format!(
            "vertices differ (first difference at row {:?}, {} generated vs {} tabulated)",
            at.map(|i| i + 1),
            got_v.len(),
            vertices.len()
        )));
    }
    if p.num_actual() != 72 {
        return Err(PolytopeError::TableMismatch(format!(
            "{} actual vertices, expected 72",
            p.num_actual()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FaceLattice;

    #[test]
    fn p2_is_a_triangle() {
        let p = build_polytope(2).unwrap();
        assert_eq!(p.num_sides(), 3);
        assert_eq!(p.num_actual(), 1);
        assert_eq!(p.ideal_vertices.len(), 2);
        let l = FaceLattice::enumerate(&p).unwrap();
        assert_eq!(l.counts(), vec![1, 3, 1]);
    }

    #[test]
    fn side_counts() {
        for (n, m) in [(2usize, 3usize), (3, 6), (4, 10), (5, 16), (6, 27)] {
            assert_eq!(build_polytope(n).unwrap().num_sides(), m, "n={n}");
        }
    }
}
