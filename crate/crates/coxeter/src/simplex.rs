use std::fmt;

use hyp6_exact::{linalg, BigInt, LorentzMatrix, LorentzVector, VectorKind};
use num_traits::{Signed, Zero};

use crate::CoxeterError;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;
/// Iteration cap when computing orders of generator products.
pub const ORDER_BOUND: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOrder {
    Finite(u32),
    /// Sides meet at an ideal point or not at all.
    Infinite,
}

impl fmt::Display for ProductOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductOrder::Finite(m) => write!(f, "{m}"),
            ProductOrder::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexVertex {
    /// Primitive integral representative with positive time coordinate.
    pub point: LorentzVector,
    pub ideal: bool,
}

#[derive(Debug, Clone)]
pub struct SimplexGroupData {
    pub dim: usize,
    /// s₁,…,s_{n+1}.
    pub generators: Vec<LorentzMatrix>,
    /// Primitive outward root of each side of Δⁿ.
    pub roots: Vec<LorentzVector>,
    /// Vertex i lies opposite side i.
    pub vertices: Vec<SimplexVertex>,
    /// `product_orders[i][j]` is the order of s_{i+1}s_{j+1}.
    pub product_orders: Vec<Vec<ProductOrder>>,
}

impl SimplexGroupData {
    pub fn generator(&self, i: usize) -> &LorentzMatrix {
        &self.generators[i - 1]
    }

    /// Vertex opposite side n, fixed by Σⁿ.
    pub fn center(&self) -> &LorentzVector {
        &self.vertices[self.dim - 1].point
    }

    /// Pairs (i, j), 1-based with i < j, whose product order is not 2.
    pub fn coxeter_edges(&self) -> Vec<(usize, usize, ProductOrder)> {
        let m = self.generators.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let o = self.product_orders[i][j];
                if o != ProductOrder::Finite(2) {
                    out.push((i + 1, j + 1, o));
                }
            }
        }
        out
    }

    /// Coxeter diagram as edge list; edges of weight 3 are left unlabeled.
    pub fn coxeter_symbol(&self) -> String {
        self.coxeter_edges()
            .iter()
            .map(|&(i, j, o)| match o {
                ProductOrder::Finite(3) => format!("{i}-{j}"),
                _ => format!("{i}-{j}[{o}]"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn check_dim(n: usize) -> Result<(), CoxeterError> {
    if (MIN_DIM..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(CoxeterError::DimensionOutOfRange(n))
    }
}

fn last_generator(n: usize) -> LorentzMatrix {
    let size = n + 1;
    match n {
        2 => LorentzMatrix::from_i64_rows(&[vec![-1, -2, 2], vec![-2, -1, 2], vec![-2, -2, 3]]),
        3 => LorentzMatrix::from_i64_rows(&[
            vec![0, -1, -1, 1],
            vec![-1, 0, -1, 1],
            vec![-1, -1, 0, 1],
            vec![-1, -1, -1, 2],
        ]),
        _ => {
            let mut rows = vec![vec![0i64; size]; size];
            for (i, row) in rows.iter_mut().enumerate().take(3) {
                for (j, x) in row.iter_mut().enumerate().take(3) {
                    *x = if i == j { 0 } else { -1 };
                }
                row[n] = 1;
            }
            for (i, row) in rows.iter_mut().enumerate().take(n).skip(3) {
                row[i] = 1;
            }
            rows[n][..3].copy_from_slice(&[-1, -1, -1]);
            rows[n][n] = 2;
            LorentzMatrix::from_i64_rows(&rows)
        }
    }
}

fn generator_list(n: usize) -> Vec<LorentzMatrix> {
    let size = n + 1;
    let mut gens: Vec<LorentzMatrix> = (1..n)
        .map(|i| LorentzMatrix::permutation_swap(size, i, i + 1))
        .collect();
    let mut d = vec![1i64; size];
    d[n - 1] = -1;
    gens.push(LorentzMatrix::diag(&d));
    gens.push(last_generator(n));
    gens
}

fn minus_identity(m: &LorentzMatrix) -> Vec<Vec<BigInt>> {
    let mut rows = m.rows();
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] -= 1;
    }
    rows
}

fn fixed_vertex(gens: &[LorentzMatrix], i: usize) -> Result<SimplexVertex, CoxeterError> {
    let size = gens[0].size();
    let stacked: Vec<Vec<BigInt>> = gens
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .flat_map(|(_, g)| minus_identity(g))
        .collect();
    let kernel = linalg::nullspace(&stacked, size);
    if kernel.len() != 1 {
        return Err(CoxeterError::DegenerateVertex(i + 1));
    }
    let point = LorentzVector::new(kernel[0].clone())?.primitive_point()?;
    let ideal = match point.kind() {
        VectorKind::Lightlike => true,
        VectorKind::Timelike => false,
        VectorKind::Spacelike => return Err(CoxeterError::DegenerateVertex(i + 1)),
    };
    Ok(SimplexVertex { point, ideal })
}

/// Primitive root of a reflection: a generator of the image of s − I.
fn root_of(s: &LorentzMatrix) -> Result<Option<LorentzVector>, hyp6_exact::ExactError> {
    let d = minus_identity(s);
    let size = s.size();
    for j in 0..size {
        let col: Vec<BigInt> = (0..size).map(|i| d[i][j].clone()).collect();
        if col.iter().any(|x| !x.is_zero()) {
            return Ok(Some(LorentzVector::new(col)?.primitive()?));
        }
    }
    Ok(None)
}

fn product_order(
    gens: &[LorentzMatrix],
    roots: &[LorentzVector],
    i: usize,
    j: usize,
) -> Result<ProductOrder, CoxeterError> {
    if i == j {
        return Ok(ProductOrder::Finite(1));
    }
    let g = roots[i].inner(&roots[j])?;
    if &g * &g >= roots[i].norm() * roots[j].norm() {
        return Ok(ProductOrder::Infinite);
    }
    gens[i]
        .mul(&gens[j])
        .order(ORDER_BOUND)
        .map(ProductOrder::Finite)
        .map_err(|_| CoxeterError::ProductOrderBound {
            i: i + 1,
            j: j + 1,
            bound: ORDER_BOUND,
        })
}

/// Generators s₁,…,s_{n+1} of the reflection group of Δⁿ, with the
/// vertices of Δⁿ and the table of pairwise product orders.
pub fn simplex_generators(n: usize) -> Result<SimplexGroupData, CoxeterError> {
    check_dim(n)?;
    let generators = generator_list(n);
    for (k, g) in generators.iter().enumerate() {
        if !g.is_positive_lorentzian() || !g.mul(g).is_identity() {
            return Err(CoxeterError::NotFormPreserving(k + 1));
        }
    }
    let vertices = (0..=n)
        .map(|i| fixed_vertex(&generators, i))
        .collect::<Result<Vec<_>, _>>()?;
    let mut roots = Vec::with_capacity(n + 1);
    for (i, g) in generators.iter().enumerate() {
        let r = root_of(g)?.ok_or(CoxeterError::NotFormPreserving(i + 1))?;
        // outward: the opposite vertex lies on the negative side
        let r = if r.inner(&vertices[i].point)?.is_positive() {
            r.neg()
        } else {
            r
        };
        roots.push(r);
    }
    let mut product_orders = vec![vec![ProductOrder::Finite(1); n + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=n {
            product_orders[i][j] = product_order(&generators, &roots, i, j)?;
        }
    }
    Ok(SimplexGroupData {
        dim: n,
        generators,
        roots,
        vertices,
        product_orders,
    })
}

/// 1-based indices of the simplex reflections generating Σⁿ.
pub fn sigma_generator_indices(n: usize) -> Result<Vec<usize>, CoxeterError> {
    check_dim(n)?;
    Ok(if n == 2 {
        vec![1]
    } else {
        (1..=n + 1).filter(|&i| i != n).collect()
    })
}

/// Generators of Σⁿ commuting with the reflection s_n outside Σⁿ (n ≥ 3).
pub fn sigma0_generator_indices(data: &SimplexGroupData) -> Result<Option<Vec<usize>>, CoxeterError> {
    let n = data.dim;
    if n < 3 {
        return Ok(None);
    }
    Ok(Some(
        sigma_generator_indices(n)?
            .into_iter()
            .filter(|&i| data.product_orders[i - 1][n - 1] == ProductOrder::Finite(2))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_for_n6() {
        let d = simplex_generators(6).unwrap();
        assert_eq!(d.generator(1), &LorentzMatrix::permutation_swap(7, 1, 2));
        assert_eq!(d.generator(6), &LorentzMatrix::diag(&[1, 1, 1, 1, 1, -1, 1]));
        for i in 0..4 {
            assert_eq!(d.product_orders[i][i + 1], ProductOrder::Finite(3));
        }
        assert_eq!(d.product_orders[4][5], ProductOrder::Finite(4));
        for i in 0..7 {
            assert_eq!(d.product_orders[i][i], ProductOrder::Finite(1));
            for j in 0..7 {
                assert_eq!(d.product_orders[i][j], d.product_orders[j][i]);
            }
        }
    }

    #[test]
    fn vertices_lie_off_their_own_side_only() {
        for n in MIN_DIM..=MAX_DIM {
            let d = simplex_generators(n).unwrap();
            for (i, v) in d.vertices.iter().enumerate() {
                for (j, r) in d.roots.iter().enumerate() {
                    let ip = r.inner(&v.point).unwrap();
                    if i == j {
                        assert!(ip.is_negative(), "n={n} vertex {i}");
                    } else {
                        assert!(ip.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert_eq!(
            simplex_generators(9).unwrap_err(),
            CoxeterError::DimensionOutOfRange(9)
        );
        assert!(simplex_generators(1).is_err());
    }

    #[test]
    fn sigma0_for_n6_drops_the_neighbour_of_s6() {
        let d = simplex_generators(6).unwrap();
        let s0 = sigma0_generator_indices(&d).unwrap().unwrap();
        assert!(!s0.contains(&5));
        assert!(!s0.contains(&6));
    }
}
