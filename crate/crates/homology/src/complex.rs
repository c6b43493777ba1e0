use std::collections::{BTreeMap, HashMap};

use hyp6_exact::{BigInt, SparseIntMatrix};
use hyp6_pairing::{trace_face_cycles, EightPPairing, P6Context, COPIES};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::{homology_groups, HomologyError, HomologyGroups, TruncatedPolytope};

/// A cell of the glued complex, named by the least (copy, cell) it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientCell {
    pub rep: (usize, usize),
    pub dim: usize,
    /// Lies in a cusp cross-section.
    pub cut: bool,
    /// Number of (copy, cell) pairs identified to this cell.
    pub members: usize,
}

#[derive(Debug, Clone)]
pub struct QuotientCellComplex {
    /// Cells of each dimension 0..=6.
    pub cells: Vec<Vec<QuotientCell>>,
    /// `boundaries[d-1]` is ∂_d with rows indexed by `cells[d]`.
    pub boundaries: Vec<SparseIntMatrix>,
}

impl QuotientCellComplex {
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }

    /// Cell counts, boundary matrices as (row, column, value) triplets and
    /// the representative (copy, cell) of every cell.
    pub fn export(&self) -> ComplexExport {
        ComplexExport {
            counts: self.counts(),
            boundaries: self
                .boundaries
                .iter()
                .map(|m| {
                    m.entries
                        .iter()
                        .enumerate()
                        .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x.to_i64().expect("small entry"))))
                        .collect()
                })
                .collect(),
            representatives: self.cells.iter().map(|cs| cs.iter().map(|c| c.rep).collect()).collect(),
        }
    }

    pub fn homology(&self) -> HomologyGroups {
        let mut h = homology_groups(&self.counts(), &self.boundaries);
        h.groups.truncate(6);
        h
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexExport {
    pub counts: Vec<usize>,
    /// `boundaries[d-1]` lists the nonzero entries of ∂_d.
    pub boundaries: Vec<Vec<(usize, usize, i64)>>,
    pub representatives: Vec<Vec<(usize, usize)>>,
}

/// x = sign · parent, path-compressed.
struct SignedUnionFind {
    parent: Vec<(usize, i8)>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        SignedUnionFind {
            parent: (0..n).map(|i| (i, 1)).collect(),
        }
    }

    fn find(&mut self, x: usize) -> (usize, i8) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur].0 != cur {
            path.push(cur);
            cur = self.parent[cur].0;
        }
        // rewrite from the root down so each node points at the root
        let mut sign = 1;
        for &y in path.iter().rev() {
            sign *= self.parent[y].1;
            self.parent[y] = (cur, sign);
        }
        (cur, self.parent[x].1)
    }

    /// Record a = s · b; false on an orientation clash.
    fn union(&mut self, a: usize, b: usize, s: i8) -> bool {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        if ra == rb {
            return sa == s * sb;
        }
        self.parent[rb] = (ra, sa * s * sb);
        true
    }
}

/// Glue eight truncated copies of P⁶ along the pairing and return the
/// quotient cell complex with its boundary matrices.
pub fn build_quotient_complex(
    pairing: &EightPPairing,
    ctx: &P6Context,
    trunc: &TruncatedPolytope,
) -> Result<QuotientCellComplex, HomologyError> {
    let report = trace_face_cycles(&pairing.gluing(ctx), &ctx.lattice)?;
    if !report.is_proper() {
        return Err(HomologyError::NotProper(format!("{} face cycle violations", report.violations.len())));
    }
    let n = trunc.cells.len();
    let node = |copy: usize, cell: usize| copy * n + cell;
    let mut uf = SignedUnionFind::new(COPIES * n);
    for i in 0..COPIES {
        for j in 0..trunc.on_side.len() {
            let (k, p) = pairing.entry(i, j);
            for &c in &trunc.on_side[j] {
                let (c2, s) = trunc.action[p as usize][c];
                if !uf.union(node(i, c), node(k as usize, c2), s) {
                    return Err(HomologyError::OrientationClash { copy: i, cell: c });
                }
            }
        }
    }

    // orient every class by its least member
    let mut root_of = Vec::with_capacity(COPIES * n);
    let mut rep_of_root: HashMap<usize, (usize, i8, usize)> = HashMap::new();
    for x in 0..COPIES * n {
        let (r, s) = uf.find(x);
        root_of.push((r, s));
        rep_of_root.entry(r).or_insert((x, s, 0)).2 += 1;
    }
    let mut cells: Vec<Vec<QuotientCell>> = vec![Vec::new(); 7];
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<_> = rep_of_root.iter().map(|(&r, &(x, s, m))| (x, r, s, m)).collect();
    reps.sort_unstable();
    for (x, r, _, m) in &reps {
        let cell = &trunc.cells[x % n];
        index.insert(*r, cells[cell.dim].len());
        cells[cell.dim].push(QuotientCell {
            rep: (x / n, x % n),
            dim: cell.dim,
            cut: cell.is_cut(),
            members: *m,
        });
    }
    // (class index, sign relative to the class's representative)
    let class = |x: usize| -> (usize, i8) {
        let (r, s) = root_of[x];
        let (_, sr, _) = rep_of_root[&r];
        (index[&r], s * sr)
    };

    let mut boundaries = Vec::with_capacity(6);
    for d in 1..=6 {
        let mut m = SparseIntMatrix::new(cells[d].len(), cells[d - 1].len());
        for (row, qc) in cells[d].iter().enumerate() {
            let (i, c) = qc.rep;
            for &(g, s) in &trunc.boundary[c] {
                let (col, t) = class(node(i, g));
                m.add_entry(row, col, BigInt::from(s * t));
            }
        }
        boundaries.push(m);
    }
    for d in 1..6 {
        if !boundaries[d].mul(&boundaries[d - 1]).is_zero() {
            return Err(HomologyError::BoundarySquare(d + 1));
        }
    }
    Ok(QuotientCellComplex { cells, boundaries })
}

/// Homology of each connected cusp cross-section, ordered by the
/// representative of its least vertex.
pub fn cusp_sections(complex: &QuotientCellComplex) -> Vec<HomologyGroups> {
    // union-find over cut cells keyed by (dim, index)
    let mut key: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (d, cs) in complex.cells.iter().enumerate() {
        for (i, c) in cs.iter().enumerate() {
            if c.cut {
                let k = key.len();
                key.insert((d, i), k);
            }
        }
    }
    let mut parent: Vec<usize> = (0..key.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for d in 1..complex.cells.len() {
        for (row, entries) in complex.boundaries[d - 1].entries.iter().enumerate() {
            let Some(&a) = key.get(&(d, row)) else { continue };
            for (col, _) in entries {
                let b = key[&(d - 1, *col)];
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut order = Vec::new();
    for (&(d, i), &k) in &key {
        let r = root(&mut parent, k);
        let e = comps.entry(r).or_insert_with(|| {
            order.push(r);
            vec![Vec::new(); 6]
        });
        e[d].push(i);
    }
    order
        .into_iter()
        .map(|r| {
            let sub = &comps[&r];
            let local: Vec<HashMap<usize, usize>> = sub
                .iter()
                .map(|v| v.iter().enumerate().map(|(a, &b)| (b, a)).collect())
                .collect();
            let boundaries: Vec<SparseIntMatrix> = (1..6)
                .map(|d| {
                    let mut m = SparseIntMatrix::new(sub[d].len(), sub[d - 1].len());
                    for (row, &i) in sub[d].iter().enumerate() {
                        for (col, x) in &complex.boundaries[d - 1].entries[i] {
                            m.add_entry(row, local[d - 1][col], x.clone());
                        }
                    }
                    m
                })
                .collect();
            let counts: Vec<usize> = sub.iter().map(Vec::len).collect();
            homology_groups(&counts, &boundaries)
        })
        .collect()
}
