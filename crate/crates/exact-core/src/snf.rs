//! Smith normal form over ℤ.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[BigInt]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        crate::linalg::det(&self.row_vecs())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_dst -= q * row_src
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] -= t;
        }
    }

    /// col_dst -= q * col_src
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] -= t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            *x = -&*x;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Nonzero invariant factors d₁ | d₂ | … | d_r.
    pub diagonal: Vec<BigInt>,
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
    pub source_shape: (usize, usize),
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The padded diagonal matrix D = U·A·V.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let (r, c) = self.source_shape;
        let mut d = IntMatrix::zeros(r, c);
        for (i, x) in self.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }
}

/// Smith normal form with transforms: U·A·V = diag(d₁,…,d_r,0,…).
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d.get(i, j);
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remaining entry of row/column t into the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    let x = d.get(i, t);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let x = d.get(t, j);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    d.row_axpy(t, i, &minus_one);
                    u.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..m.min(n))
        .map(|i| d.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect();
    SmithDecomposition {
        diagonal,
        u,
        v,
        source_shape: (m, n),
    }
}

/// Sparse integer matrix in row-list form; entries are (column, value) sorted by column.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    /// Add `x` to entry (i, j).
    pub fn add_entry(&mut self, i: usize, j: usize, x: BigInt) {
        assert!(i < self.rows && j < self.cols);
        let row = &mut self.entries[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(p) => {
                row[p].1 += x;
                if row[p].1.is_zero() {
                    row.remove(p);
                }
            }
            Err(p) => {
                if !x.is_zero() {
                    row.insert(p, (j, x));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (i, r) in self.entries.iter().enumerate() {
            for (j, x) in r {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseIntMatrix::new(self.rows, other.cols);
        for (i, r) in self.entries.iter().enumerate() {
            for (k, a) in r {
                for (j, b) in &other.entries[*k] {
                    out.add_entry(i, *j, a * b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }
}

/// dst -= f * src on sorted sparse rows.
fn sparse_axpy(dst: &[(usize, BigInt)], src: &[(usize, BigInt)], f: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut a, mut b) = (0, 0);
    while a < dst.len() || b < src.len() {
        let ca = dst.get(a).map_or(usize::MAX, |e| e.0);
        let cb = src.get(b).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(dst[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -(f * &src[b].1)));
            b += 1;
        } else {
            let x = &dst[a].1 - f * &src[b].1;
            if !x.is_zero() {
                out.push((ca, x));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// Nonzero invariant factors of a sparse matrix, ascending (a divisibility chain).
///
/// Unit pivots are eliminated first, choosing the column with fewest entries;
/// whatever remains is reduced densely.
pub fn invariant_factors_sparse(a: &SparseIntMatrix) -> Vec<BigInt> {
    let mut rows: Vec<Vec<(usize, BigInt)>> = a.entries.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); a.cols];
    for (i, r) in rows.iter().enumerate() {
        for (j, _) in r {
            col_rows[*j].insert(i);
        }
    }
    let mut alive: BTreeSet<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    let mut units = 0usize;
    loop {
        let mut progress = false;
        let mut order: Vec<usize> = alive.iter().copied().collect();
        order.sort_by_key(|&i| (rows[i].len(), i));
        for ri in order {
            if !alive.contains(&ri) {
                continue;
            }
            let pivot = rows[ri]
                .iter()
                .filter(|(_, x)| x.abs().is_one())
                .min_by_key(|(j, _)| (col_rows[*j].len(), *j))
                .map(|(j, x)| (*j, x.clone()));
            let Some((pc, pv)) = pivot else { continue };
            let prow = rows[ri].clone();
            let others: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| r != ri).collect();
            for rj in others {
                let x = rows[rj]
                    .iter()
                    .find(|e| e.0 == pc)
                    .map(|e| e.1.clone())
                    .unwrap();
                let f = &x * &pv; // pv = ±1 so x/pv = x*pv
                let old = std::mem::take(&mut rows[rj]);
                let new = sparse_axpy(&old, &prow, &f);
                for (j, _) in &old {
                    col_rows[*j].remove(&rj);
                }
                for (j, _) in &new {
                    col_rows[*j].insert(rj);
                }
                rows[rj] = new;
                if rows[rj].is_empty() {
                    alive.remove(&rj);
                }
            }
            for (j, _) in &prow {
                col_rows[*j].remove(&ri);
            }
            rows[ri].clear();
            alive.remove(&ri);
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let mut out = vec![BigInt::one(); units];
    if !alive.is_empty() {
        let cols: Vec<usize> = alive
            .iter()
            .flat_map(|&i| rows[i].iter().map(|e| e.0))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut dense = IntMatrix::zeros(alive.len(), cols.len());
        for (r, &i) in alive.iter().enumerate() {
            for (j, x) in &rows[i] {
                let c = cols.binary_search(j).unwrap();
                dense.set(r, c, x.clone());
            }
        }
        out.extend(smith_normal_form(&dense).diagonal);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_2_3() {
        let s = smith_normal_form(&IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.u.mul(&IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]])).mul(&s.v), s.diagonal_matrix());
    }

    #[test]
    fn zero_and_identity() {
        assert!(smith_normal_form(&IntMatrix::zeros(3, 2)).diagonal.is_empty());
        let s = smith_normal_form(&IntMatrix::identity(4));
        assert_eq!(s.diagonal, vec![BigInt::one(); 4]);
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let dense = IntMatrix::from_i64_rows(&rows);
        let mut sp = SparseIntMatrix::new(3, 3);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                sp.add_entry(i, j, BigInt::from(x));
            }
        }
        assert_eq!(invariant_factors_sparse(&sp), smith_normal_form(&dense).diagonal);
    }

    #[test]
    fn empty_shapes() {
        assert!(smith_normal_form(&IntMatrix::zeros(0, 3)).diagonal.is_empty());
        assert!(invariant_factors_sparse(&SparseIntMatrix::new(0, 0)).is_empty());
    }
}
