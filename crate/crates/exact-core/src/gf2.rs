//! Linear algebra over the field with two elements, packed 64 bits per word.

use std::fmt;

use crate::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Gf2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn from_u8s(bits: &[u8]) -> Self {
        Self::from_bits(&bits.iter().map(|&b| b & 1 == 1).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len);
        let m = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "GF(2) vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }

    fn first_one_from(&self, start: usize) -> Option<usize> {
        (start..self.len).find(|&i| self.get(i))
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// Dense GF(2) matrix stored as packed rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Solve {
    /// One solution if the system is consistent.
    pub solution: Option<Gf2Vector>,
    pub rank: usize,
    pub augmented_rank: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<Gf2Vector>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Gf2Vector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(ExactError::Ragged);
        }
        Ok(Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_u8_rows(rows: &[Vec<u8>]) -> Result<Self, ExactError> {
        Self::from_rows(rows.iter().map(|r| Gf2Vector::from_u8s(r)).collect())
    }

    pub fn from_columns(cols: &[Gf2Vector]) -> Result<Self, ExactError> {
        let rows = cols.first().map_or(0, Gf2Vector::len);
        if cols.iter().any(|c| c.len() != rows) {
            return Err(ExactError::Ragged);
        }
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.data[i].set(j, b)
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "GF(2) product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.data[i].ones() {
                out.data[i].xor_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.cols, v.len());
        let mut out = Gf2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        eliminate(&mut rows, self.cols).len()
    }

    /// Rank of the submatrix formed by the given columns.
    pub fn column_subset_rank(&self, cols: &[usize]) -> usize {
        let cs: Vec<Gf2Vector> = cols.iter().map(|&j| self.column(j)).collect();
        Gf2Matrix::from_columns(&cs).map_or(0, |m| m.transpose().rank())
    }

    pub fn to_u8_rows(&self) -> Vec<Vec<u8>> {
        self.data.iter().map(Gf2Vector::to_bits).collect()
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Gauss–Jordan on packed rows restricted to the first `ncols` columns.
/// Returns pivot columns in row order; row r of the result has its pivot at pivots[r].
fn eliminate(rows: &mut Vec<Gf2Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut c = 0;
    while r < rows.len() && c < ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            c += 1;
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
        c += 1;
    }
    rows.truncate(r.max(pivots.len()));
    pivots
}

/// Solve M x = t over GF(2).
pub fn gf2_solve(mat: &Gf2Matrix, target: &Gf2Vector) -> Result<Gf2Solve, ExactError> {
    if target.len() != mat.rows {
        return Err(ExactError::DimensionMismatch(target.len(), mat.rows));
    }
    let n = mat.cols;
    let mut aug: Vec<Gf2Vector> = (0..mat.rows)
        .map(|i| {
            let mut r = Gf2Vector::zeros(n + 1);
            for j in mat.data[i].ones() {
                r.set(j, true);
            }
            r.set(n, target.get(i));
            r
        })
        .collect();
    let pivots = eliminate(&mut aug, n + 1);
    let rank = pivots.iter().filter(|&&p| p < n).count();
    let augmented_rank = pivots.len();
    let solution = (augmented_rank == rank).then(|| {
        let mut x = Gf2Vector::zeros(n);
        for (r, &p) in pivots.iter().enumerate() {
            if aug[r].get(n) {
                x.set(p, true);
            }
        }
        x
    });
    Ok(Gf2Solve {
        solution,
        rank,
        augmented_rank,
    })
}

impl Gf2Vector {
    /// Index of the lowest set bit, if any.
    pub fn lowest_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system_returns_target() {
        let t = Gf2Vector::from_u8s(&[1, 0, 1, 1, 0]);
        let s = gf2_solve(&Gf2Matrix::identity(5), &t).unwrap();
        assert_eq!(s.solution, Some(t));
        assert_eq!(s.rank, 5);
    }

    #[test]
    fn zero_matrix_nonzero_target() {
        let t = Gf2Vector::from_u8s(&[0, 1, 0]);
        let s = gf2_solve(&Gf2Matrix::zeros(3, 4), &t).unwrap();
        assert!(s.solution.is_none());
        assert_eq!((s.rank, s.augmented_rank), (0, 1));
    }

    #[test]
    fn mismatch_rejected() {
        assert!(gf2_solve(&Gf2Matrix::zeros(3, 4), &Gf2Vector::zeros(4)).is_err());
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut m = Gf2Matrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 64, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
        assert_eq!(m.column_subset_rank(&[64, 129, 3]), 2);
    }
}
