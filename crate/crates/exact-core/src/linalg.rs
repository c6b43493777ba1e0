//! Dense exact linear algebra over ℤ (fraction-free).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::content;

/// Determinant by Bareiss elimination.
pub fn det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Row-echelon basis built one vector at a time; rows are kept primitive.
#[derive(Debug, Clone, Default)]
pub struct IncrementalBasis {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IncrementalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = &row[*p];
            let b = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * a - &b * r;
            }
            let g = content(&v);
            if !g.is_zero() && !g.is_one() {
                for x in v.iter_mut() {
                    *x = x.div_floor(&g);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was added.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let mut r = r;
                if r[p].is_negative() {
                    r.iter_mut().for_each(|x| *x = -&*x);
                }
                self.rows.push((p, r));
                true
            }
        }
    }
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut b = IncrementalBasis::new();
    for r in rows {
        b.insert(r);
    }
    b.rank()
}

/// Indices of a greedily chosen maximal independent subfamily, in input order.
pub fn greedy_basis(vectors: &[Vec<BigInt>]) -> Vec<usize> {
    let mut b = IncrementalBasis::new();
    vectors
        .iter()
        .enumerate()
        .filter_map(|(i, v)| b.insert(v).then_some(i))
        .collect()
}

/// Integer basis of the right kernel {x : A x = 0}, each vector primitive.
pub fn nullspace(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    // reduced echelon form, fraction-free.
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            let pr = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pr) {
                *x = &*x * &a - &b * y;
            }
            let g = content(&m[i]);
            if !g.is_zero() {
                m[i].iter_mut().for_each(|x| *x = x.div_floor(&g));
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        // x_f = L, x_{p_i} = -m[i][f] * L / m[i][p_i]
        let mut l = BigInt::one();
        for (i, &p) in pivots.iter().enumerate() {
            l = l.lcm(&m[i][p]);
        }
        let mut x = vec![BigInt::zero(); ncols];
        x[f] = l.clone();
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = -(&m[i][f] * &l) / &m[i][p];
        }
        let g = content(&x);
        x.iter_mut().for_each(|y| *y = y.div_floor(&g));
        out.push(x);
    }
    out
}

/// MᵀN for column-frame matrices given as lists of columns.
pub fn gram(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|x| {
            b.iter()
                .map(|y| x.iter().zip(y).map(|(p, q)| p * q).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&m(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), BigInt::zero());
        assert_eq!(det(&m(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 5]])), BigInt::from(-27));
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            let s: BigInt = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        assert_eq!(greedy_basis(&a), vec![0, 2]);
    }
}
