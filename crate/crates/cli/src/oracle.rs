//! Brute-force oracles for the exact linear algebra, used by the report.

use hyp6_exact::linalg::det;
use hyp6_exact::{gf2_solve, invariant_factors_sparse, smith_normal_form, BigInt, Gf2Matrix, Gf2Vector, IntMatrix, SparseIntMatrix};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub cases: usize,
    pub agreements: usize,
    /// Description of the first disagreeing case.
    pub first_failure: Option<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.agreements == self.cases
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors as quotients of determinantal divisors
/// d_k = gcd of all k×k minors.
pub fn determinantal_invariants(a: &[Vec<i64>]) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        let mut g = BigInt::zero();
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| BigInt::from(a[i][j])).collect())
                    .collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// Dense and sparse Smith forms against the determinantal oracle on random
/// matrices of size at most 6×6 with entries in −5..=5.
pub fn snf_oracle_suite(cases: usize, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreements = 0;
    let mut first_failure = None;
    for _ in 0..cases {
        let (m, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let expected = determinantal_invariants(&a);
        let am = IntMatrix::from_i64_rows(&a);
        let dense = smith_normal_form(&am);
        let mut sp = SparseIntMatrix::new(m, n);
        for (i, r) in a.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                sp.add_entry(i, j, BigInt::from(x));
            }
        }
        let ok = dense.diagonal == expected
            && dense.u.mul(&am).mul(&dense.v) == dense.diagonal_matrix()
            && invariant_factors_sparse(&sp) == expected;
        if ok {
            agreements += 1;
        } else if first_failure.is_none() {
            first_failure = Some(format!("{a:?}: expected {expected:?}, got {:?}", dense.diagonal));
        }
    }
    OracleReport {
        cases,
        agreements,
        first_failure,
    }
}

fn solves(rows: &[Vec<u8>], t: &[u8], x: u32) -> bool {
    rows.iter().zip(t).all(|(r, &ti)| {
        let s = r.iter().enumerate().fold(0u8, |acc, (j, &b)| acc ^ (b & (x >> j) as u8 & 1));
        s == ti
    })
}

/// gf2_solve against enumeration of all 2ⁿ assignments on random systems
/// with at most 12 unknowns.
pub fn gf2_oracle_suite(cases: usize, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreements = 0;
    let mut first_failure = None;
    for _ in 0..cases {
        let r = rng.gen_range(1..=14);
        let c = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.6);
        let rows: Vec<Vec<u8>> = (0..r).map(|_| (0..c).map(|_| rng.gen_bool(density) as u8).collect()).collect();
        let t: Vec<u8> = (0..r).map(|_| rng.gen_bool(0.5) as u8).collect();
        let solvable = (0u32..1 << c).any(|x| solves(&rows, &t, x));
        let m = Gf2Matrix::from_u8_rows(&rows).expect("rectangular");
        let tv = Gf2Vector::from_u8s(&t);
        let ok = match gf2_solve(&m, &tv) {
            Ok(s) => {
                s.solution.is_some() == solvable
                    && s.solution.as_ref().map_or(true, |x| {
                        let bits = x.ones().fold(0u32, |acc, j| acc | 1 << j);
                        solves(&rows, &t, bits)
                    })
            }
            Err(_) => false,
        };
        if ok {
            agreements += 1;
        } else if first_failure.is_none() {
            first_failure = Some(format!("{rows:?} x = {t:?}: oracle solvable = {solvable}"));
        }
    }
    OracleReport {
        cases,
        agreements,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinantal_oracle_on_known_matrices() {
        let f = |a: &[Vec<i64>]| determinantal_invariants(a).into_iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(f(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(f(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert!(f(&[vec![0, 0]]).is_empty());
    }

    #[test]
    fn suites_agree() {
        assert!(snf_oracle_suite(20, 1).passed());
        assert!(gf2_oracle_suite(20, 1).passed());
    }
}
