//! Independent oracles for Smith normal form and GF(2) solving.

use hyp6_exact::linalg::det;
use hyp6_exact::{gf2_solve, smith_normal_form, Gf2Matrix, Gf2Vector, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
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
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k×k minors.
fn oracle_invariants(a: &[Vec<i64>]) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        let mut g = BigInt::zero();
        for rs in combinations(m, k) {
            for cs in combinations(n, k) {
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

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let m = rng.gen_range(1..=6);
    let n = rng.gen_range(1..=6);
    (0..m)
        .map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect())
        .collect()
}

fn check_snf(a: &[Vec<i64>]) {
    let am = IntMatrix::from_i64_rows(a);
    let s = smith_normal_form(&am);
    assert_eq!(s.u.mul(&am).mul(&s.v), s.diagonal_matrix(), "U·A·V ≠ D for {a:?}");
    assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one(), "non-unimodular transform");
    for w in s.diagonal.windows(2) {
        assert!(w[1].is_multiple_of(&w[0]));
    }
    assert_eq!(s.diagonal, oracle_invariants(a), "invariant factors for {a:?}");
}

#[test]
fn snf_matches_determinantal_oracle_on_200_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..200 {
        check_snf(&random_matrix(&mut rng));
    }
}

#[test]
fn snf_diag_2_3_oracle() {
    assert_eq!(oracle_invariants(&[vec![2, 0], vec![0, 3]]), vec![BigInt::from(1), BigInt::from(6)]);
    check_snf(&[vec![2, 0], vec![0, 3]]);
}

/// Exhaustive search over all 2^n candidate solutions.
fn oracle_solvable(rows: &[Vec<u8>], t: &[u8]) -> bool {
    let n = rows.first().map_or(0, Vec::len);
    (0u32..1 << n).any(|x| {
        rows.iter().zip(t).all(|(r, &ti)| {
            let s = r.iter().enumerate().fold(0u8, |acc, (j, &b)| acc ^ (b & (x >> j) as u8 & 1));
            s == ti
        })
    })
}

fn check_gf2(rows: &[Vec<u8>], t: &[u8]) {
    let m = Gf2Matrix::from_u8_rows(rows).unwrap();
    let tv = Gf2Vector::from_u8s(t);
    let s = gf2_solve(&m, &tv).unwrap();
    assert_eq!(s.solution.is_some(), oracle_solvable(rows, t));
    assert_eq!(s.solution.is_none(), s.augmented_rank > s.rank);
    if let Some(x) = &s.solution {
        assert_eq!(m.mul_vec(x), tv);
    }
}

#[test]
fn gf2_matches_exhaustive_oracle_on_200_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..200 {
        let r = rng.gen_range(1..=14);
        let c = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.6);
        let rows: Vec<Vec<u8>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_bool(density) as u8).collect())
            .collect();
        let t: Vec<u8> = (0..r).map(|_| rng.gen_bool(0.5) as u8).collect();
        check_gf2(&rows, &t);
    }
}

proptest! {
    #[test]
    fn prop_snf_reconstructs(a in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 1..=5), 1..=5)) {
        let n = a[0].len();
        let a: Vec<Vec<i64>> = a.into_iter().map(|mut r| { r.resize(n, 0); r }).collect();
        check_snf(&a);
    }

    #[test]
    fn prop_gf2_solve_vs_rank(rows in proptest::collection::vec(proptest::collection::vec(0u8..=1, 8), 1..=10),
                              t in proptest::collection::vec(0u8..=1, 10)) {
        let t = &t[..rows.len()];
        check_gf2(&rows, t);
    }
}
