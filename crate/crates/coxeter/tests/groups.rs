use std::collections::BTreeSet;

use hyp6_coxeter::*;
use hyp6_data::DataSet;
use hyp6_exact::{LorentzMatrix, LorentzVector, SmallMatrix};
use num_rational::BigRational;
use proptest::prelude::*;

fn v(xs: &[i64]) -> LorentzVector {
    LorentzVector::from_i64(xs)
}

fn table_rows(name: &str) -> Vec<Vec<i64>> {
    DataSet::embedded().unwrap().int_rows(name).unwrap()
}

fn sigma6_gens() -> Vec<LorentzMatrix> {
    let d = simplex_generators(6).unwrap();
    sigma_generator_indices(6)
        .unwrap()
        .iter()
        .map(|&i| d.generator(i).clone())
        .collect()
}

/// Table 1 entries as primitive integral points, vertex i opposite side i.
fn table1(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut first = vec![0i64; n + 1];
    first[0] = 1;
    first[n] = 1;
    out.push(first);
    let last_k = if n == 2 { 2 } else { n };
    for k in 2..=last_k {
        let mut p = vec![0i64; n + 1];
        for x in p.iter_mut().take(k) {
            *x = 1;
        }
        p[n] = if k == 2 { 2 } else { 3 };
        out.push(p);
    }
    let mut apex = vec![0i64; n + 1];
    apex[n] = 1;
    out.push(apex);
    out
}

#[test]
fn simplex_vertices_match_table1() {
    for n in MIN_DIM..=MAX_DIM {
        let d = simplex_generators(n).unwrap();
        let got: Vec<Vec<i64>> = d.vertices.iter().map(|x| x.point.to_i64s().unwrap()).collect();
        assert_eq!(got, table1(n), "n={n}");
        assert!(!d.vertices[n].ideal);
    }
    let d6 = simplex_generators(6).unwrap();
    let ideal: Vec<usize> = (0..7).filter(|&i| d6.vertices[i].ideal).collect();
    assert_eq!(ideal, vec![0]);
}

#[test]
fn fixed_simplex_data_for_n6() {
    let d = simplex_generators(6).unwrap();
    assert_eq!(d.generator(6), &LorentzMatrix::diag(&[1, 1, 1, 1, 1, -1, 1]));
    assert_eq!(d.generator(1), &LorentzMatrix::permutation_swap(7, 1, 2));
    assert_eq!(d.center(), &v(&[1, 1, 1, 1, 1, 1, 3]));
    assert_eq!(d.coxeter_symbol(), "1-2 2-3 3-4 3-7 4-5 5-6[4]");
}

#[test]
fn sigma6_has_order_51840_and_fixes_the_center() {
    let g = FiniteSymmetryGroup::sigma(6, 60_000).unwrap();
    assert_eq!(g.order(), 51840);
    assert!(g.is_closed());
    assert!(g.fixes(&v(&[1, 1, 1, 1, 1, 1, 3])));
    assert!(g.contains(&matrix_abar()));
    assert!(!g.contains(&matrix_a()));
}

#[test]
fn sigma0_orders() {
    // |Σⁿ|/|Σ₀ⁿ| sides, each a copy of P^{n-1}
    let expected = [(3usize, 2usize), (4, 12), (5, 120), (6, 1920)];
    for (n, o) in expected {
        let d = simplex_generators(n).unwrap();
        let idx = sigma0_generator_indices(&d).unwrap().unwrap();
        let gens: Vec<_> = idx.iter().map(|&i| d.generator(i).clone()).collect();
        let g = FiniteSymmetryGroup::generate(n, idx, &gens, 10_000).unwrap();
        assert_eq!(g.order(), o, "n={n}");
    }
}

#[test]
fn orbits_reproduce_tables_2_and_3() {
    let gens = sigma6_gens();
    let verts = table_rows("p6_vertices.txt");
    let actual: BTreeSet<Vec<i64>> = verts[..72].iter().cloned().collect();
    let ideal: BTreeSet<Vec<i64>> = verts[72..].iter().cloned().collect();
    let orbit = |seed: &[i64]| -> BTreeSet<Vec<i64>> {
        group_orbit(&gens, &[v(seed)], 1000)
            .unwrap()
            .iter()
            .map(|x| x.to_i64s().unwrap())
            .collect()
    };
    assert_eq!(orbit(&[0, 0, 0, 0, 0, 0, 1]), actual);
    assert_eq!(orbit(&[1, 0, 0, 0, 0, 0, 1]), ideal);
    let normals: BTreeSet<Vec<i64>> = table_rows("p6_normals.txt").into_iter().collect();
    assert_eq!(orbit(&[0, 0, 0, 0, 0, -1, 0]), normals);
}

#[test]
fn sigma_from_abar_matches_the_published_cycles() {
    let normals: Vec<LorentzVector> = table_rows("p6_normals.txt").iter().map(|r| v(r)).collect();
    let perm = sigma_permutation(&matrix_abar(), &normals).unwrap();
    assert_eq!(perm[0], 0);
    assert_eq!(perm[1], 10);
    assert_eq!(perm[7], 24);
    assert_eq!(
        format_cycles(&cycle_decomposition(&perm)),
        "(2 11 4 20 9 21 12 14)(3 5 18 19 27 15 16 6)(7 17 23 24 26 22 13 10)(8 25)"
    );
    assert_eq!(
        sigma_permutation(&matrix_a(), &normals).unwrap_err(),
        CoxeterError::NotASymmetry(2)
    );
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

#[test]
fn exact_constants() {
    let c6 = constants(6).unwrap();
    assert_eq!(c6.index_gamma2, 51840.into());
    assert_eq!(c6.vol_pn.to_string(), "pi^3/15");
    assert_eq!(c6.euler_char_gamma2, q(-1, 8));
    assert_eq!(c6.euler_char_gamma, q(-1, 414720));
    let c8 = constants(8).unwrap();
    assert_eq!(c8.euler_char_gamma2, q(17, 4));
    assert_eq!(c8.vol_pn.to_string(), "136*pi^4/105");
    assert_eq!(constants(2).unwrap().euler_char_gamma2, q(-1, 4));
    assert_eq!(constants(4).unwrap().euler_char_gamma2, q(1, 16));
    for n in [2usize, 4, 6, 8] {
        let c = constants(n).unwrap();
        let (Volume::Exact(vol), Volume::Exact(cov)) = (&c.vol_pn, &c.covolume) else {
            panic!("even n must be exact");
        };
        assert_eq!(vol.coeff, &cov.coeff * BigRational::from(c.sigma_order.clone()));
        let kappa = c.kappa.clone().unwrap();
        if n <= 6 {
            assert_eq!(vol.coeff, &kappa.coeff * &c.euler_char_gamma2);
        } else {
            assert_eq!(vol.coeff, &kappa.coeff * &c.euler_char_gamma2 * q(2, 1));
        }
    }
}

/// Independent evaluation by partial sums with an Euler–Maclaurin tail.
fn zeta3_direct() -> f64 {
    let n = 100_000u64;
    let mut s = 0.0;
    for k in (1..=n).rev() {
        let k = k as f64;
        s += 1.0 / (k * k * k);
    }
    let nf = n as f64;
    s + 1.0 / (2.0 * nf * nf) - 1.0 / (2.0 * nf * nf * nf) + 1.0 / (4.0 * nf.powi(4))
}

/// Alternating sum accelerated by averaging consecutive partial sums.
fn alternating(s: f64, terms: u64) -> f64 {
    let mut acc = 0.0;
    let mut prev = 0.0;
    for k in 0..terms {
        prev = acc;
        let d = (2 * k + 1) as f64;
        let t = d.powf(-s);
        acc += if k % 2 == 0 { t } else { -t };
    }
    (acc + prev) / 2.0
}

#[test]
fn odd_volumes_to_twelve_digits() {
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    assert!(rel(zeta3(), zeta3_direct()) < 1e-12);
    assert!(rel(zeta3(), 1.202056903159594) < 1e-13);
    assert!(rel(catalan(), alternating(2.0, 2_000_000)) < 1e-12);
    assert!(rel(dirichlet_beta4(), alternating(4.0, 20_000)) < 1e-12);
    let v5 = constants(5).unwrap().vol_pn.value();
    assert!(rel(v5, 1.0517997902646) < 1e-12);
    assert!(rel(constants(3).unwrap().vol_pn.value(), 0.915965594177219) < 1e-12);
    assert!(rel(constants(7).unwrap().vol_pn.value(), 7.911556413928843) < 1e-12);
    for n in [3usize, 5, 7] {
        let c = constants(n).unwrap();
        let s = c.sigma_order.to_string().parse::<f64>().unwrap();
        assert!(rel(c.covolume.value() * s, c.vol_pn.value()) < 1e-14);
    }
}

fn sigma6() -> &'static FiniteSymmetryGroup {
    use std::sync::OnceLock;
    static G: OnceLock<FiniteSymmetryGroup> = OnceLock::new();
    G.get_or_init(|| FiniteSymmetryGroup::sigma(6, 60_000).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_words_stay_in_sigma6(word in proptest::collection::vec(0usize..6, 0..40)) {
        let g = sigma6();
        let gens = g.generators();
        let mut m = SmallMatrix::identity(7);
        for &i in &word {
            m = m.mul(&gens[i]).unwrap();
        }
        prop_assert!(g.position(&m).is_some());
        let lm = m.to_lorentz();
        prop_assert!(lm.is_positive_lorentzian());
        prop_assert_eq!(lm.apply(&v(&[1, 1, 1, 1, 1, 1, 3])), v(&[1, 1, 1, 1, 1, 1, 3]));
    }

    #[test]
    fn products_of_elements_are_elements(a in 0usize..51840, b in 0usize..51840) {
        let g = sigma6();
        let e = g.small_elements();
        prop_assert!(g.position(&e[a].mul(&e[b]).unwrap()).is_some());
        prop_assert!(g.position(&e[a].lorentz_inverse()).is_some());
    }
}
