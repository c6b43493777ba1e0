use std::collections::HashSet;
use std::sync::OnceLock;

use hyp6_coxeter::{constants, FiniteSymmetryGroup};
use hyp6_polytope::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn p6() -> &'static (RightAngledPolytope, FaceLattice) {
    static P: OnceLock<(RightAngledPolytope, FaceLattice)> = OnceLock::new();
    P.get_or_init(|| {
        let p = build_polytope(6).unwrap();
        let l = FaceLattice::enumerate(&p).unwrap();
        (p, l)
    })
}

fn q6() -> &'static (QPolytope, FaceLattice) {
    static Q: OnceLock<(QPolytope, FaceLattice)> = OnceLock::new();
    Q.get_or_init(|| {
        let q = build_q(6).unwrap();
        let l = FaceLattice::enumerate(&q.polytope).unwrap();
        (q, l)
    })
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

#[test]
fn p6_face_census() {
    let (p, l) = p6();
    assert_eq!(p.num_sides(), 27);
    assert_eq!(p.num_actual(), 72);
    assert_eq!(p.ideal_vertices.len(), 27);
    assert_eq!(l.counts(), vec![72, 648, 1080, 720, 216, 27, 1]);
    let kinds = l.edge_kind_counts();
    assert_eq!(kinds.get(&EdgeKind::Ray), Some(&432));
    assert_eq!(kinds.get(&EdgeKind::Line), Some(&216));
    assert_eq!(kinds.get(&EdgeKind::Segment), None);
}

#[test]
fn p6_incidence_degrees() {
    let (p, _) = p6();
    for v in 0..p.num_vertices() {
        let d = p.vertex_sides(v).len();
        assert_eq!(d, if p.is_ideal(v) { 10 } else { 6 });
    }
    for i in 0..27 {
        for v in p.vertices() {
            assert!(!p.normals[i].inner(v).unwrap().is_positive());
        }
    }
}

#[test]
fn p6_side_graph() {
    let (p, l) = p6();
    for i in 0..27 {
        for j in 0..27 {
            if i != j {
                let ip = p.inner(i, j);
                assert!(ip.is_zero() || ip == BigInt::from(-1));
            }
        }
    }
    let perp = p.perpendicular_pairs();
    assert_eq!(perp.len(), 216);
    assert_eq!(l.adjacency_graph(), perp);
    let mut deg = [0usize; 27];
    for &(i, j) in &perp {
        deg[i] += 1;
        deg[j] += 1;
    }
    assert!(deg.iter().all(|&d| d == 16));
}

#[test]
fn sigma6_acts_by_graph_automorphisms() {
    let (p, _) = p6();
    let mut g = FiniteSymmetryGroup::sigma(6, 60_000).unwrap();
    g.attach_side_action(&p.normals).unwrap();
    let edges: HashSet<(usize, usize)> = p.perpendicular_pairs().into_iter().collect();
    for perm in g.side_action().unwrap().iter().step_by(97) {
        for &(i, j) in &edges {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            assert!(edges.contains(&(a, b)));
        }
    }
}

#[test]
fn actual_vertex_and_line_edge_counts() {
    let a = [1usize, 2, 5, 16, 72, 576];
    let lines = [1usize, 3, 10, 40, 216, 2016];
    for n in 2..=7 {
        let p = build_polytope(n).unwrap();
        let l = FaceLattice::enumerate(&p).unwrap();
        assert_eq!(p.num_actual(), a[n - 2], "a_{n}");
        assert_eq!(l.edge_kind_counts().get(&EdgeKind::Line).copied().unwrap_or(0), lines[n - 2], "l_{n}");
    }
}

#[test]
fn face_identities_and_euler_characteristics() {
    let mut prev: Option<FaceLattice> = None;
    for n in 2..=7 {
        let l = FaceLattice::enumerate(&build_polytope(n).unwrap()).unwrap();
        let r = verify_face_identities(&l, prev.as_ref()).unwrap();
        assert_eq!(r.checks.len(), n.saturating_sub(2));
        if n % 2 == 0 {
            assert_eq!(r.euler_characteristic, constants(n).unwrap().euler_char_gamma2, "n={n}");
        } else {
            assert!(r.euler_characteristic.is_zero(), "n={n}");
        }
        prev = Some(l);
    }
    let l2 = FaceLattice::enumerate(&build_polytope(2).unwrap()).unwrap();
    assert_eq!(reflection_group_euler_characteristic(&l2), q(-1, 4));
}

#[test]
fn ridge_identity_for_p6() {
    let (_, l6) = p6();
    let l5 = FaceLattice::enumerate(&build_polytope(5).unwrap()).unwrap();
    let r = verify_face_identities(l6, Some(&l5)).unwrap();
    let ridge = r.checks.iter().find(|c| c.0 == 4).unwrap();
    assert_eq!(ridge.1, 216);
    assert_eq!(ridge.2, q(27 * 16, 2));
}

#[test]
fn q6_sides() {
    let (qp, _) = q6();
    assert_eq!(qp.num_sides(), 252);
    assert_eq!(qp.sides.iter().filter(|s| s.large).count(), 60);
    assert_eq!(qp.sides.iter().filter(|s| !s.large).count(), 192);
    let first: Vec<Vec<i64>> = qp.polytope.normals[..4].iter().map(|u| u.to_i64s().unwrap()).collect();
    assert_eq!(
        first,
        vec![
            vec![1, 1, 0, 0, 0, 0, 1],
            vec![-1, 1, 0, 0, 0, 0, 1],
            vec![1, -1, 0, 0, 0, 0, 1],
            vec![-1, -1, 0, 0, 0, 0, 1],
        ]
    );
    for k in 0u8..64 {
        let perm = qp.k_action(k);
        let mut seen = perm.clone();
        seen.sort();
        assert_eq!(seen, (0..252).collect::<Vec<_>>());
        for (i, &j) in perm.iter().enumerate() {
            assert_eq!(qp.sides[i].base_side, qp.sides[j].base_side);
        }
    }
    assert_eq!(qp.side_index(6, 0b11), Some(3));
    assert_eq!(qp.side_index(26, 0b1), Some(252 - 32));
    assert_eq!(qp.side_index(26, 0b10), Some(252 - 32 + 1));
}

#[test]
fn q6_face_counts() {
    let (_, l) = q6();
    assert_eq!(&l.counts()[..6], &[1344, 14208, 23040, 13920, 3360, 252]);
}

#[test]
fn q5_has_72_sides() {
    let q5 = build_q(5).unwrap();
    assert_eq!(q5.num_sides(), 72);
    assert!(FaceLattice::enumerate(&q5.polytope).is_ok());
}

#[test]
fn out_of_range() {
    assert!(matches!(build_polytope(8), Err(PolytopeError::DimensionOutOfRange(8))));
    assert!(matches!(build_q(4), Err(PolytopeError::DimensionOutOfRange(4))));
}

#[test]
fn corrupted_table_is_detected() {
    let (p, _) = p6();
    let mut files = hyp6_data::DataSet::embedded().unwrap().to_map();
    let t = files.get_mut("p6_normals.txt").unwrap();
    *t = t.replacen("0 1 1 0 0 0 1", "1 0 1 0 0 0 1", 1);
    let bad = hyp6_data::DataSet::unchecked(files);
    assert!(matches!(cross_check_tables(p, &bad), Err(PolytopeError::TableMismatch(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn faces_are_perpendicular_and_closed(id in 0usize..2764) {
        let (p, l) = p6();
        let f = l.face(id);
        for (a, &i) in f.sides.iter().enumerate() {
            for &j in &f.sides[a + 1..] {
                prop_assert!(p.perpendicular(i, j));
            }
        }
        let expect: Vec<usize> = (0..p.num_vertices())
            .filter(|&v| f.sides.iter().all(|&s| p.incidence(s).contains(v)))
            .collect();
        prop_assert_eq!(&f.vertices, &expect);
        prop_assert_eq!(f.sides.len() + f.dim, 6);
    }
}

