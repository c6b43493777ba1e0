use std::sync::OnceLock;

use hyp6_data::DataSet;
use hyp6_pairing::*;
use proptest::prelude::*;

fn p6() -> &'static P6Context {
    static C: OnceLock<P6Context> = OnceLock::new();
    C.get_or_init(|| P6Context::new().unwrap())
}

fn q6() -> &'static QContext {
    static C: OnceLock<QContext> = OnceLock::new();
    C.get_or_init(|| QContext::new(6).unwrap())
}

fn q5() -> &'static QContext {
    static C: OnceLock<QContext> = OnceLock::new();
    C.get_or_init(|| QContext::new(5).unwrap())
}

fn array_text(id: usize) -> &'static str {
    DataSet::embedded()
        .unwrap()
        .text(&DataSet::manifold_array_name(id))
        .unwrap()
}

fn manifold(id: usize) -> EightPPairing {
    parse_8p_pairing(array_text(id), p6()).unwrap()
}

fn table4_codes() -> Vec<String> {
    DataSet::embedded()
        .unwrap()
        .lines("table4.txt")
        .unwrap()
        .into_iter()
        .map(|(_, l)| l.split_whitespace().nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn developments_reproduce_table4_codes() {
    let codes = table4_codes();
    assert_eq!(codes.len(), 9);
    for (id, expected) in (1..=9).zip(&codes) {
        let dev = develop_to_q(&manifold(id), p6()).unwrap();
        assert_eq!(&dev.code.to_string(), expected, "manifold {id}");
        let mut per_copy = [0usize; 8];
        for pl in &dev.placements {
            per_copy[pl.copy] += 1;
        }
        assert_eq!(per_copy, [8; 8], "manifold {id}");
    }
}

#[test]
fn first_entry_and_text_round_trip() {
    let m = manifold(1);
    assert_eq!(m.entry(0, 0), (1, 0));
    let again = parse_8p_pairing(&m.to_text(), p6()).unwrap();
    assert_eq!(again, m);
}

#[test]
fn parse_rejects_bad_arrays() {
    let text = array_text(1);
    let bad_power = text.replacen("2^0", "9^3", 1);
    assert!(matches!(
        parse_8p_pairing(&bad_power, p6()),
        Err(PairingError::PolytopeIndex { k: 9, .. })
    ));
    let short: String = text.lines().take(5).collect::<Vec<_>>().join("\n");
    assert!(matches!(parse_8p_pairing(&short, p6()), Err(PairingError::BadShape { .. })));
    let garbage = text.replacen("2^0", "2-0", 1);
    assert!(matches!(parse_8p_pairing(&garbage, p6()), Err(PairingError::MalformedToken { .. })));
    let broken = text.replacen("2^0", "3^0", 1);
    assert!(matches!(
        parse_8p_pairing(&broken, p6()),
        Err(PairingError::InvolutionViolation { .. })
    ));
}

#[test]
fn restrictions_of_manifolds_1_and_3() {
    let codes = table4_codes();
    for (id, expected) in [(1usize, "EKB98LLG6R2"), (3, "2B7JB47JG81")] {
        let c = PairingCode::parse(&codes[id - 1], 6).unwrap();
        let r = restrict_code(&c, q6(), q5()).unwrap();
        assert_eq!(r.to_string(), expected);
    }
}

#[test]
fn restriction_requires_invariance() {
    let c = PairingCode::parse(&table4_codes()[0], 6).unwrap();
    let mut p = decode_q_code(&c, q6()).unwrap();
    let side = (0..q6().q.num_sides())
        .find(|&i| q6().q.polytope.normals[i].coords()[0] == 0.into())
        .unwrap();
    let swap = hyp6_exact::SmallMatrix::from_lorentz(&hyp6_exact::LorentzMatrix::permutation_swap(7, 1, 2)).unwrap();
    p.transforms[side] = p.transforms[side].mul(&swap).unwrap();
    assert!(matches!(
        restrict_pairing(&p, q6(), q5()),
        Err(PairingError::InvarianceViolation(s)) if s == side
    ));
}

#[test]
fn decoded_pairings_are_involutions() {
    for code in table4_codes() {
        let c = PairingCode::parse(&code, 6).unwrap();
        let p = decode_q_code(&c, q6()).unwrap();
        assert_eq!(p.to_code(q6()).unwrap(), c);
        for i in 0..p.partner.len() {
            assert_eq!(p.partner[p.partner[i]], i);
            assert_eq!(q6().q.sides[i].base_side, q6().q.sides[p.partner[i]].base_side);
        }
    }
}

#[test]
fn orientability_matches_table4() {
    let rows = DataSet::embedded().unwrap().lines("table4.txt").unwrap();
    for (_, line) in rows {
        let f: Vec<&str> = line.split_whitespace().collect();
        let c = PairingCode::parse(f[1], 6).unwrap();
        assert_eq!(orientability_of_code(&c), f[2] == "1", "{}", f[1]);
    }
}

#[test]
fn manifold1_cycles_are_proper() {
    let m = manifold(1);
    let report = trace_face_cycles(&m.gluing(p6()), &p6().lattice).unwrap();
    assert!(report.is_proper(), "{:?}", report.violations);
    assert_eq!(report.orbits(0), 9);
    assert_eq!(report.orbits(5), 108);
}

#[test]
fn q_code_cycles() {
    let c = PairingCode::parse(&table4_codes()[0], 6).unwrap();
    let p = decode_q_code(&c, q6()).unwrap();
    let report = trace_face_cycles(&p.gluing(q6()), &q6().lattice).unwrap();
    assert!(report.is_proper(), "{:?}", &report.violations[..3.min(report.violations.len())]);
    let zero = decode_q_code(&PairingCode::trivial(6).unwrap(), q6()).unwrap();
    let bad = trace_face_cycles(&zero.gluing(q6()), &q6().lattice).unwrap();
    assert!(!bad.is_proper());
}

#[test]
fn search_edge_cases() {
    let none = search_pairings(p6(), &SearchConstraints::default(), 0).unwrap();
    assert!(none.budget_exhausted && none.pairings.is_empty() && !none.infeasible);
    let clash = SearchConstraints {
        fixed: vec![((0, 0), (1, 0)), ((1, 0), (2, 0))],
    };
    let out = search_pairings(p6(), &clash, 1000).unwrap();
    assert!(out.infeasible && out.pairings.is_empty());
}

#[test]
fn search_recovers_manifold1_from_its_first_row() {
    let m = manifold(1);
    let out = search_pairings(p6(), &SearchConstraints::fix_row(&m, 0), 200_000).unwrap();
    assert!(out.pairings.contains(&m), "nodes {} exhausted {}", out.nodes, out.budget_exhausted);
    let first = search_pairings_until(p6(), &SearchConstraints::fix_row(&m, 0), 200_000, &|p| p == &m).unwrap();
    assert!(first.stopped && first.pairings.last() == Some(&m));
    assert!(first.nodes <= out.nodes);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn code_text_round_trip(values in proptest::collection::vec(0u8..64, 21)) {
        let digits: Vec<KElement> = values.iter().map(|&value| KElement { dim: 6, value }).collect();
        let c = PairingCode::from_digits(6, digits).unwrap();
        prop_assert_eq!(PairingCode::parse(&c.to_string(), 6).unwrap(), c);
    }

    #[test]
    fn any_code_decodes_to_an_involution(values in proptest::collection::vec(0u8..64, 21)) {
        let digits: Vec<KElement> = values.iter().map(|&value| KElement { dim: 6, value }).collect();
        let c = PairingCode::from_digits(6, digits).unwrap();
        let p = decode_q_code(&c, q6()).unwrap();
        prop_assert_eq!(p.to_code(q6()).unwrap(), c);
    }
}
