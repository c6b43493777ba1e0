//! The reproduction suite: twelve criteria, each a list of named checks
//! against the reference tables of a [`DataSet`].

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use hyp6_coxeter::{constants, cycle_decomposition, format_cycles, matrix_a, matrix_abar, sigma_permutation, Volume};
use hyp6_data::DataSet;
use hyp6_homology::{build_quotient_complex, cusp_sections, TruncatedPolytope};
use hyp6_pairing::{
    decode_digit, develop_to_q, encode_digit, orientability_of_code, restrict_code, search_pairings_until, QContext,
    SearchConstraints,
};
use hyp6_polytope::{build_polytope, EdgeKind, FaceLattice};
use hyp6_verify::{
    build_code_matrix, face_cycles_proper, orbit_certify, sigma_star_on_v, torsion_free_h, OrbitVerdict,
    TorsionMode, VerifyContext,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::oracle::{gf2_oracle_suite, snf_oracle_suite};
use crate::records::{load_records, ManifoldRecord};
use crate::CliError;

/// Reference values of the odd-dimensional volume constants, to 30 digits.
const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932;
const SEVEN_ZETA3_OVER_8: f64 = 1.051_799_790_264_644_999_724_770_891_323;
const EIGHT_BETA4: f64 = 7.911_556_413_928_842_688_867_381_065_827;
const VOLUME_TOLERANCE: f64 = 1e-10;

const SIGMA_CYCLES: &str = "(2 11 4 20 9 21 12 14)(3 5 18 19 27 15 16 6)(7 17 23 24 26 22 13 10)(8 25)";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOptions {
    /// Node budget of the search criterion.
    pub search_budget: u64,
    pub mutations: usize,
    pub oracle_cases: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            search_budget: 100_000_000,
            mutations: 20,
            oracle_cases: 200,
            seed: 0x6879_7036,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Set when the criterion could not be evaluated at all.
    pub error: Option<String>,
    #[serde(skip)]
    pub seconds: f64,
}

impl CriterionResult {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2}. {} ({}/{} checks, {:.1} s)",
            self.id,
            self.name,
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.seconds
        )?;
        if let Some(e) = &self.error {
            write!(f, ": error: {e}")?;
        }
        for c in self.failed_checks() {
            write!(f, "\n        failed: {}: {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub options: SuiteOptions,
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<usize> {
        self.criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect()
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, label: impl Into<String>, got: T, expected: T) {
        let passed = got == expected;
        let detail = if passed {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {expected:?}")
        };
        self.check(label, passed, detail);
    }

    fn within(&mut self, label: &str, t: Instant, limit: f64) {
        let s = t.elapsed().as_secs_f64();
        self.check(format!("{label} runtime"), s < limit, format!("{s:.1} s, limit {limit} s"));
    }
}

struct Env<'a> {
    data: &'a DataSet,
    opts: &'a SuiteOptions,
    ctx: VerifyContext,
    q5: QContext,
    records: Result<Vec<ManifoldRecord>, String>,
}

impl Env<'_> {
    fn records(&self) -> Result<&[ManifoldRecord], CliError> {
        self.records.as_deref().map_err(|e| CliError::Record { id: 0, msg: e.clone() })
    }
}

type Criterion = (usize, &'static str, fn(&Env, &mut Checks) -> Result<(), CliError>);

const CRITERIA: [Criterion; 12] = [
    (1, "P6 reconstruction and face census", c1_reconstruction),
    (2, "group constants and volumes", c2_constants),
    (3, "the symmetry Abar and its side permutation", c3_symmetry),
    (4, "actual vertex and line edge counts", c4_counts),
    (5, "digit codec", c5_codec),
    (6, "properness of the nine arrays and rejected mutations", c6_properness),
    (7, "development and restriction codes", c7_development),
    (8, "orientability", c8_orientability),
    (9, "algebraic certificates", c9_algebra),
    (10, "homology of the manifolds and their cusps", c10_homology),
    (11, "oracle suites", c11_oracles),
    (12, "search rediscovers manifold 1", c12_search),
];

pub fn criterion_names() -> Vec<(usize, &'static str)> {
    CRITERIA.iter().map(|(i, n, _)| (*i, *n)).collect()
}

/// Run the selected criteria (all when `only` is empty) against `data`.
/// Criteria run concurrently; results come back in criterion order.
pub fn run_suite(data: &DataSet, opts: &SuiteOptions, only: &[usize]) -> Result<SuiteReport, CliError> {
    let env = Env {
        data,
        opts,
        ctx: VerifyContext::new()?,
        q5: QContext::new(5)?,
        records: load_records(data).map_err(|e| e.to_string()),
    };
    let criteria = CRITERIA
        .par_iter()
        .filter(|(id, _, _)| only.is_empty() || only.contains(id))
        .map(|&(id, name, f)| {
            let t = Instant::now();
            let mut checks = Checks::default();
            let res = f(&env, &mut checks);
            let error = res.err().map(|e| e.to_string());
            CriterionResult {
                id,
                name,
                passed: error.is_none() && !checks.0.is_empty() && checks.0.iter().all(|c| c.passed),
                checks: checks.0,
                error,
                seconds: t.elapsed().as_secs_f64(),
            }
        })
        .collect();
    Ok(SuiteReport {
        options: opts.clone(),
        criteria,
    })
}

fn c1_reconstruction(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let t = Instant::now();
    let p = build_polytope(6)?;
    let l = FaceLattice::enumerate(&p)?;
    let set = |rows: Vec<Vec<i64>>| rows.into_iter().collect::<BTreeSet<_>>();
    let normals = set(p.normals.iter().filter_map(|u| u.to_i64s()).collect());
    let vertices = set(p.vertices().filter_map(|v| v.to_i64s()).collect());
    c.check(
        "normals equal the side table",
        normals == set(env.data.int_rows("p6_normals.txt")?),
        format!("{} normals", normals.len()),
    );
    c.check(
        "vertices equal the vertex table",
        vertices == set(env.data.int_rows("p6_vertices.txt")?),
        format!("{} vertices", vertices.len()),
    );
    let kinds = l.edge_kind_counts();
    let counts = l.counts();
    c.eq("actual vertices", p.num_actual(), 72);
    c.eq("ideal vertices", p.num_vertices() - p.num_actual(), 27);
    c.eq("ray edges", kinds.get(&EdgeKind::Ray).copied().unwrap_or(0), 432);
    c.eq("line edges", kinds.get(&EdgeKind::Line).copied().unwrap_or(0), 216);
    c.eq("2-faces, 3-faces, ridges, sides", counts[2..6].to_vec(), vec![1080, 720, 216, 27]);
    c.within("reconstruction", t, 30.0);
    Ok(())
}

fn c2_constants(_env: &Env, c: &mut Checks) -> Result<(), CliError> {
    for (n, vol, chi) in [(2, "pi/2", "-1/4"), (4, "pi^2/12", "1/16"), (6, "pi^3/15", "-1/8"), (8, "136*pi^4/105", "17/4")] {
        let k = constants(n)?;
        c.check(
            format!("vol(P{n})"),
            matches!(k.vol_pn, Volume::Exact(_)) && k.vol_pn.to_string() == vol,
            k.vol_pn.to_string(),
        );
        c.eq(format!("chi(Gamma2^{n})"), k.euler_char_gamma2.to_string(), chi.to_string());
    }
    c.eq("[Gamma6 : Gamma2^6]", constants(6)?.index_gamma2.to_string(), "51840".to_string());
    for (n, reference) in [(3, CATALAN), (5, SEVEN_ZETA3_OVER_8), (7, EIGHT_BETA4)] {
        let v = constants(n)?.vol_pn.value();
        c.check(
            format!("vol(P{n}) numeric"),
            (v - reference).abs() < VOLUME_TOLERANCE,
            format!("{v:.15} vs {reference:.15}"),
        );
    }
    Ok(())
}

fn c3_symmetry(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let abar = matrix_abar();
    let sigma = sigma_permutation(&abar, &env.ctx.p6.polytope.normals)?;
    c.eq("cycles of sigma", format_cycles(&cycle_decomposition(&sigma)), SIGMA_CYCLES.to_string());
    c.check("Abar^8 = I", abar.pow(8).is_identity(), "");
    c.eq("order of Abar", abar.order(64)?, 8);
    c.eq("det A", matrix_a().det().to_string(), "1".to_string());
    Ok(())
}

fn c4_counts(_env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let t = Instant::now();
    let expected = [(1, 1), (2, 3), (5, 10), (16, 40), (72, 216), (576, 2016)];
    for (n, &want) in (2..=7).zip(&expected) {
        let p = build_polytope(n)?;
        let l = FaceLattice::enumerate(&p)?;
        let lines = l.edge_kind_counts().get(&EdgeKind::Line).copied().unwrap_or(0);
        c.eq(format!("(a_{n}, l_{n})"), (p.num_actual(), lines), want);
    }
    c.within("counts", t, 300.0);
    Ok(())
}

fn c5_codec(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let rows = env.data.lines("table8.txt")?;
    c.eq("table rows", rows.len(), 64);
    let mut bad = Vec::new();
    let mut seen = BTreeSet::new();
    for (_, line) in rows {
        let w: Vec<&str> = line.split_whitespace().collect();
        let ch = w.first().and_then(|s| s.chars().next()).unwrap_or(' ');
        let diag: Vec<i64> = w[1..].iter().filter_map(|x| x.parse().ok()).collect();
        let ok = match decode_digit(ch, 6) {
            Ok(k) => {
                seen.insert(k.value);
                let m = k.matrix().to_i64_rows().unwrap_or_default();
                let got: Vec<i64> = (0..m.len()).map(|i| m[i][i]).collect();
                got == diag && encode_digit(&k) == ch
            }
            Err(_) => false,
        };
        if !ok {
            bad.push(ch);
        }
    }
    c.check("all 64 digit mappings", bad.is_empty(), format!("mismatched digits {bad:?}"));
    c.eq("distinct values", seen.len(), 64);
    Ok(())
}

fn c6_properness(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let p6 = &env.ctx.p6;
    let records = env.records()?;
    let results: Vec<_> = records
        .par_iter()
        .map(|r| -> Result<_, CliError> {
            let t = Instant::now();
            let a = r.array(p6)?;
            let cert = face_cycles_proper(&a.gluing(p6), &p6.lattice)?;
            let lengths_ok = cert.cycles.iter().all(|s| s.lengths == vec![(s.expected_length, s.orbits)]);
            Ok((r.id, cert.proper && lengths_ok, t.elapsed().as_secs_f64()))
        })
        .collect::<Result<_, _>>()?;
    for (id, ok, s) in results {
        c.check(format!("manifold {id} proper"), ok, "");
        c.check(format!("manifold {id} runtime"), s < 120.0, format!("{s:.1} s"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(env.opts.seed);
    let mut mutations = Vec::new();
    while mutations.len() < env.opts.mutations {
        let r = &records[rng.gen_range(0..records.len())];
        let (i, j) = (rng.gen_range(0..8), rng.gen_range(0..27));
        let v = (rng.gen_range(0..8u8), rng.gen_range(0..8u8));
        if let Some(m) = r.array(p6)?.with_mutation(p6, i, j, v) {
            mutations.push((r.id, i, j, v, m));
        }
    }
    let rejected: Vec<_> = mutations
        .par_iter()
        .map(|(id, i, j, v, m)| -> Result<_, CliError> {
            let involutive = m.check_involution(p6).is_ok();
            let proper = face_cycles_proper(&m.gluing(p6), &p6.lattice)?.proper;
            Ok((format!("manifold {id} entry ({},{}) -> {:?}", i + 1, j + 1, v), involutive && !proper))
        })
        .collect::<Result<_, _>>()?;
    let kept: Vec<&String> = rejected.iter().filter(|(_, ok)| !ok).map(|(s, _)| s).collect();
    c.check(
        format!("{} random mutations rejected", rejected.len()),
        kept.is_empty(),
        format!("accepted: {kept:?}"),
    );
    Ok(())
}

fn c7_development(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let p6 = &env.ctx.p6;
    let records = env.records()?;
    for r in records {
        let dev = develop_to_q(&r.array(p6)?, p6)?;
        c.eq(format!("manifold {} code", r.id), dev.code.to_string(), r.q6_code.clone());
    }
    let restricted = |id: usize| -> Result<String, CliError> {
        let r = records.iter().find(|r| r.id == id).ok_or(CliError::Record {
            id,
            msg: "missing".to_string(),
        })?;
        Ok(restrict_code(&r.code()?, &env.ctx.q6, &env.q5)?.to_string())
    };
    c.eq("restriction of manifold 1", restricted(1)?, "EKB98LLG6R2".to_string());
    let rest: BTreeSet<String> = (3..=9).map(restricted).collect::<Result<_, _>>()?;
    c.eq("restrictions of manifolds 3-9", rest.into_iter().collect::<Vec<_>>(), vec!["2B7JB47JG81".to_string()]);
    Ok(())
}

fn c8_orientability(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    for r in env.records()? {
        c.eq(format!("manifold {}", r.id), orientability_of_code(&r.code()?), r.orientable);
    }
    Ok(())
}

fn u8_table(data: &DataSet, name: &str) -> Result<Vec<Vec<u8>>, CliError> {
    Ok(data
        .int_rows(name)?
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as u8).collect())
        .collect())
}

fn c9_algebra(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let p6 = &env.ctx.p6;
    let sigma = &p6.sigma_powers[1];
    let records = env.records()?;
    let code1 = records.iter().find(|r| r.id == 1).ok_or(CliError::Record { id: 1, msg: "missing".into() })?.code()?;
    let cm = build_code_matrix(&code1)?;
    c.check("matrix C", cm.rows() == u8_table(env.data, "table10.txt")?, "");
    let s = sigma_star_on_v(&cm, sigma)?;
    c.check("sigma-star matrix", s.to_u8_rows() == u8_table(env.data, "table9.txt")?, "");
    let orbit = orbit_certify(&cm, &s, sigma)?;
    c.check("I + sigma-star^4", orbit.i_plus_sigma4 == u8_table(env.data, "table12.txt")?, "");
    c.eq("orbit system for manifold 1", orbit.verdict, OrbitVerdict::Certified);
    let sets: Vec<Vec<usize>> = env
        .data
        .int_rows("table11.txt")?
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as usize).collect())
        .collect();
    c.eq("column sets listed", sets.len(), 36);
    let dependent: Vec<&Vec<usize>> = sets
        .iter()
        .filter(|s| {
            let cols: Vec<usize> = s.iter().map(|x| x - 1).collect();
            cm.matrix.column_subset_rank(&cols) != cols.len()
        })
        .collect();
    c.check("listed column sets independent", dependent.is_empty(), format!("dependent: {dependent:?}"));
    let reduced = torsion_free_h(&cm, p6, TorsionMode::Reduced);
    let ours: BTreeSet<Vec<usize>> = reduced.column_sets.into_iter().map(|(_, s)| s).collect();
    c.check(
        "orbit representatives equal the listed sets",
        ours == sets.iter().cloned().collect(),
        format!("{} representatives", ours.len()),
    );
    let mut certified = Vec::new();
    for r in records {
        let cm = build_code_matrix(&r.code()?)?;
        if let Ok(s) = sigma_star_on_v(&cm, sigma) {
            if orbit_certify(&cm, &s, sigma)?.verdict == OrbitVerdict::Certified {
                certified.push(r.id);
            }
        }
    }
    c.eq("manifolds certified by the orbit system", certified, vec![1, 3, 4, 5, 6]);
    Ok(())
}

fn c10_homology(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let p6 = &env.ctx.p6;
    let trunc = TruncatedPolytope::build(p6)?;
    let results: Vec<_> = env
        .records()?
        .par_iter()
        .map(|r| -> Result<_, CliError> {
            let t = Instant::now();
            let m = build_quotient_complex(&r.array(p6)?, p6, &trunc)?;
            let h = m.homology();
            let cusps = cusp_sections(&m);
            let mut cusp_codes: Vec<String> = cusps.iter().map(|g| g.table7_encoding().unwrap_or_default()).collect();
            cusp_codes.sort();
            Ok((r, h, cusps, cusp_codes, t.elapsed().as_secs_f64()))
        })
        .collect::<Result<_, _>>()?;
    for (r, h, cusps, cusp_codes, s) in results {
        let id = r.id;
        c.eq(format!("manifold {id} H1..H5"), h.table4_encoding().unwrap_or_default(), r.homology.clone());
        c.eq(format!("manifold {id} H0"), h.groups[0].to_string(), "Z".to_string());
        c.eq(format!("manifold {id} Betti sum"), h.euler_characteristic(), -1);
        c.eq(format!("manifold {id} cusp count"), cusps.len(), r.cusps);
        c.check(
            format!("manifold {id} cusp Euler characteristics"),
            cusps.iter().all(|g| g.euler_characteristic() == 0),
            "",
        );
        c.eq(format!("manifold {id} cusp homology"), cusp_codes, r.cusp_homology.clone());
        c.check(format!("manifold {id} runtime"), s < 600.0, format!("{s:.1} s"));
    }
    Ok(())
}

fn c11_oracles(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let n = env.opts.oracle_cases;
    let snf = snf_oracle_suite(n, env.opts.seed ^ 0x51);
    c.check(
        format!("Smith form vs determinantal divisors, {n} cases"),
        snf.passed(),
        snf.first_failure.unwrap_or_default(),
    );
    let gf2 = gf2_oracle_suite(n, env.opts.seed ^ 0x32);
    c.check(
        format!("GF(2) solve vs enumeration, {n} cases"),
        gf2.passed(),
        gf2.first_failure.unwrap_or_default(),
    );
    Ok(())
}

fn c12_search(env: &Env, c: &mut Checks) -> Result<(), CliError> {
    let p6 = &env.ctx.p6;
    let r = env.records()?.iter().find(|r| r.id == 1).ok_or(CliError::Record { id: 1, msg: "missing".into() })?;
    let target = r.array(p6)?;
    let out = search_pairings_until(p6, &SearchConstraints::fix_row(&target, 0), env.opts.search_budget, &|p| {
        p == &target
    })?;
    let found = out.pairings.contains(&target);
    let detail = if found {
        format!("found after {} nodes", out.nodes)
    } else if out.budget_exhausted {
        format!("budget of {} nodes exhausted without discovery", env.opts.search_budget)
    } else {
        format!("search space exhausted after {} nodes without discovery", out.nodes)
    };
    c.check("manifold 1 array among the completions", found, detail);
    Ok(())
}
