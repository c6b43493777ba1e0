use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyp6_coxeter::{constants, Volume};
use hyp6_data::DataSet;
use hyp6_homology::{build_quotient_complex, cusp_sections, TruncatedPolytope};
use hyp6_pairing::{
    decode_q_code, develop_to_q, orientability_of_code, parse_8p_pairing, restrict_code, search_pairings,
    search_pairings_until, EightPPairing, PairingCode, QContext, SearchConstraints,
};
use hyp6_polytope::{build_polytope, EdgeKind, FaceLattice};
use hyp6_verify::{certify, face_cycles_proper, VerifyContext};
use hyp6_cli::records::record;
use hyp6_cli::suite::{criterion_names, run_suite, SuiteOptions};
use hyp6_cli::CliError;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hyp6", version, about = "Exact reconstruction and verification of the 8P^6 hyperbolic 6-manifolds")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Manifold {
    /// One of the nine embedded manifolds.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9), conflicts_with = "array")]
    id: Option<u8>,
    /// An 8P^6 array file (8 lines of 27 k^p entries).
    #[arg(long)]
    array: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct P^n and print its face census.
    Build {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(2..=7))]
        dim: u8,
        /// Include the whole face lattice.
        #[arg(long)]
        faces: bool,
    },
    /// Expand a Q^6 or Q^5 side-pairing code.
    Decode {
        code: String,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(5..=6))]
        dim: u8,
    },
    /// Develop an 8P^6 array into its Q^6 code.
    Develop(Manifold),
    /// Restrict a Q^6 code to the Q^5 code of the side x1 = 0.
    Restrict { code: String },
    /// Check face cycles of an array or code.
    Verify {
        #[command(flatten)]
        manifold: Manifold,
        /// A Q^6 code to check instead.
        #[arg(long, conflicts_with_all = ["id", "array"])]
        code: Option<String>,
    },
    /// Full certificate for one of the nine manifolds, compared with its record.
    Certify {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=9))]
        id: u8,
    },
    /// Integral homology of a manifold and of its cusp cross-sections.
    Homology {
        #[command(flatten)]
        manifold: Manifold,
        /// Write the cell complex as JSON to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Volume, index and Euler characteristic constants in dimension n.
    Constants {
        #[arg(value_parser = clap::value_parser!(u8).range(2..=8))]
        n: u8,
    },
    /// Backtracking search for proper 8P^6 arrays extending one row of a known manifold.
    Search {
        /// Manifold whose row is fixed.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=9))]
        from: u8,
        /// Copy (1..8) whose row is fixed.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=8))]
        row: u8,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Stop once the source manifold's array is found.
        #[arg(long)]
        until_found: bool,
    },
    /// Run the acceptance suite and print a pass/fail matrix.
    Report {
        /// Restrict to these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
}

enum Outcome {
    Ok(Value, String),
    /// Computed, but some expectation failed.
    Failed(Value, String),
}

fn load_array(m: &Manifold, data: &DataSet, ctx: &VerifyContext) -> Result<(String, EightPPairing), CliError> {
    match (&m.id, &m.array) {
        (Some(id), _) => Ok((format!("manifold {id}"), record(data, usize::from(*id))?.array(&ctx.p6)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Record {
                id: 0,
                msg: format!("{}: {e}", path.display()),
            })?;
            Ok((path.display().to_string(), parse_8p_pairing(&text, &ctx.p6)?))
        }
        (None, None) => Ok(("manifold 1".to_string(), record(data, 1)?.array(&ctx.p6)?)),
    }
}

/// Twelve significant digits.
fn numeric(v: f64) -> Value {
    json!(format!("{v:.11e}").parse::<f64>().unwrap_or(v))
}

fn volume_json(v: &Volume) -> Value {
    match v {
        Volume::Exact(p) => json!(p.to_string()),
        Volume::Numeric { expression, .. } => json!(expression),
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let data = DataSet::embedded()?;
    match &cli.command {
        Command::Build { dim, faces } => {
            let p = build_polytope(usize::from(*dim))?;
            let l = FaceLattice::enumerate(&p)?;
            let kinds = l.edge_kind_counts();
            let kind = |k| kinds.get(&k).copied().unwrap_or(0);
            let mut v = json!({
                "dim": dim,
                "sides": p.num_sides(),
                "actual_vertices": p.num_actual(),
                "ideal_vertices": p.num_vertices() - p.num_actual(),
                "face_counts": l.counts(),
                "edges": {"ray": kind(EdgeKind::Ray), "line": kind(EdgeKind::Line), "segment": kind(EdgeKind::Segment)},
                "normals": p.normals.iter().map(|u| u.coords().iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            if *faces {
                v["faces"] = l
                    .faces()
                    .iter()
                    .map(|f| json!({"dim": f.dim, "sides": f.sides.iter().map(|s| s + 1).collect::<Vec<_>>(), "vertices": f.vertices}))
                    .collect();
            }
            let text = format!(
                "P{dim}: {} sides, {} actual and {} ideal vertices\nface counts by dimension: {:?}\nedges: {} ray, {} line, {} segment",
                p.num_sides(),
                p.num_actual(),
                p.num_vertices() - p.num_actual(),
                l.counts(),
                kind(EdgeKind::Ray),
                kind(EdgeKind::Line),
                kind(EdgeKind::Segment)
            );
            Ok(Outcome::Ok(v, text))
        }
        Command::Decode { code, dim } => {
            let ctx = QContext::new(usize::from(*dim))?;
            let c = PairingCode::parse(code, usize::from(*dim))?;
            let q = decode_q_code(&c, &ctx)?;
            q.check(&ctx)?;
            let sides: Vec<Value> = (0..q.partner.len())
                .map(|i| json!({"side": i + 1, "partner": q.partner[i] + 1, "k": q.k[i].signs()}))
                .collect();
            let mut text = format!("{} sides, orientable: {}\n", sides.len(), orientability_of_code(&c));
            for i in 0..q.partner.len() {
                text.push_str(&format!("{:>3} -> {:>3}  k = {:?}\n", i + 1, q.partner[i] + 1, q.k[i].signs()));
            }
            Ok(Outcome::Ok(
                json!({"code": c.to_string(), "orientable": orientability_of_code(&c), "sides": sides}),
                text.trim_end().to_string(),
            ))
        }
        Command::Develop(m) => {
            let ctx = VerifyContext::new()?;
            let (name, a) = load_array(m, data, &ctx)?;
            let dev = develop_to_q(&a, &ctx.p6)?;
            let code = dev.code.to_string();
            let copies: Vec<usize> = dev.placements.iter().map(|p| p.copy + 1).collect();
            Ok(Outcome::Ok(
                json!({"source": name, "code": code, "placement_copies": copies}),
                format!("{name}: {code}"),
            ))
        }
        Command::Restrict { code } => {
            let c = PairingCode::parse(code, 6)?;
            let r = restrict_code(&c, &QContext::new(6)?, &QContext::new(5)?)?.to_string();
            Ok(Outcome::Ok(json!({"code": code, "restriction": r}), r))
        }
        Command::Verify { manifold, code } => {
            let ctx = VerifyContext::new()?;
            if let Some(code) = code {
                let c = PairingCode::parse(code, 6)?;
                let q = decode_q_code(&c, &ctx.q6)?;
                let cert = face_cycles_proper(&q.gluing(&ctx.q6), &ctx.q6.lattice)?;
                let text = format!("{code}: proper = {}", cert.proper);
                let v = serde_json::to_value(&cert).expect("serializable");
                return Ok(if cert.proper { Outcome::Ok(v, text) } else { Outcome::Failed(v, text) });
            }
            let (name, a) = load_array(manifold, data, &ctx)?;
            let cert = face_cycles_proper(&a.gluing(&ctx.p6), &ctx.p6.lattice)?;
            let mut text = format!("{name}: proper = {}", cert.proper);
            for s in &cert.cycles {
                text.push_str(&format!("\n  dim {}: {} cycles of length {}", s.dim, s.orbits, s.expected_length));
            }
            if let Some(w) = &cert.witness {
                text.push_str(&format!("\n  witness: {} at sides {:?} of copy {}", w.kind, w.sides, w.copy + 1));
            }
            let v = serde_json::to_value(&cert).expect("serializable");
            Ok(if cert.proper { Outcome::Ok(v, text) } else { Outcome::Failed(v, text) })
        }
        Command::Certify { id } => {
            let ctx = VerifyContext::new()?;
            let r = record(data, usize::from(*id))?;
            let array = r.array(&ctx.p6)?;
            let cert = certify(&r.code()?, Some(&array), &ctx)?;
            let trunc = TruncatedPolytope::build(&ctx.p6)?;
            let complex = build_quotient_complex(&array, &ctx.p6, &trunc)?;
            let h = complex.homology();
            let cusps = cusp_sections(&complex);
            let mut cusp_codes: Vec<String> = cusps.iter().map(|g| g.table7_encoding().unwrap_or_default()).collect();
            cusp_codes.sort();
            let mut diff = Vec::new();
            let mut compare = |field: &str, expected: Value, got: Value| {
                if expected != got {
                    diff.push(json!({"field": field, "expected": expected, "got": got}));
                }
            };
            compare("proper", json!(true), json!(cert.proper()));
            compare("h_torsion_free", json!(true), json!(cert.h.h_torsion_free));
            compare("index", json!(64), json!(cert.cosets.index));
            compare("chi", json!("-1"), json!(cert.chi.chi_manifold));
            compare("orientable", json!(r.orientable), json!(cert.orientable));
            compare("homology", json!(r.homology), json!(h.table4_encoding()));
            compare("cusps", json!(r.cusps), json!(cusps.len()));
            compare("cusp_homology", json!(r.cusp_homology), json!(cusp_codes));
            let v = json!({
                "id": id,
                "certificate": cert,
                "homology": h,
                "homology_encoding": h.table4_encoding(),
                "cusp_homology": cusps,
                "diff": diff,
            });
            let orbit = cert
                .orbit_system
                .as_ref()
                .map_or("not applicable".to_string(), |l| format!("{:?}", l.verdict));
            let text = format!(
                "manifold {id}: code {}\n  proper: {}\n  H torsion-free: {}, index {}\n  orbit system: {orbit}\n  orientable: {}\n  chi: {}\n  homology: {}\n  cusps: {}\n  {}",
                cert.code,
                cert.proper(),
                cert.h.h_torsion_free,
                cert.cosets.index,
                cert.orientable,
                cert.chi.chi_manifold,
                h.table4_encoding().unwrap_or_default(),
                cusp_codes.join(", "),
                if diff.is_empty() {
                    "all expected properties reproduced".to_string()
                } else {
                    format!("MISMATCH: {}", serde_json::to_string(&diff).expect("serializable"))
                }
            );
            Ok(if diff.is_empty() { Outcome::Ok(v, text) } else { Outcome::Failed(v, text) })
        }
        Command::Homology { manifold, export } => {
            let ctx = VerifyContext::new()?;
            let (name, a) = load_array(manifold, data, &ctx)?;
            let trunc = TruncatedPolytope::build(&ctx.p6)?;
            let complex = build_quotient_complex(&a, &ctx.p6, &trunc)?;
            if let Some(path) = export {
                let text = serde_json::to_string(&complex.export()).expect("serializable");
                std::fs::write(path, text).map_err(|e| CliError::Record {
                    id: 0,
                    msg: format!("{}: {e}", path.display()),
                })?;
            }
            let h = complex.homology();
            let cusps = cusp_sections(&complex);
            let mut text = format!("{name}: cells {:?}\n  {h}", complex.counts());
            for (i, c) in cusps.iter().enumerate() {
                text.push_str(&format!("\n  cusp {}: {c}", i + 1));
            }
            Ok(Outcome::Ok(
                json!({
                    "source": name,
                    "cell_counts": complex.counts(),
                    "homology": h,
                    "encoding": h.table4_encoding(),
                    "cusps": cusps,
                    "cusp_encodings": cusps.iter().map(|c| c.table7_encoding()).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Constants { n } => {
            let c = constants(usize::from(*n))?;
            let v = json!({
                "n": n,
                "index": c.index_gamma2.to_string().parse::<u64>().ok(),
                "sigma_order": c.sigma_order.to_string(),
                "vol_Pn": volume_json(&c.vol_pn),
                "vol_Pn_numeric": numeric(c.vol_pn.value()),
                "covolume": volume_json(&c.covolume),
                "covolume_numeric": numeric(c.covolume.value()),
                "kappa": c.kappa.as_ref().map(|k| k.to_string()),
                "chi_gamma": c.euler_char_gamma.to_string(),
                "chi_gamma2": c.euler_char_gamma2.to_string(),
            });
            let text = format!(
                "n = {n}\n  [Gamma : Gamma2] = {}\n  vol(P{n}) = {} = {:.12}\n  chi(Gamma) = {}\n  chi(Gamma2) = {}",
                c.index_gamma2,
                volume_json(&c.vol_pn).as_str().unwrap_or_default(),
                c.vol_pn.value(),
                c.euler_char_gamma,
                c.euler_char_gamma2
            );
            Ok(Outcome::Ok(v, text))
        }
        Command::Search {
            from,
            row,
            budget,
            until_found,
        } => {
            let ctx = VerifyContext::new()?;
            let target = record(data, usize::from(*from))?.array(&ctx.p6)?;
            let constraints = SearchConstraints::fix_row(&target, usize::from(*row) - 1);
            let out = if *until_found {
                search_pairings_until(&ctx.p6, &constraints, *budget, &|p| p == &target)?
            } else {
                search_pairings(&ctx.p6, &constraints, *budget)?
            };
            let found = out.pairings.contains(&target);
            let v = json!({
                "nodes": out.nodes,
                "budget_exhausted": out.budget_exhausted,
                "completions": out.pairings.iter().map(|p| p.to_text()).collect::<Vec<_>>(),
                "source_found": found,
            });
            let text = format!(
                "{} proper completions after {} nodes{}; manifold {from} {}",
                out.pairings.len(),
                out.nodes,
                if out.budget_exhausted { " (budget exhausted)" } else { "" },
                if found { "found" } else { "not found" }
            );
            Ok(if found { Outcome::Ok(v, text) } else { Outcome::Failed(v, text) })
        }
        Command::Report { only, budget } => {
            let opts = SuiteOptions {
                search_budget: *budget,
                ..SuiteOptions::default()
            };
            let report = run_suite(data, &opts, only)?;
            let text = report.criteria.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
            let v = serde_json::to_value(&report).expect("serializable");
            Ok(if report.all_passed() { Outcome::Ok(v, text) } else { Outcome::Failed(v, text) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("HYP6_THREADS").ok().and_then(|s| s.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    if let Command::Report { only, .. } = &cli.command {
        let known: Vec<usize> = criterion_names().into_iter().map(|(i, _)| i).collect();
        if let Some(bad) = only.iter().find(|i| !known.contains(i)) {
            eprintln!("error: no criterion {bad}");
            return ExitCode::from(2);
        }
    }
    let (value, text, ok) = match run(&cli) {
        Ok(Outcome::Ok(v, t)) => (v, t, true),
        Ok(Outcome::Failed(v, t)) => (v, t, false),
        Err(e) => {
            if cli.json {
                println!("{}", json!({"error": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            return ExitCode::FAILURE;
        }
    };
    let out = if cli.json {
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        text
    };
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{out}");
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
