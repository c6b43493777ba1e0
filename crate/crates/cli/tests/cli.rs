use std::process::Command;

use serde_json::Value;

fn hyp6(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyp6")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out) = hyp6(&a);
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn constants_in_dimensions_2_6_7() {
    let six = json(&["constants", "6"]);
    assert_eq!(six["index"], 51840);
    assert_eq!(six["vol_Pn"], "pi^3/15");
    assert_eq!(six["chi_gamma2"], "-1/8");
    let two = json(&["constants", "2"]);
    assert_eq!(two["vol_Pn"], "pi/2");
    assert_eq!(two["chi_gamma2"], "-1/4");
    let seven = json(&["constants", "7"]);
    assert!((seven["vol_Pn_numeric"].as_f64().unwrap() - 7.91155641393).abs() < 1e-10);
    assert_eq!(hyp6(&["constants", "9"]).0, 2);
}

#[test]
fn certify_exit_codes() {
    let one = json(&["certify", "1"]);
    assert_eq!(one["certificate"]["orientable"], true);
    assert_eq!(one["certificate"]["chi"]["chi_manifold"], "-1");
    assert_eq!(one["homology_encoding"], "0401 1810 4531 5000 4000");
    assert_eq!(one["diff"], Value::Array(vec![]));
    let three = json(&["certify", "3"]);
    assert_eq!(three["certificate"]["orientable"], false);
    assert_eq!(hyp6(&["certify", "10"]).0, 2);
    assert_eq!(hyp6(&["develop", "--id", "0"]).0, 2);
}

#[test]
fn json_output_is_deterministic() {
    let a = hyp6(&["verify", "--id", "2", "--json"]);
    let b = hyp6(&["verify", "--id", "2", "--json"]);
    assert_eq!(a, b);
    let r1 = hyp6(&["report", "--only", "2,3,5,8", "--json"]);
    let r2 = hyp6(&["report", "--only", "2,3,5,8", "--json"]);
    assert_eq!(r1.0, 0);
    assert_eq!(r1, r2);
    assert_eq!(hyp6(&["report", "--only", "13"]).0, 2);
}

#[test]
fn codes_and_arrays() {
    assert_eq!(json(&["develop", "--id", "1"])["code"], "MVStfMSJGgJgWDtD2fV84");
    assert_eq!(json(&["restrict", "MVStfMSJGgJgWDtD2fV84"])["restriction"], "EKB98LLG6R2");
    let d = json(&["decode", "EKB98LLG6R2", "--dim", "5"]);
    assert_eq!(d["sides"].as_array().unwrap().len(), 72);
    let (code, _) = hyp6(&["verify", "--code", "000000000000000000000"]);
    assert_eq!(code, 1);
    let b = json(&["build", "--dim", "5"]);
    assert_eq!(b["sides"], 16);
    assert_eq!(b["actual_vertices"], 16);
}

#[test]
fn user_array_file() {
    let dir = std::env::temp_dir().join(format!("hyp6-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m5.8p");
    std::fs::write(&path, hyp6_data::DataSet::embedded().unwrap().text("manifold5.8p").unwrap()).unwrap();
    let v = json(&["verify", "--array", path.to_str().unwrap()]);
    assert_eq!(v["proper"], true);
    std::fs::write(&path, "1^0 2^0\n").unwrap();
    assert_eq!(hyp6(&["verify", "--array", path.to_str().unwrap()]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
