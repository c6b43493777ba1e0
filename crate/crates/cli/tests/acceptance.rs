//! One pass/fail line per acceptance criterion, then a fault-injection run
//! with a corrupted code matrix table.

use std::process::ExitCode;

use hyp6_cli::suite::{run_suite, SuiteOptions};
use hyp6_data::DataSet;

fn corrupt_table10(data: &DataSet) -> DataSet {
    let mut files = data.to_map();
    let text = files.get_mut("table10.txt").expect("table10 present");
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let row = lines
        .iter()
        .position(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .expect("a data row");
    let flipped: Vec<&str> = lines[row]
        .split_whitespace()
        .enumerate()
        .map(|(i, x)| if i == 6 { if x == "0" { "1" } else { "0" } } else { x })
        .collect();
    lines[row] = flipped.join(" ");
    *text = lines.join("\n") + "\n";
    DataSet::unchecked(files)
}

fn main() -> ExitCode {
    let data = DataSet::embedded().expect("embedded tables verify");
    let opts = SuiteOptions::default();
    let report = run_suite(data, &opts, &[]).expect("suite runs");
    println!("acceptance criteria");
    for c in &report.criteria {
        println!("{c}");
    }
    let mut ok = report.all_passed() && report.criteria.len() == 12;

    let bad = corrupt_table10(data);
    let checksum_rejected = bad.verify().is_err();
    println!(
        "[{}] fault injection: corrupted table10.txt fails its checksum",
        if checksum_rejected { "PASS" } else { "FAIL" }
    );
    let faulty = run_suite(&bad, &opts, &[]).expect("suite runs on injected data");
    let failed = faulty.failed();
    let isolated = failed == vec![9]
        && faulty.criteria[8]
            .failed_checks()
            .map(|c| c.label.as_str())
            .eq(["matrix C"]);
    println!(
        "[{}] fault injection: only the matrix C check fails (failed criteria {failed:?})",
        if isolated { "PASS" } else { "FAIL" }
    );
    ok &= checksum_rejected && isolated;
    if ok {
        println!("all acceptance checks passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance FAILED");
        ExitCode::FAILURE
    }
}
