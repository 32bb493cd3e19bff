//! End-to-end tests against the built binary: exit codes, the JSON and CSV
//! schemas, and agreement between printed polynomials and the library.

use phisurf::poly::parse::parse_tri;
use phisurf::{phi, FieldCtx};
use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phisurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is one JSON object")
}

#[test]
fn apn_check_reports_gold_cube() {
    let v = stdout_json(&run(&["apn", "check", "--m", "4", "--f", "x^3"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["m"], 4);
    assert_eq!(v["delta"], 2);
    assert_eq!(v["is_apn"], true);
    assert_eq!(v["spectrum"], serde_json::json!([[0, 120], [2, 120]]));
}

#[test]
fn budget_errors_use_exit_code_2() {
    let out = run(&["apn", "check", "--m", "15", "--f", "x^3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "budget_exceeded");
    assert!(out.stdout.is_empty());
}

#[test]
fn domain_errors_use_exit_code_1() {
    let out = run(&["apn", "check", "--m", "4", "--f", "x^^3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "parse");
}

#[test]
fn usage_errors_are_structured() {
    let out = run(&["apn", "check", "--m", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "usage");
}

#[test]
fn apn_scan_follows_the_parity_pattern() {
    let v = stdout_json(&run(&["apn", "scan", "--f", "x^13", "--m-range", "2..8"]));
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 7);
    for e in entries {
        let m = e["m"].as_u64().unwrap();
        assert_eq!(e["is_apn"].as_bool().unwrap(), m % 2 == 1, "m = {m}");
    }
}

#[test]
fn apn_scan_csv_has_one_row_per_field() {
    let out = run(&[
        "apn", "scan", "--f", "x^13", "--m-range", "2..6", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,delta,is_apn,error");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[2], "3,2,true,");
}

#[test]
fn phi_show_prints_the_grammar() {
    let out = run(&["phi", "show", "--e", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0x1");

    let out = run(&["phi", "show", "--e", "7"]);
    let printed = String::from_utf8(out.stdout).unwrap();
    let ctx = FieldCtx::new(1).unwrap();
    assert_eq!(
        parse_tri(ctx, printed.trim()).unwrap(),
        phi::phi_power(ctx, 7).unwrap()
    );
}

#[test]
fn phi_of_matches_the_library() {
    let out = run(&["phi", "of", "--m", "3", "--f", "x^12+x^3"]);
    let printed = String::from_utf8(out.stdout).unwrap();
    let ctx = FieldCtx::new(3).unwrap();
    let f = phisurf::poly::parse::parse_vbf(ctx, "x^12+x^3").unwrap();
    assert_eq!(
        parse_tri(ctx, printed.trim()).unwrap(),
        phi::phi_of(&f)
    );
}

#[test]
fn phi_divides_auto_shorthand() {
    let v = stdout_json(&run(&[
        "phi", "divides", "--m", "2", "--f", "x^12", "--p", "auto:A^3",
    ]));
    assert_eq!(v["divisible"], true);
    assert_eq!(v["quotient"], "0x1");
    assert_eq!(v["witness"], Value::Null);

    // the same surface under its other name
    let v = stdout_json(&run(&[
        "phi", "divides", "--m", "2", "--f", "x^12", "--p", "auto:phi_12",
    ]));
    assert_eq!(v["quotient"], "0x1");
}

#[test]
fn phi_divides_literal_non_divisor() {
    let v = stdout_json(&run(&[
        "phi", "divides", "--m", "2", "--f", "x^12", "--p", "x",
    ]));
    assert_eq!(v["divisible"], false);
    assert_eq!(v["quotient"], Value::Null);
    assert!(v["witness"].is_string());
}

#[test]
fn rodier_classify_table_rows() {
    let v = stdout_json(&run(&["rodier", "classify", "--e", "13"]));
    assert_eq!(v["kind"], "kasami");
    assert_eq!(v["witness"], 2);
    let v = stdout_json(&run(&["rodier", "classify", "--e", "205"]));
    assert_eq!(v["kind"], "cong-5-mod-8-conditional");
}

#[test]
fn rodier_scan_exhaustive_finds_the_zero_candidate() {
    let v = stdout_json(&run(&["rodier", "scan", "--m", "2", "--f", "x^12"]));
    assert_eq!(v["mode"], "exhaustive");
    assert_eq!(v["candidates_tested"], 6);
    let hits = v["hits"].as_array().unwrap();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["c1"], "0x0");
    assert_eq!(hits[0]["factor_divides"], true);
    assert_eq!(hits[0]["product_divides"], true);
}

#[test]
fn rodier_scan_needs_a_sample_size_on_large_fields() {
    let out = run(&["rodier", "scan", "--m", "5", "--f", "x^12"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "budget_exceeded");
}

#[test]
fn sampled_scans_are_seed_deterministic() {
    let args = [
        "rodier", "scan", "--m", "3", "--f", "x^12", "--sample", "5", "--seed", "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["mode"], "sampled");
}

#[test]
fn ccz_decompose_splits_affine_terms() {
    let v = stdout_json(&run(&[
        "ccz", "decompose", "--m", "5", "--f", "x^20+x^4", "--c1", "0x0",
    ]));
    assert_eq!(v["e"], 5);
    assert_eq!(v["s"], "0");
    assert_eq!(v["residual"], "x");
    assert_eq!(v["g"], "x^5 + x");
}

#[test]
fn ccz_decompose_rejects_bad_degree() {
    let out = run(&["ccz", "decompose", "--m", "5", "--f", "x^10", "--c1", "0x0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "precondition");
}

#[test]
fn curve_count_covers_the_range() {
    let v = stdout_json(&run(&["curve", "count", "--e", "7", "--k-range", "4..6"]));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r["in_band"] == true));
    assert_eq!(reports[0]["k"], 4);
}

#[test]
fn curve_count_budget_propagates() {
    let out = run(&["curve", "count", "--e", "7", "--k-range", "12..14"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn curve_verdict_is_evidence_for() {
    let v = stdout_json(&run(&["curve", "verdict", "--e", "7", "--k-range", "4..10"]));
    assert_eq!(v["verdict"], "evidence-for");
    assert_eq!(v["t"], Value::Null);
    assert_eq!(v["reports"].as_array().unwrap().len(), 7);
}

#[test]
fn surface_count_splitting_cube_over_gf4() {
    let v = stdout_json(&run(&["surface", "count", "--e", "12", "--k", "2"]));
    assert_eq!(v["report"]["count"], 40);
}

#[test]
fn surface_count_takes_literal_polynomials() {
    let v = stdout_json(&run(&["surface", "count", "--p", "x+y+z", "--k", "3"]));
    assert_eq!(v["report"]["count"], 64);
    let out = run(&["surface", "count", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn field_info_reports_the_tower() {
    let v = stdout_json(&run(&["field", "info", "--m", "5"]));
    assert_eq!(v["field"]["modulus"], "0x25");
    assert_eq!(v["field"]["order"], 32);
    assert_eq!(v["extension"]["order"], 32768);
    let checks = &v["checks"];
    assert_eq!(checks["frobenius_cubed_identity"], true);
    assert_eq!(checks["trace_matches_orbit_sum"], true);
    assert_eq!(checks["norm_multiplicative"], true);
    assert_eq!(checks["trace_kernel_dimension"], 10);
}

#[test]
fn modulus_override_is_validated() {
    let v = stdout_json(&run(&["field", "info", "--m", "4", "--modulus", "0x19"]));
    assert_eq!(v["field"]["modulus"], "0x19");
    // x^4 + 1 = (x + 1)^4 is rejected
    let out = run(&["field", "info", "--m", "4", "--modulus", "0x11"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "bad_modulus");
}

#[test]
fn verify_identities_all_pass() {
    let out = run(&["verify", "identities"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert_eq!(text.lines().filter(|l| l.starts_with("pass")).count(), 10);
    assert!(text.trim_end().ends_with("0 failures"));
}

#[test]
fn scan_output_is_deterministic() {
    let args = ["apn", "scan", "--f", "x^3", "--m-range", "2..6"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn threads_flag_is_accepted() {
    let v = stdout_json(&run(&[
        "--threads", "2", "apn", "check", "--m", "4", "--f", "x^3",
    ]));
    assert_eq!(v["delta"], 2);
}
