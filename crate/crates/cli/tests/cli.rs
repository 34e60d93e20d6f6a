use std::process::Command;

use serde_json::Value;
use superbott_cli::{canonical, run, EXIT_MALFORMED, EXIT_MISMATCH, EXIT_OK, EXIT_PRECONDITION};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("superbott").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn round_trips(text: &str) {
    let v: Value = serde_json::from_str(text).unwrap();
    assert_eq!(format!("{}\n", canonical(&v)), text);
}

#[test]
fn symmetric_square_on_gr_1_1_3_2_verifies() {
    let (code, out, _) = call(&["cohom", "--grass", "1,1", "--dim", "3,2", "--alpha", "[2]", "--beta", "[]", "--verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("[case1]"));
    assert!(out.contains("H^0:  dim 13"));
    assert!(out.contains("H^2:  dim 13"));
    for row in ["(2,0,0)|(0,0)", "(1,0,0)|(1,0)", "(0,0,0)|(1,1)"] {
        assert_eq!(out.matches(row).count(), 2, "{row}");
    }
    assert!(out.contains("verify: E1 page equals the closed form"));
}

#[test]
fn hypothesis_failure_exits_two_with_json() {
    let (code, out, err) = call(&["cohom", "--grass", "1,1", "--dim", "2,2", "--alpha", "[2]", "--beta", "[]"]);
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "hypothesis_not_satisfied");
    assert!(v["error"]["message"].as_str().unwrap().contains("hypothesis not satisfied"));
}

#[test]
fn lr_pieri() {
    let (code, out, _) = call(&["lr", "[1]", "[1]", "[2]"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1\n");
    let (_, out, _) = call(&["lr", "[2,1]", "[2,1]", "[3,2,1]"]);
    assert_eq!(out, "2\n");
}

#[test]
fn malformed_input_exits_one() {
    for args in [
        vec!["lr", "[1]", "[x]", "[2]"],
        vec!["lr", "[1]", "[1]"],
        vec!["cohom", "--grass", "1", "--dim", "3,2"],
        vec!["cohom", "--grass", "1,1", "--dim", "3,2", "--alpha", "[1,3]"],
        vec!["frobnicate"],
        vec!["--jobs", "0", "lr", "[1]", "[1]", "[2]"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, EXIT_MALFORMED, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("char-rational"));
}

#[test]
fn verify_mismatch_exits_three() {
    let (code, out, _) = call(&["verify", "--grass", "1,1", "--dim", "4,2", "--alpha", "[1,1]"]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("MISMATCH"));
    let (code, out, _) = call(&["--json", "verify", "--grass", "1,1", "--dim", "4,2", "--alpha", "[1,1]"]);
    assert_eq!(code, EXIT_MISMATCH);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["diffs"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_exit_code_tracks_the_diff_set() {
    for (grass, dim, alpha, beta) in [
        ("1,1", "3,2", "[3]", "[]"),
        ("1,0", "3,1", "[1]", "[]"),
        ("2,1", "4,2", "[1]", "[1]"),
        ("0,1", "1,3", "[1]", "[]"),
    ] {
        let (code, out, _) = call(&["--json", "verify", "--grass", grass, "--dim", dim, "--alpha", alpha, "--beta", beta]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let empty = v["diffs"].as_array().unwrap().is_empty();
        assert_eq!(v["passed"], empty);
        assert_eq!(code == EXIT_OK, empty, "{grass} {dim} {alpha} {beta}");
    }
}

#[test]
fn nonformal_page_flags_odd_degrees() {
    let (code, out, _) = call(&["e1", "--grass", "1,1", "--dim", "2,2", "--alpha", "[2]"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("possibly nondegenerate"));
    let (_, out, _) = call(&["--json", "e1", "--grass", "1,1", "--dim", "2,2", "--alpha", "[2]"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["possibly_nondegenerate"], true);
    assert_eq!(v["case"], "none");
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn json_outputs_round_trip() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["--json", "char-rational", "--dim", "3,1", "--lambda", "[1]", "--mu", "[1]"],
        vec!["--json", "char-super", "--dim", "2,2", "--lambda", "[2,1]"],
        vec!["--json", "cohom", "--grass", "1,1", "--dim", "3,2", "--alpha", "[4]"],
        vec!["--json", "verify", "--grass", "1,1", "--dim", "3,2", "--alpha", "[2]"],
        vec!["--json", "e1", "--grass", "1,1", "--dim", "3,1", "--beta", "[2]"],
        vec!["--json", "hilbert-grass", "--grass", "2,1", "--dim", "5,4"],
        vec!["--json", "hilbert-flag", "--step", "2,1", "--step", "4,2", "--dim", "6,3", "--alpha", "[1]", "--beta", "[1]"],
        vec!["--json", "lr", "[2,1]", "[1]", "[3,1]"],
        vec!["--json", "codim", "1", "2", "4", "1", "1"],
    ];
    for args in cases {
        let (code, out, err) = call(&args);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        round_trips(&out);
    }
    let (_, _, err) = call(&["--json", "cohom", "--grass", "1,1", "--dim", "2,2", "--alpha", "[2]"]);
    round_trips(&err);
}

#[test]
fn json_numbers_are_strings_except_weights() {
    let (_, out, _) = call(&["--json", "char-rational", "--dim", "3,1", "--lambda", "[1]", "--mu", "[1]"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], "15");
    for t in v["character"].as_array().unwrap() {
        assert!(t["mult"].is_string() && t["dim"].is_string());
        assert!(t["w0"].as_array().unwrap().iter().all(|x| x.is_i64()));
    }
}

#[test]
fn flag_cohomology_has_the_adjoint_in_degree_zero() {
    let (code, out, _) = call(&[
        "--json", "hilbert-flag", "--step", "2,1", "--step", "4,2", "--dim", "6,3", "--alpha", "[1]", "--beta", "[1]",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let degs = v["cohomology"].as_array().unwrap();
    assert_eq!(degs[0]["degree"], "0");
    assert_eq!(degs[0]["dim"], "80");
    let coeffs: Vec<&str> = v["hilbert"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "0", "2", "0", "2", "0", "1"]);
}

#[test]
fn chain_failure_exits_two() {
    let (code, _, err) = call(&["hilbert-flag", "--step", "1,1", "--step", "2,2", "--dim", "2,3", "--alpha", "[2]"]);
    assert_eq!(code, EXIT_PRECONDITION);
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "chain_condition_failed");
}

#[test]
fn output_does_not_depend_on_jobs() {
    let args = ["e1", "--grass", "2,1", "--dim", "5,2", "--alpha", "[2,1]", "--beta", "[1]"];
    let one = call(&[&["--jobs", "1", "--json"], &args[..]].concat());
    let four = call(&[&["--jobs", "4", "--json"], &args[..]].concat());
    assert_eq!(one, four);
}

#[test]
fn binary_honours_the_term_cap() {
    let bin = env!("CARGO_BIN_EXE_superbott");
    let args = ["e1", "--grass", "1,1", "--dim", "3,2", "--alpha", "[3]"];
    let capped = Command::new(bin).args(args).env("SUPERBOTT_MAX_TERMS", "1").output().unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_PRECONDITION));
    let v: Value = serde_json::from_slice(&capped.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "too_many_terms");
    let bad = Command::new(bin).args(args).env("SUPERBOTT_MAX_TERMS", "lots").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_MALFORMED));
    let fine = Command::new(bin).args(args).env_remove("SUPERBOTT_MAX_TERMS").output().unwrap();
    assert_eq!(fine.status.code(), Some(EXIT_OK));
}
