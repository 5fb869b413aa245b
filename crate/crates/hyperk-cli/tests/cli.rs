use std::path::PathBuf;
use std::process::Command as Proc;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::Parser;
use hyperk_cli::Cli;
use serde_json::Value;

const NINE_CELL: &str = r#"{
  "parent": ["0", "1", "0", "1"],
  "pieces": [
    ["0", "1/3", "0", "1/3"], ["1/3", "2/3", "0", "1/3"], ["2/3", "1", "0", "1/3"],
    ["0", "1/3", "1/3", "2/3"], ["1/3", "2/3", "1/3", "2/3"], ["2/3", "1", "1/3", "2/3"],
    ["0", "1/3", "2/3", "1"], ["1/3", "2/3", "2/3", "1"], ["2/3", "1", "2/3", "1"]
  ]
}"#;

fn temp_path(name: &str) -> PathBuf {
    static COUNTER: AtomicUsize = AtomicUsize::new(0);
    let n = COUNTER.fetch_add(1, Ordering::Relaxed);
    std::env::temp_dir().join(format!("hyperk-cli-{}-{}-{}", std::process::id(), n, name))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let cli = Cli::try_parse_from(args).expect("arguments should parse");
    let mut buf = Vec::new();
    let code = hyperk_cli::run(&cli, &mut buf);
    (code, buf)
}

fn json(buf: &[u8]) -> Value {
    serde_json::from_slice(buf).expect("output should be JSON")
}

#[test]
fn nine_cell_grid_is_regular_but_not_weak() {
    let input = temp_path("ninecell.json");
    std::fs::write(&input, NINE_CELL).unwrap();
    let (code, buf) = run_cli(&["hyperk", "classify", input.to_str().unwrap()]);
    let doc = json(&buf);
    assert_eq!(code, 1);
    assert_eq!(doc["regular"]["regular"], Value::Bool(true));
    assert_eq!(doc["weak"]["weak"], Value::Bool(false));
    assert_eq!(doc["weak"]["deficit"]["e1"].as_f64(), Some(2.0));
    assert_eq!(doc["weak"]["deficit"]["e2"].as_f64(), Some(2.0));
    assert_eq!(doc["pass"], Value::Bool(false));
    let _ = std::fs::remove_file(&input);
}

#[test]
fn generated_chain_classifies_as_weak_but_not_regular() {
    let chain = temp_path("chain.json");
    let (code, _) = run_cli(&[
        "hyperk",
        "partition-gen",
        "--p",
        "0,1/3,2/3,1",
        "--q",
        "0,1/2,1",
        "--strategy",
        "e1-first",
        "--out",
        chain.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    let (code, buf) = run_cli(&["hyperk", "classify", chain.to_str().unwrap(), "--kind", "weak"]);
    let doc = json(&buf);
    assert_eq!(code, 0);
    // Rational cuts survive the round trip, so the verdict is exact.
    assert_eq!(doc["weak"]["length_sum"]["e1"].as_f64(), Some(1.0));
    assert_eq!(doc["weak"]["length_sum"]["e2"].as_f64(), Some(1.0));

    let (code, buf) =
        run_cli(&["hyperk", "classify", chain.to_str().unwrap(), "--kind", "regular"]);
    let doc = json(&buf);
    assert_eq!(code, 1);
    assert_eq!(doc["regular"]["reason"], Value::String("gap".into()));
    let _ = std::fs::remove_file(&chain);
}

#[test]
fn refined_chain_still_classifies_as_weak() {
    let chain = temp_path("refined.json");
    let (code, _) = run_cli(&[
        "hyperk",
        "partition-gen",
        "--p",
        "0,1/3,1",
        "--q",
        "0,1",
        "--refine",
        "0.25,0.25",
        "--out",
        chain.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    // Refined coordinates are floats; the classifier's allowance absorbs
    // the third's rounding.
    let (code, _) = run_cli(&["hyperk", "classify", chain.to_str().unwrap(), "--kind", "weak"]);
    assert_eq!(code, 0);
    let _ = std::fs::remove_file(&chain);
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "hyperk",
        "integrate",
        "--f1",
        "sin(x)",
        "--f2",
        "exp(x)",
        "--g1",
        "x^2",
        "--g2",
        "log(x+1)",
        "--lo",
        "0,0",
        "--hi",
        "1,1",
        "--check",
    ];
    let (code_a, buf_a) = run_cli(&args);
    let (code_b, buf_b) = run_cli(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(buf_a, buf_b);

    let args = [
        "hyperk",
        "partition-gen",
        "--p",
        "0,1/4,1/2,3/4,1",
        "--q",
        "0,1/3,1",
        "--strategy",
        "random",
        "--seed",
        "7",
    ];
    let (_, buf_a) = run_cli(&args);
    let (_, buf_b) = run_cli(&args);
    assert_eq!(buf_a, buf_b);
}

#[test]
fn identity_integrator_is_the_default() {
    let (code, buf) =
        run_cli(&["hyperk", "integrate", "--f1", "x", "--f2", "x", "--lo", "0,0", "--hi", "1,1"]);
    let doc = json(&buf);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["converged"], Value::Bool(true));
    // Midpoint sums of the identity pair are the closed form at every
    // level, so the reported value is exact.
    assert_eq!(doc["result"]["value"]["e1"].as_f64(), Some(0.5));
    assert_eq!(doc["result"]["value"]["e2"].as_f64(), Some(0.5));
}

#[test]
fn unconverged_integral_exits_one() {
    let (code, buf) = run_cli(&[
        "hyperk",
        "integrate",
        "--f1",
        "sin(x)",
        "--f2",
        "cos(x)",
        "--lo",
        "0,0",
        "--hi",
        "1,1",
        "--tol",
        "1e-15",
    ]);
    let doc = json(&buf);
    assert_eq!(code, 1);
    assert_eq!(doc["result"]["converged"], Value::Bool(false));
}

#[test]
fn unbounded_variation_exits_one() {
    let (code, buf) = run_cli(&[
        "hyperk",
        "variation",
        "--f1",
        "1/x",
        "--f2",
        "x",
        "--lo",
        "1e-300,0",
        "--hi",
        "1,1",
    ]);
    let doc = json(&buf);
    assert_eq!(code, 1);
    assert_eq!(doc["unbounded"], Value::Bool(true));
}

#[test]
fn too_strict_parts_tolerance_exits_one() {
    let (code, buf) = run_cli(&[
        "hyperk", "verify", "parts", "--f1", "sin(x)", "--f2", "x", "--g1", "x^3", "--g2", "x^2",
        "--lo", "0,0", "--hi", "1,1", "--tol", "1e-14",
    ]);
    let doc = json(&buf);
    assert_eq!(code, 1);
    assert_eq!(doc["within_tolerance"], Value::Bool(false));
}

#[test]
fn jumps_emit_discontinuity_lines() {
    let (code, buf) = run_cli(&[
        "hyperk", "variation", "--f1", "x", "--f2", "x", "--lo", "0,0", "--hi", "2,2", "--jumps1",
        "1/2",
    ]);
    let doc = json(&buf);
    assert_eq!(code, 0);
    assert_eq!(doc["lines"]["vertical"][0].as_f64(), Some(0.5));
}

#[test]
fn malformed_inputs_exit_two() {
    let missing = temp_path("missing.json");
    let (code, _) = run_cli(&["hyperk", "classify", missing.to_str().unwrap()]);
    assert_eq!(code, 2);

    let bad = temp_path("bad.json");
    std::fs::write(&bad, r#"{"parent": ["0","x","0","1"], "pieces": []}"#).unwrap();
    let (code, buf) = run_cli(&["hyperk", "classify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(buf.starts_with(b"error:"));
    let _ = std::fs::remove_file(&bad);

    let (code, _) = run_cli(&[
        "hyperk", "variation", "--f1", "x +", "--f2", "x", "--lo", "0,0", "--hi", "1,1",
    ]);
    assert_eq!(code, 2);

    let (code, _) = run_cli(&[
        "hyperk", "integrate", "--f1", "x", "--f2", "x", "--lo", "0,0", "--hi", "1,1", "--tol",
        "0",
    ]);
    assert_eq!(code, 2);

    let (code, _) = run_cli(&[
        "hyperk", "variation", "--f1", "x", "--f2", "x", "--lo", "0,0", "--hi", "1,1", "--jumps1",
        "5",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn integrator_components_must_come_in_pairs() {
    let parse = Cli::try_parse_from([
        "hyperk", "integrate", "--f1", "x", "--f2", "x", "--g1", "x", "--lo", "0,0", "--hi", "1,1",
    ]);
    assert!(parse.is_err());
}

#[test]
fn out_file_duplicates_stdout() {
    let copy = temp_path("copy.json");
    let (code, buf) = run_cli(&[
        "hyperk",
        "integrate",
        "--f1",
        "x^2",
        "--f2",
        "x",
        "--lo",
        "0,0",
        "--hi",
        "1,1",
        "--out",
        copy.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read(&copy).unwrap(), buf);
    let _ = std::fs::remove_file(&copy);
}

#[test]
fn plot_table_has_header_and_one_row_per_point() {
    let plot = temp_path("plot.txt");
    let (code, _) = run_cli(&[
        "hyperk",
        "partition-gen",
        "--p",
        "0,1/3,2/3,1",
        "--q",
        "0,1/2,1",
        "--strategy",
        "e1-first",
        "--plot",
        plot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&plot).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# e1 e2");
    // An e1-first walk over these cuts has |P| + |Q| - 1 = 6 points.
    assert_eq!(lines.len(), 7);
    assert!(lines[1..].iter().all(|l| l.split(' ').count() == 2));
    let _ = std::fs::remove_file(&plot);
}

#[test]
fn binary_reports_verdicts_through_exit_codes() {
    let input = temp_path("bin-ninecell.json");
    std::fs::write(&input, NINE_CELL).unwrap();
    let output = Proc::new(env!("CARGO_BIN_EXE_hyperk"))
        .args(["classify", input.to_str().unwrap(), "--kind", "weak"])
        .output()
        .expect("binary should run");
    assert_eq!(output.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&output.stdout).expect("stdout should be JSON");
    assert_eq!(doc["kind"], Value::String("weak".into()));
    let _ = std::fs::remove_file(&input);

    let help = Proc::new(env!("CARGO_BIN_EXE_hyperk")).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
