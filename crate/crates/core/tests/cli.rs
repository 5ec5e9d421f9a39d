use boundsing::cli::{run_to_string, EXIT_DOMAIN, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;
use std::ffi::OsString;

fn run(args: &[&str]) -> (i32, Value) {
    let argv = std::iter::once("boundsing").chain(args.iter().copied()).map(OsString::from);
    let (code, out) = run_to_string(argv);
    let json = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?} printed non-JSON ({e}): {out}"));
    (code, json)
}

fn temp_dir(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("boundsing-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn classify_examples() {
    let (code, out) = run(&["classify", "B+2", "0", "-1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, serde_json::json!({ "membership": "NonSingular", "type": { "p": 1, "q": 1 } }));

    let (code, out) = run(&["classify", "F4+", "1", "-1", "0", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out["catalog_id"], 6);

    let (code, out) = run(&["classify", "F4+", "0", "-3", "0", "2"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out["membership"], "Both");

    let (code, out) = run(&["classify", "-B5", "-3/2", "1", "0", "2", "-1/7"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn usage_errors() {
    for args in [
        vec!["classify", "B+4", "1", "2"],
        vec!["classify", "B+2", "0.5", "1"],
        vec!["classify", "D4", "1"],
        vec!["atlas", "B+3", "--box", "0"],
        vec!["render", "F4+", "--slice", "b,x", "--fix", "a=0", "--fix", "c=0"],
        vec!["frobnicate"],
    ] {
        let (code, out) = run(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {out}");
        assert!(out["error"].is_string());
    }
}

#[test]
fn info_lists_parameters() {
    let (code, out) = run(&["info", "C-4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out["mu"], 4);
    assert_eq!(out["components"], 9);
    assert_eq!(out["parameters"].as_array().unwrap().len(), 4);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["atlas", "B+4", "--samples", "500"],
        vec!["certify", "F4+", "1", "-1", "0", "0", "1", "-2", "0", "1/10"],
        vec!["eliminant"],
    ] {
        assert_eq!(run(&args), run(&args), "{args:?}");
    }
}

#[test]
fn atlas_ignores_the_job_count() {
    let one = run(&["atlas", "F4+", "--samples", "2000", "--jobs", "1"]);
    let two = run(&["atlas", "F4+", "--samples", "2000", "--jobs", "2"]);
    assert_eq!(one, two);
    assert_eq!(one.0, EXIT_OK);
    assert_eq!(one.1["report"]["match"], true);
}

#[test]
fn atlas_writes_the_full_report() {
    let dir = temp_dir("atlas");
    let path = dir.join("report.json");
    let (code, _) = run(&["atlas", "C+3", "--samples", "300", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let full: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(full["check"]["pass"], true);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn certify_outcomes() {
    let (code, out) = run(&["certify", "B+2", "0", "-1", "-1/2", "-3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out["certified"], true);

    let (code, out) = run(&["certify", "B+2", "0", "-1", "-3", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out["error"], "TypeMismatch");
    assert_eq!(out["segment"]["outcome"], "crossing");

    let (code, out) = run(&["certify", "B+2", "-4", "39/10", "-1", "6/25", "--budget", "1"]);
    assert_eq!(code, EXIT_INCONCLUSIVE, "{out}");
}

#[test]
fn render_writes_svg_files() {
    let dir = temp_dir("render");
    let d = dir.to_str().unwrap();
    let (code, out) = run(&["render", "F4+", "1", "-1", "0", "0", "--out-dir", d]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out["boundary_crossings"], 3);
    let svg = std::fs::read_to_string(out["file"].as_str().unwrap()).unwrap();
    assert!(svg.starts_with("<?xml"));

    let (code, out) = run(&["render", "F4+", "--slice", "b,d", "--fix", "a=0", "--fix", "c=0", "--out-dir", d]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out["sigma0_segments"], out["sigma1_segments"]);
    assert!(std::path::Path::new(out["file"].as_str().unwrap()).exists());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn eliminant_reports_both_components() {
    let (code, out) = run(&["eliminant"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out["sigma1"], "4*b^3 + 27*d^2");
    assert_eq!(out["total_degree"], 7);
    assert_eq!(out["squarefree_certified"], true);
}
