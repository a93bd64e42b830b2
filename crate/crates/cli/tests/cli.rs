use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twistcross"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: stdout {:?} stderr {:?}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn gen_ex19(dir: &Path) {
    let out = run(dir, &["gen", "--degree", "6", "--gens", "(1,4,5,0,0,0)", "(0,5,4,0,0,6)", "-o", "ex19.json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_closes_the_counterexample() {
    let d = TempDir::new().unwrap();
    let out = run(d.path(), &["gen", "--degree", "6", "--gens", "(1,4,5,0,0,0)", "(0,5,4,0,0,6)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["type"], "cayley");
    assert_eq!(v["size"], 19);
}

#[test]
fn gen_rejects_mixed_degrees() {
    let d = TempDir::new().unwrap();
    let out = run(d.path(), &["gen", "--degree", "5", "--gens", "(1,4,5,0,0,0)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kernel_has_no_section() {
    let d = TempDir::new().unwrap();
    gen_ex19(d.path());
    let nc = json_of(&run(d.path(), &["nclifford", "-i", "ex19.json"]));
    assert_eq!(nc["count"], 2);
    let largest = nc["subsemigroups"].as_array().unwrap().iter().max_by_key(|s| s.as_array().unwrap().len()).unwrap();
    write(d.path(), "kernel.json", &largest.to_string());
    let out = run(d.path(), &["section", "--input", "ex19.json", "--subsemigroup", "kernel.json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["found"], false);
    assert_eq!(v["classes"], 15);
    assert!(!v["obstructions"].as_array().unwrap().is_empty());
}

#[test]
fn busby_decomposition_of_z4_over_z2() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "--cyclic", "4", "-o", "z4.json"]);
    write(d.path(), "z2.json", "[0, 2]");
    write(d.path(), "trivial.json", "[0]");
    let out = run(
        d.path(),
        &["decompose", "--mode", "busby", "--input", "z4.json", "--normal", "trivial.json", "--sub", "z2.json"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["dims"]["direct"], 4);
    assert_eq!(v["dims"]["iterated"], 4);
    assert_eq!(v["dims"]["iso"], true);
    assert_eq!(v["passed"], true);
}

#[test]
fn green_decomposition_of_i2() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "--symmetric-inverse", "2", "-o", "i2.json"]);
    let idem = json_of(&run(d.path(), &["analyze", "-i", "i2.json"]))["idempotents"].to_string();
    write(d.path(), "e.json", &idem);
    let v = json_of(&run(d.path(), &["decompose", "--mode", "green", "-i", "i2.json", "--sub", "e.json"]));
    assert_eq!(v["dims"]["direct"], 7);
    assert_eq!(v["dims"]["iterated"], 7);
}

#[test]
fn malformed_json_reports_position() {
    let d = TempDir::new().unwrap();
    write(d.path(), "bad.json", "{\n  \"type\": \"cayley\",\n  \"size\": 2,,\n}");
    let out = run(d.path(), &["analyze", "-i", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["line"], 3);
    assert!(err["column"].as_u64().unwrap() > 0);
}

#[test]
fn non_inverse_tables_fail_analysis_and_are_refused_elsewhere() {
    let d = TempDir::new().unwrap();
    write(d.path(), "t.json", r#"{"type": "cayley", "size": 2, "product": [[0, 1], [1, 1]], "star": [1, 0]}"#);
    let out = run(d.path(), &["analyze", "-i", "t.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["passed"], false);
    write(d.path(), "n.json", "[0]");
    assert_eq!(run(d.path(), &["xprod", "-i", "t.json", "--normal", "n.json"]).status.code(), Some(2));
}

#[test]
fn sections_are_verified() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "--cyclic", "4", "-o", "z4.json"]);
    write(d.path(), "z2.json", "[0, 2]");
    let found = json_of(&run(d.path(), &["section", "-i", "z4.json", "--subsemigroup", "z2.json"]));
    assert_eq!(found["found"], true);
    write(d.path(), "good.json", &found["section"].to_string());
    let ok = run(d.path(), &["section", "-i", "z4.json", "--subsemigroup", "z2.json", "--section", "good.json"]);
    assert_eq!(ok.status.code(), Some(0));
    let unit_class = found["projection"][0].as_u64().unwrap();
    let other = 1 - unit_class;
    write(d.path(), "bad.json", &format!(r#"{{"{unit_class}": 2, "{other}": 1}}"#));
    let bad = run(d.path(), &["section", "-i", "z4.json", "--subsemigroup", "z2.json", "--section", "bad.json"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json_of(&bad)["passed"], false);
}

#[test]
fn actions_round_trip_through_files() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "--cyclic", "4", "-o", "z4.json"]);
    write(d.path(), "z2.json", "[0, 2]");
    for (kind, extra) in [("section", vec!["--normal", "z2.json"]), ("green", vec!["--normal", "z2.json"])] {
        let mut args = vec!["action", "build", kind, "-i", "z4.json", "-o", "a.json"];
        args.extend(extra);
        assert_eq!(run(d.path(), &args).status.code(), Some(0));
        let out = run(d.path(), &["action", "verify", "-i", "a.json", "--samples", "20"]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", String::from_utf8_lossy(&out.stdout));
        let x = json_of(&run(d.path(), &["xprod", "-i", "a.json", "--dump"]));
        assert_eq!(x["dim_quotient"], 4);
        assert!(x["algebra"]["structure"].is_array());
    }
}

#[test]
fn partial_actions_convert_both_ways() {
    let d = TempDir::new().unwrap();
    let p = run(
        d.path(),
        &["action", "build", "random-partial", "--cyclic", "3", "--block", "2", "--seed", "3", "-o", "p.json"],
    );
    assert_eq!(p.status.code(), Some(0));
    assert_eq!(run(d.path(), &["action", "build", "exel", "-i", "p.json", "-o", "e.json"]).status.code(), Some(0));
    assert_eq!(run(d.path(), &["action", "verify", "-i", "e.json"]).status.code(), Some(0));
    let back = run(d.path(), &["action", "build", "partial", "-i", "e.json", "--cyclic", "3", "-o", "p2.json"]);
    assert_eq!(back.status.code(), Some(0));
    let a: Value = serde_json::from_str(&fs::read_to_string(d.path().join("p.json")).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&fs::read_to_string(d.path().join("p2.json")).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn float_backend_agrees_on_dimensions() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "--symmetric-inverse", "2", "-o", "i2.json"]);
    let exact = json_of(&run(d.path(), &["xprod", "-i", "i2.json", "--rep"]));
    let float = json_of(&run(d.path(), &["xprod", "-i", "i2.json", "--rep", "--backend", "float"]));
    for k in ["dim_l", "dim_quotient", "cstar_dim", "iso", "passed"] {
        assert_eq!(exact[k], float[k], "{k}");
    }
    assert_eq!(exact["dim_quotient"], 7);
}

#[test]
fn exel_counts() {
    let d = TempDir::new().unwrap();
    for (n, size) in [(2, 3), (3, 8)] {
        let v = json_of(&run(d.path(), &["exel", "--cyclic", &n.to_string()]));
        assert_eq!(v["size"], size);
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn outputs_are_deterministic() {
    let d = TempDir::new().unwrap();
    let a = run(d.path(), &["action", "build", "random-partial", "--cyclic", "2", "--seed", "9"]);
    let b = run(d.path(), &["action", "build", "random-partial", "--cyclic", "2", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn paper_example_passes() {
    let d = TempDir::new().unwrap();
    let out = run(d.path(), &["paper-example"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["counterexample"]["size"], 19);
    assert_eq!(v["counterexample"]["section_found"], false);
    assert!(v["table"].as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn text_format_ends_with_a_verdict() {
    let d = TempDir::new().unwrap();
    let out = run(d.path(), &["exel", "--cyclic", "2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("verdict: PASS"), "{text}");
}
