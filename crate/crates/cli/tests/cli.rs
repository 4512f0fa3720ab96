use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

fn cstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cstar"))
        .args(args)
        .output()
        .unwrap()
}

fn cstar_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cstar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn file(suffix: &str, text: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const CUSP: &str = "kind = \"hypersurface\"\nd = 2\np = [[\"0\", 3]]\n";

#[test]
fn hypersurface_report_in_markdown() {
    let f = file(".toml", CUSP);
    let out = cstar(&["analyze", f.path().to_str().unwrap(), "--oracle"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("type (3,1)"), "{text}");
    assert!(text.contains("Cl = Z/3"), "{text}");
    assert!(!text.contains("DISAGREE"));
}

#[test]
fn hypersurface_report_in_json() {
    let f = file(".toml", CUSP);
    let out = cstar(&["analyze", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "hyperbolic");
    assert_eq!(v["singularities"][0]["type"]["d"], 3);
    assert_eq!(v["singularities"][0]["type"]["e"], 1);
    assert_eq!(v["class_group"]["group"]["torsion"][0], 3);
    assert_eq!(v["factorial"], false);
}

#[test]
fn output_is_deterministic() {
    let f = file(".toml", CUSP);
    let path = f.path().to_str().unwrap();
    let a = cstar(&["analyze", path, "--format", "json", "--oracle"]);
    let b = cstar(&["analyze", path, "--format", "json", "--oracle"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn trivial_pair_is_the_smooth_plane() {
    let out = cstar_stdin(&["analyze", "-", "--oracle"], "{\"kind\": \"hyperbolic\"}");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("- smooth"), "{text}");
    assert!(text.contains("Cl = 0"), "{text}");
}

#[test]
fn canonical_flag_replaces_the_representative() {
    let input = "kind = \"hyperbolic\"\nd_plus = [{ point = \"1\", coeff = \"5/2\" }]\nd_minus = [{ point = \"1\", coeff = \"-3\" }]\n";
    let out = cstar_stdin(&["analyze", "-", "--canonical", "--format", "json"], input);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["input_pair"]["d_plus"][0]["coeff"], "1/2");
    assert_eq!(v["input_pair"]["d_minus"][0]["coeff"], "-1");
}

#[test]
fn toric_subcommand() {
    let out = cstar(&["toric", "5", "2", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("A_{5,2}"), "{text}");
    assert!(text.contains("(1,0), (1,1), (1,2), (2,5)"), "{text}");
    let json = cstar_stdin(
        &["analyze", "-", "--format", "json"],
        "{\"kind\": \"toric\", \"d\": 5, \"e\": 2}",
    );
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["hilbert_basis_size"], 4);
}

#[test]
fn equations_subcommand() {
    let f = file(".toml", CUSP);
    let out = cstar(&["equations", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("v_+^2*v_- = t^3"));

    let input = "{\"kind\": \"hyperbolic\", \"d_minus\": [{\"point\": \"0\", \"coeff\": \"-1/2\"}, {\"point\": \"1\", \"coeff\": \"-1/2\"}]}";
    let out = cstar_stdin(&["equations", "-", "--format", "json"], input);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["single_equation"], true);
}

#[test]
fn cover_subcommand() {
    let f = file(".toml", CUSP);
    let out = cstar(&[
        "cover",
        f.path().to_str().unwrap(),
        "--b",
        "0",
        "--d",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["k"], 2);
    assert_eq!(v["new_pair"]["d_minus"][0]["coeff"], "-3");
}

#[test]
fn cover_rejects_support_away_from_origin() {
    let input = "kind = \"hypersurface\"\nd = 2\np = [[\"1\", 3]]\n";
    let out = cstar_stdin(&["cover", "-", "--b", "2", "--d", "4"], input);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("point 1"), "{}", stderr(&out));
}

#[test]
fn convert_subcommand() {
    let gens = "[[neg]]\nroots = [[\"0\", 1]]\ndegree = 1\n[[neg]]\nroots = [[\"0\", 1]]\ndegree = 2\n[[pos]]\nroots = []\ndegree = 1\n";
    let f = file(".toml", gens);
    let out = cstar(&["convert", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["d_plus"], Value::Array(vec![]));
    assert_eq!(v["d_minus"][0]["coeff"], "-1/2");
}

#[test]
fn invalid_pair_names_the_point() {
    let input = "kind = \"hyperbolic\"\nd_plus = [{ point = \"2/3\", coeff = \"1/2\" }]\nd_minus = [{ point = \"2/3\", coeff = \"1/3\" }]\n";
    let out = cstar_stdin(&["analyze", "-"], input);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("point 2/3"), "{}", stderr(&out));
}

#[test]
fn malformed_input_names_the_field() {
    let f = file(".json", "{\"kind\": \"toric\", \"d\": 5}");
    let out = cstar(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("`e`"), "{}", stderr(&out));

    let out = cstar(&["toric", "4", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cstar(&["analyze", "/nonexistent/input.toml"]);
    assert_eq!(out.status.code(), Some(1));
}
