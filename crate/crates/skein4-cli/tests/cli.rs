//! End-to-end tests of the installed binary: output text, formats, and
//! exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn skein4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = skein4(args);
    assert!(
        out.status.success(),
        "args {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn compute_prints_known_polynomials() {
    let jones = stdout_of(&["compute", "--census", "hopf", "--invariant", "jones"]);
    assert!(jones.contains("value:      -q^-2 - q^-10"), "{jones}");

    let q = stdout_of(&["compute", "--census", "trefoil", "--invariant", "q"]);
    assert!(q.contains("value:      2*x^2 + 2*x - 3"), "{q}");

    let b1 = stdout_of(&["compute", "--census", "hopf", "--invariant", "b1"]);
    assert!(b1.contains("value:      -e'*v_2 - a*v_1 - e*a*v_1"), "{b1}");
}

#[test]
fn compute_accepts_codes_braids_and_files() {
    let from_code = stdout_of(&[
        "compute",
        "--code",
        "C(1,4,2,3) C(4,1,3,2)",
        "--invariant",
        "jones",
    ]);
    assert!(from_code.contains("-q^-2 - q^-10"));

    let from_braid = stdout_of(&["compute", "--braid", "2: 1 1", "--invariant", "jones"]);
    assert!(from_braid.contains("-q^-2 - q^-10"));

    let path = std::env::temp_dir().join("skein4_cli_test_diagram.txt");
    let mut f = std::fs::File::create(&path).expect("temp file");
    writeln!(f, "# a hopf link, split over lines").unwrap();
    writeln!(f, "C(1,4,2,3)").unwrap();
    writeln!(f, "C(4,1,3,2)").unwrap();
    drop(f);
    let from_file = stdout_of(&[
        "compute",
        "--file",
        path.to_str().unwrap(),
        "--invariant",
        "jones",
    ]);
    std::fs::remove_file(&path).ok();
    assert!(from_file.contains("-q^-2 - q^-10"));
}

#[test]
fn compute_emits_parseable_json() {
    let text = stdout_of(&[
        "compute",
        "--census",
        "figure_eight",
        "--invariant",
        "jones",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(v["name"], "figure_eight");
    assert_eq!(v["value"], "q^8 - q^4 + 1 - q^-4 + q^-8");
    assert_eq!(v["crossings"], 4);
    assert_eq!(v["writhe"], 0);
    assert_eq!(v["vars"][0], "q");
}

#[test]
fn verify_passes_on_the_builtin_census() {
    let out = skein4(&["verify", "--trials", "2"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains(", 0 failed"), "{text}");
}

#[test]
fn malformed_input_exits_2() {
    let out = skein4(&["compute", "--code", "C(1,2,3)", "--invariant", "b1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = skein4(&["compute", "--census", "nosuch", "--invariant", "b1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("available"));

    let out = skein4(&["compute", "--invariant", "b1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crossing_cap_exits_3() {
    let out = skein4(&[
        "compute",
        "--census",
        "hopf",
        "--invariant",
        "jones",
        "--max-crossings",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn table_lists_the_whole_census_as_csv() {
    let text = stdout_of(&["table", "--format", "csv", "--invariant", "jones,q"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,crossings,mu,jones,q"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 15);
    assert!(body.iter().any(|l| l.starts_with("unknot,0,1,1,1")));
    assert!(body
        .iter()
        .any(|l| l.starts_with("trefoil,3,1,") && l.ends_with("2*x^2 + 2*x - 3")));
}

#[test]
fn check_spec_accepts_builtins_and_rejects_broken_files() {
    let out = skein4(&["check-spec", "--spec", "jones", "--n-max", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 violated"));

    let out = skein4(&["check-spec", "--spec", "q", "--n-max", "6"]);
    assert!(out.status.success());

    // b maps to q instead of q^-1, which breaks the module relations.
    let broken = r#"{
        "name": "broken",
        "presentation": "b2",
        "writhe_module": true,
        "vars": ["q"],
        "images": {"a": "q", "a'": "q", "b": "q", "b'": "q", "A": "-q^-3"},
        "v_first": "1",
        "v_ratio": "-q^2 - q^-2"
    }"#;
    let path = std::env::temp_dir().join("skein4_cli_test_broken_hom.json");
    std::fs::write(&path, broken).expect("temp file");
    let out = skein4(&["check-spec", "--spec", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn identical_arguments_give_byte_identical_output() {
    for args in [
        vec!["verify", "--trials", "2", "--seed", "11"],
        vec!["table", "--format", "csv"],
        vec!["compute", "--census", "torus_2_7", "--invariant", "b1"],
    ] {
        let first = skein4(&args);
        let second = skein4(&args);
        assert_eq!(first.status.code(), second.status.code(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn json_values_round_trip_through_the_parsers() {
    let text = stdout_of(&[
        "compute",
        "--census",
        "hopf",
        "--invariant",
        "b1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let value = v["value"].as_str().unwrap();
    let element = skein4::RingElement::parse(value).unwrap();
    assert_eq!(element.render(), value);

    let text = stdout_of(&[
        "compute",
        "--census",
        "trefoil",
        "--invariant",
        "jones",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let value = v["value"].as_str().unwrap();
    let poly = skein4::ring::LaurentPoly::parse(&["q"], value).unwrap();
    assert_eq!(poly.render(), value);
}

#[test]
fn relations_reduce_in_every_presentation() {
    for pres in ["b1", "b1a", "b2"] {
        let text = stdout_of(&["relations", "--presentation", pres, "--n-max", "3"]);
        assert!(text.contains("[reduces]"), "{pres}: {text}");
        assert!(!text.contains("MISMATCH"), "{pres}: {text}");
    }
}
