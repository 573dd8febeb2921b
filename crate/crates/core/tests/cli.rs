use std::path::PathBuf;
use std::process::Command;

use chnorm::cli::{run, Outcome, EXIT_INVALID, EXIT_OK, EXIT_PARSE, EXIT_UNVERIFIED, EXIT_USAGE};

fn chnorm(args: &[&str]) -> Outcome {
    run(std::iter::once("chnorm").chain(args.iter().copied()))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chnorm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn value(out: &Outcome, key: &str) -> String {
    let prefix = format!("{key}: ");
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {key} in\n{}", out.stdout))
        .to_string()
}

#[test]
fn norm_of_dual_numbers() {
    let out = chnorm(&["norm", "dual-numbers"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(value(&out, "min_poly"), "t^2 - 2*x1*t + x1^2");
    assert_eq!(value(&out, "minimal_norm"), "x1^2");
    assert_eq!(value(&out, "degree"), "2");
    assert_eq!(value(&out, "multiplicative"), "true");
}

#[test]
fn structured_output_matches_text() {
    let text = chnorm(&["decompose", "qs3"]);
    let json = chnorm(&["decompose", "qs3", "--format", "structured"]);
    assert_eq!(json.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["exponents"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["block_dims"], serde_json::json!([1, 1, 4]));
    assert_eq!(v["degree"], 4);
    let text_keys: Vec<&str> = text
        .stdout
        .lines()
        .filter(|l| !l.starts_with(' '))
        .map(|l| l.split(':').next().unwrap())
        .collect();
    let json_keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(text_keys, json_keys);
}

#[test]
fn repeated_runs_are_identical() {
    for args in [&["norm", "m3"][..], &["decompose", "m2-plus-q"], &["degree", "quaternion"]] {
        assert_eq!(chnorm(args), chnorm(args), "{args:?}");
    }
    let a = chnorm(&["norm", "m3", "--seed", "7"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(value(&a, "seed"), "7");
}

#[test]
fn emitted_file_gives_the_same_report() {
    for name in chnorm::algebra::catalog::NAMES {
        let emitted = chnorm(&["catalog", name, "--emit"]);
        assert_eq!(emitted.code, EXIT_OK);
        let path = scratch(&format!("{name}.json"));
        std::fs::write(&path, &emitted.stdout).unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(chnorm(&["norm", p]), chnorm(&["norm", name]), "{name}");
        assert_eq!(chnorm(&["decompose", p]), chnorm(&["decompose", name]), "{name}");
    }
}

#[test]
fn output_flag_writes_the_report() {
    let path = scratch("norm.txt");
    let out = chnorm(&["norm", "m2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), chnorm(&["norm", "m2"]).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(chnorm(&["catalog"]).code, EXIT_OK);
    assert_eq!(chnorm(&["--help"]).code, EXIT_OK);
    assert_eq!(chnorm(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(chnorm(&["norm", "no-such-algebra"]).code, EXIT_USAGE);
    assert_eq!(chnorm(&["catalog", "no-such-algebra"]).code, EXIT_USAGE);

    let bad = scratch("nonassociative.json");
    // a·a = 1 + a, but a·(a·a) and (a·a)·a disagree once a·1 = 0
    std::fs::write(
        &bad,
        r#"{"field":"Q","dim":2,"unit":["1","0"],
            "table":[{"i":0,"j":0,"k":0,"c":"1"},{"i":1,"j":1,"k":0,"c":"1"},{"i":1,"j":0,"k":1,"c":"1"}]}"#,
    )
    .unwrap();
    let out = chnorm(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID, "{}", out.stdout);
    assert_eq!(value(&out, "valid"), "false");
    assert_eq!(chnorm(&["norm", bad.to_str().unwrap()]).code, EXIT_INVALID);

    let garbled = scratch("garbled.json");
    std::fs::write(&garbled, r#"{"field":"Q","dim":1,"unit":["1/0"],"table":[]}"#).unwrap();
    let out = chnorm(&["norm", garbled.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("unit[0]"), "{}", out.stderr);

    assert_eq!(chnorm(&["charpoly", "m2", "--element", "1,2,3"]).code, EXIT_PARSE);
    assert_eq!(chnorm(&["charpoly", "m2", "--element", "1,x,3,4"]).code, EXIT_PARSE);
    assert_eq!(chnorm(&["verify", "m2", "--property", "mult", "--poly", "x1 +"]).code, EXIT_PARSE);

    let out = chnorm(&["verify", "m2", "--property", "mult", "--poly", "x1"]);
    assert_eq!(out.code, EXIT_UNVERIFIED);
    assert_eq!(value(&out, "holds"), "false");
    assert_ne!(value(&out, "witness"), "none");

    // span{1, e12} is closed; span{1, e12, e21} is not
    assert_eq!(chnorm(&["restrict", "m2", "--subspace", "1,0,0,1;0,1,0,0"]).code, EXIT_OK);
    assert_eq!(chnorm(&["restrict", "m2", "--subspace", "1,0,0,1;0,1,0,0;0,0,1,0"]).code, EXIT_USAGE);
}

#[test]
fn charpoly_and_verify() {
    let out = chnorm(&["charpoly", "m2", "--element", "1,2,3,4"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(value(&out, "char_poly"), "t^2 - 5*t - 2");
    let out = chnorm(&["charpoly", "dual-numbers", "--element", "-3,1/2"]);
    assert_eq!(value(&out, "char_poly"), "t^2 + 6*t + 9");
    assert_eq!(chnorm(&["verify", "quaternion", "--property", "ch"]).code, EXIT_OK);
    let out = chnorm(&["verify", "m3", "--property", "mult", "--mode", "randomized"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(value(&out, "trials"), "50");
}

#[test]
fn restriction_to_the_diagonal() {
    let out = chnorm(&["restrict", "m2", "--subspace", "1,0,0,0;0,0,0,1"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(value(&out, "restricted_norm"), "x1*x2");
    assert_eq!(value(&out, "restriction_equals_subalgebra_norm"), "yes");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_chnorm");
    let out = Command::new(bin).args(["minpoly", "dual-numbers"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(out.stdout).unwrap().contains("min_poly: t^2 - 2*x1*t + x1^2"));
    let out = Command::new(bin).args(["norm", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(!out.stderr.is_empty());
}
