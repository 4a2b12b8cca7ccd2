use std::path::Path;
use std::process::Command;

use crossed_core::io::cli::{run, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use crossed_core::io::{parse, serialize, Object};

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("crossed").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn emit(dir: &Path, key: &str) -> String {
    let path = dir.join(format!("{key}.json"));
    let path = path.to_str().unwrap().to_string();
    assert_eq!(cli(&["corpus", "--emit", key, "--output", &path]).0, EXIT_OK);
    path
}

#[test]
fn emitted_instances_validate() {
    let dir = tempfile::tempdir().unwrap();
    for key in ["1", "2", "3", "4", "5", "6"] {
        let path = emit(dir.path(), key);
        let (code, out, err) = cli(&["validate", "--input", &path]);
        assert_eq!(code, EXIT_OK, "instance {key}: {out}{err}");
    }
}

#[test]
fn twist_then_verify_iso() {
    let dir = tempfile::tempdir().unwrap();
    let input = emit(dir.path(), "gauge_c2");
    let result = dir.path().join("result.json");
    let result = result.to_str().unwrap();
    let (code, out, _) = cli(&["twist", "--input", &input, "--output", result, "--report", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains(r#"{"detail":"μ_(R,σ)∘(φ⊗φ) = φ∘μ_(R',σ')","failures":0,"law_name":"phi_mult","passed":true}"#),
        "{out}"
    );
    let (code, out, _) = cli(&["verify-iso", "--input", result]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn mutated_instance_fails_with_law_name() {
    let dir = tempfile::tempdir().unwrap();
    let input = emit(dir.path(), "smash_c2_sign");
    let mut doc = parse(&std::fs::read_to_string(&input).unwrap()).unwrap();
    let Some(Object::CrossedData(c)) = doc.objects.get("crossed").cloned() else {
        panic!()
    };
    // R(1_V ⊗ g) must be g ⊗ 1_V; move weight to 1_A ⊗ 1_V
    let field = c.a().field();
    let r = c.r().with_entry(0, 1, field.one());
    doc.objects.insert(
        "crossed".into(),
        Object::CrossedData(c.with_maps(r, c.sigma().clone()).unwrap()),
    );
    std::fs::write(&input, serialize(&doc)).unwrap();

    let (code, out, _) = cli(&["validate", "--input", &input, "--object", "crossed", "--report", "json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(
        out.contains(r#""first_counterexample":[1],"law_name":"brz1","passed":false"#),
        "{out}"
    );

    let (code, _, err) = cli(&["twist", "--input", &input]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(err.contains("brz1"), "{err}");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    let garbage = garbage.to_str().unwrap();
    let valid = emit(dir.path(), "1");
    let noncanonical = dir.path().join("noncanonical.json");
    std::fs::write(
        &noncanonical,
        std::fs::read_to_string(&valid)
            .unwrap()
            .replacen("\"1/1\"", "\"2/2\"", 1),
    )
    .unwrap();
    let noncanonical = noncanonical.to_str().unwrap();

    for args in [
        vec!["frobnicate"],
        vec!["validate", "--bogus"],
        vec!["validate"],
        vec!["validate", "--input", garbage],
        vec!["validate", "--input", noncanonical],
        vec!["validate", "--input", "/nonexistent/file.json"],
        vec!["validate", "--input", &valid, "--object", "missing"],
        vec!["build", "--input", &valid, "--object", "pair"],
        vec!["verify-iso", "--input", &valid],
        vec!["corpus", "--emit", "99"],
        vec!["corpus", "--field", "gf:4"],
        vec!["corpus", "--field", "gf:2"],
    ] {
        let (code, _, err) = cli(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}: {err}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn build_emits_product_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let input = emit(dir.path(), "1");
    let (code, out, err) = cli(&["build", "--input", &input]);
    assert_eq!(code, EXIT_OK, "{err}");
    let doc = parse(&out).unwrap();
    let Some(Object::Algebra(product)) = doc.get("product") else {
        panic!("{out}")
    };
    assert_eq!(product.dim(), 4);
    assert!(err.contains("brz5"));
}

#[test]
fn field_flag_reduces_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = emit(dir.path(), "ttp_s3_sign");
    let (code, out, _) = cli(&["validate", "--input", &input, "--field", "gf:5"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("rel1"));
}

#[test]
fn corpus_listing_is_stable() {
    let (code, first, _) = cli(&["corpus", "--list"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first.lines().count(), 6);
    assert!(first.starts_with("1 flip_c2_c2 2x2 "));
    assert_eq!(cli(&["corpus"]).1, first);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_crossed");
    let status = Command::new(bin).args(["corpus", "--list"]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_OK));
    let status = Command::new(bin).arg("nonsense").output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_INPUT));
}
