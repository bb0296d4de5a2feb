use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_affine-moduli");

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("AFFINE_MODULI_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

// Structural equality, numbers to 1e-12 so last-ulp libm differences don't matter.
fn assert_json_close(got: &Value, want: &Value, path: &str) {
    match (got, want) {
        (Value::Number(a), Value::Number(b)) => {
            let (a, b) = (a.as_f64().unwrap(), b.as_f64().unwrap());
            assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()), "{path}: {a} vs {b}");
        }
        (Value::Array(a), Value::Array(b)) => {
            assert_eq!(a.len(), b.len(), "{path}: length");
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                assert_json_close(x, y, &format!("{path}[{i}]"));
            }
        }
        (Value::Object(a), Value::Object(b)) => {
            let ka: Vec<_> = a.keys().collect();
            let kb: Vec<_> = b.keys().collect();
            assert_eq!(ka, kb, "{path}: keys");
            for (k, v) in b {
                assert_json_close(&a[k], v, &format!("{path}.{k}"));
            }
        }
        _ => assert_eq!(got, want, "{path}"),
    }
}

fn check_classify_golden(input: &str, report: &str) {
    let out = run(&["classify", golden(input).to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let want: Value = serde_json::from_str(&fs::read_to_string(golden(report)).unwrap()).unwrap();
    assert_json_close(&stdout_json(&out), &want, "$");
}

#[test]
fn classify_gamma0_matches_golden() {
    check_classify_golden("gamma0.json", "gamma0_report.json");
}

#[test]
fn classify_zero_matches_golden() {
    check_classify_golden("zero.json", "zero_report.json");
}

#[test]
fn classify_fixed_family_matches_golden() {
    check_classify_golden("fixed_1112.json", "fixed_1112_report.json");
}

fn write_doc(dir: &Path, name: &str, slots: [f64; 8]) -> PathBuf {
    let keys = ["G11_1", "G11_2", "G12_1", "G12_2", "G21_1", "G21_2", "G22_1", "G22_2"];
    let gamma: serde_json::Map<String, Value> =
        keys.iter().zip(slots).map(|(k, v)| (k.to_string(), v.into())).collect();
    let path = dir.join(name);
    fs::write(&path, serde_json::json!({ "label": name, "gamma": gamma }).to_string()).unwrap();
    path
}

#[test]
fn classify_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{\"gamma\": {\"G11_1\": 1").unwrap();
    let missing_slot = dir.path().join("missing.json");
    fs::write(&missing_slot, r#"{"gamma":{"G11_1":1}}"#).unwrap();
    let overflow = dir.path().join("overflow.json");
    fs::write(
        &overflow,
        r#"{"G11_1":1e999,"G11_2":0,"G12_1":0,"G12_2":1,"G21_1":0,"G21_2":1,"G22_1":1,"G22_2":0}"#,
    )
    .unwrap();
    let absent = dir.path().join("does-not-exist.json");
    for p in [&broken, &missing_slot, &overflow, &absent] {
        let out = run(&["classify", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{}", p.display());
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        vec!["no-such-command"],
        vec!["verify", "--suite", "bogus"],
        vec!["verify", "--samples", "-3"],
        vec!["--tol", "-1", "verify", "--samples", "1"],
        vec!["figure", "--bounds", "1,2,3"],
        vec!["figure", "--bounds", "5,1,0,1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

// Γ₀ moved by a fixed orientation-preserving matrix.
const GAMMA0: [f64; 8] = [-1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0];

fn moved_gamma0() -> [f64; 8] {
    let g = affine_moduli::GroupElement::new([[2.0, 0.5], [-0.25, 1.0]]).unwrap();
    let gamma = affine_moduli::Christoffel::from_array(GAMMA0).unwrap();
    affine_moduli::act(&g, &gamma).to_array()
}

#[test]
fn orbit_check_finds_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_doc(dir.path(), "a.json", GAMMA0);
    let b = write_doc(dir.path(), "b.json", moved_gamma0());
    let out = run(&["orbit-check", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], Value::Bool(true));
    assert_eq!(v["status"], "equivalent");
    assert!(v["residual"].as_f64().unwrap() <= 1e-8);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn orbit_check_signature_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_doc(dir.path(), "a.json", GAMMA0);
    // (a,b,c,d) = (1,1,1,2): positive definite, Γ₀ is negative definite
    let b = write_doc(dir.path(), "b.json", [0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 2.0]);
    let out = run(&["orbit-check", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], Value::Bool(false));
    assert_eq!(v["status"], "signature-mismatch");
}

#[test]
fn orbit_check_invariant_separation() {
    let dir = tempfile::tempdir().unwrap();
    // both positive definite, different (ψ³, Ψ³)
    let a = write_doc(dir.path(), "a.json", [0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 2.0]);
    let b = write_doc(dir.path(), "b.json", [0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 3.0]);
    let out = run(&["orbit-check", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], Value::Bool(false));
    assert_eq!(v["status"], "invariant-separation");

    let out = run(&["orbit-check", "--no-invariant-screen", a.to_str().unwrap(), b.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_ne!(v["equivalent"], Value::Bool(true));
}

#[test]
fn figure_writes_three_csvs() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = format!("{}/", dir.path().display());
    let out = run(&[
        "figure", "--resolution", "16", "--curve-samples", "101", "--out-prefix", &prefix,
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let plus = fs::read_to_string(dir.path().join("sigma_plus.csv")).unwrap();
    let minus = fs::read_to_string(dir.path().join("sigma_minus.csv")).unwrap();
    let regions = fs::read_to_string(dir.path().join("regions.csv")).unwrap();
    assert!(plus.starts_with("t,x,y\n"));
    assert!(minus.starts_with("t,x,y\n"));
    assert!(regions.starts_with("x,y,label\n"));
    assert_eq!(plus.lines().count(), 102);
    assert_eq!(regions.lines().count(), 1 + 17 * 17);

    let cusp = minus
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse::<f64>().unwrap()).collect::<Vec<_>>())
        .find(|r| (r[1] + 2.0).abs() < 1e-12 && (r[2] - 1.0).abs() < 1e-12);
    assert!(cusp.is_some(), "σ₋ passes through the cusp (-2, 1)");

    for label in ["D20", "D11", "D02"] {
        assert!(regions.lines().any(|l| l.ends_with(&format!(",{label}"))), "{label} missing");
    }
}

#[test]
fn figure_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for run_idx in 0..2 {
        let prefix = dir.path().join(format!("run{run_idx}_")).display().to_string();
        let out = run(&[
            "figure", "--bounds", "-4,2,0,3", "--resolution", "12", "--curve-samples", "51",
            "--out-prefix", &prefix,
        ]);
        assert!(out.status.success());
        let files: Vec<Vec<u8>> = ["sigma_plus.csv", "sigma_minus.csv", "regions.csv"]
            .iter()
            .map(|n| fs::read(format!("{prefix}{n}")).unwrap())
            .collect();
        bodies.push(files);
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn figure_unwritable_prefix_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("no/such/dir/").display().to_string();
    let out = run(&["figure", "--resolution", "2", "--curve-samples", "3", "--out-prefix", &prefix]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--samples", "40"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let table = String::from_utf8_lossy(&out.stdout);
    assert!(table.contains("fixed.family-ricci-agreement"));
    assert!(!table.contains("FAIL"));
}

#[test]
fn verify_zero_samples_warns() {
    let out = run(&["verify", "--suite", "core", "--samples", "0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn verify_seed_env_overrides_flag() {
    let with_env = |env: Option<&str>, seed: &str| {
        let mut cmd = Command::new(BIN);
        cmd.args(["verify", "--suite", "invariants", "--samples", "20", "--seed", seed]);
        match env {
            Some(v) => cmd.env("AFFINE_MODULI_SEED", v),
            None => cmd.env_remove("AFFINE_MODULI_SEED"),
        };
        cmd.output().unwrap()
    };
    let a = with_env(Some("7"), "1");
    let b = with_env(None, "7");
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);

    let bad = with_env(Some("not-a-number"), "1");
    assert_eq!(bad.status.code(), Some(2));
}
