use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hgauss_core::moddata::PremodularData;
use hgauss_core::{CycloNum, RootOfUnity};

fn hgauss(catalog: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgauss"))
        .arg("--catalog")
        .arg(catalog)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_is_idempotent_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    let args = ["build", "pointed", "--orders", "5", "--q", "zeta5^1", "--name", "Zp5"];
    assert_eq!(code(&hgauss(cat, &args)), 0);
    let first = fs::read(cat.join("Zp5.json")).unwrap();
    assert_eq!(code(&hgauss(cat, &args)), 0);
    assert_eq!(fs::read(cat.join("Zp5.json")).unwrap(), first);

    let text = String::from_utf8(first).unwrap();
    assert_eq!(PremodularData::from_json(&text).unwrap().to_json(), text);

    let index = fs::read_to_string(cat.join("index.json")).unwrap();
    assert_eq!(index.matches("\"file\"").count(), 1);
    assert!(index.contains("\"provenance\": \"pointed orders=[5] q=[z5]\""));
}

#[test]
fn invariants_table_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    hgauss(cat, &["build", "pointed", "--orders", "5", "--q", "zeta5", "--name", "Zp5"]);
    let out = hgauss(cat, &["invariants", "--category", "Zp5.json", "--n-range", "1..10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n = 2:"), "{text}");
    assert!(text.contains("n = 5: skipped"));

    let out = hgauss(cat, &["--json", "invariants", "--category", "Zp5.json", "--n-range", "1..10", "--allow-noncoprime"]);
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 10);
    assert_eq!(reports[0]["xi"]["kind"], "ExactRoot");
    // tau_5 = 5
    assert_eq!(reports[4]["tau"]["coeffs"], serde_json::json!([[0, "5", "1"]]));
}

#[test]
fn kac_peterson_galois_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    let out = hgauss(cat, &["build", "kac-peterson", "--type", "B2", "--level", "4", "--out", "B2_4.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("rank 15"));
    let out = hgauss(cat, &["verify", "--suite", "galois", "--category", "B2_4.json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = hgauss(cat, &["--json", "verify", "--suite", "galois", "--category", "B2_4.json", "--a", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["cases"][0]["lhs"].is_object());
}

#[test]
fn condensation_suite() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    let mg = cat.join("Z2xZ2_hyp.json");
    let out = hgauss(
        cat,
        &["build", "pointed", "--orders", "2,2", "--q", "1,1", "--b", "0,1,-1", "--save-metric", mg.to_str().unwrap()],
    );
    assert_eq!(code(&out), 0);
    let out = hgauss(cat, &["verify", "--suite", "condense", "--metric-group", "Z2xZ2_hyp.json", "--H", "(1,0)"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = hgauss(cat, &["condense", "--metric-group", "Z2xZ2_hyp.json", "--H", "(1,0)"]);
    assert!(stdout(&out).contains("|H^perp/H| = 1"));
    // (1,1) has q = -1
    let out = hgauss(cat, &["verify", "--suite", "condense", "--metric-group", "Z2xZ2_hyp.json", "--H", "(1,1)"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn counting_double_and_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    let out = hgauss(cat, &["build", "double", "--group", "Q8"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("tau_2 = 16"));
    let file = fs::read_to_string(cat.join("D_Q8.counting.json")).unwrap();
    assert!(file.contains("counting oracle only"));

    assert_eq!(code(&hgauss(cat, &["build", "fixture", "ds3"])), 0);
    let out = hgauss(cat, &["verify", "--suite", "anomaly", "--category", "D_S3.json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(code(&hgauss(cat, &["validate"])), 0);
}

#[test]
fn products_reverse_center_and_witt() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    hgauss(cat, &["build", "pointed", "--orders", "3", "--q", "zeta3", "--name", "A"]);
    hgauss(cat, &["build", "pointed", "--orders", "3", "--q", "zeta3^2", "--name", "B"]);
    assert_eq!(code(&hgauss(cat, &["rev", "A.json"])), 0);
    assert_eq!(code(&hgauss(cat, &["product", "A.json", "rev_A.json", "--name", "ZA"])), 0);
    assert_eq!(code(&hgauss(cat, &["verify", "--suite", "center", "--category", "A.json"])), 0);

    let out = hgauss(cat, &["witt-compare", "A.json", "B.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("distinguished at n = 1"), "{}", stdout(&out));
    let out = hgauss(cat, &["witt-compare", "A.json", "A.json"]);
    assert!(stdout(&out).contains("inconclusive"));

    let out = hgauss(cat, &["--json", "witt-signature", "ZA.json"]);
    let sig: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&String> = sig.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["1", "2"]);
    assert_eq!(sig["1"], serde_json::json!({"M": 1, "e": 0}));

    let out = hgauss(cat, &["fusion", "A.json"]);
    assert!(stdout(&out).contains("1 x 2 = 0"));
}

#[test]
fn reproduce_targets() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["ty-table", "wpt2-generators", "h27", "zp-gauss", "lens"] {
        let out = hgauss(dir.path(), &["reproduce", id]);
        assert_eq!(code(&out), 0, "{id}: {}", stdout(&out));
        assert!(!stdout(&out).contains("MISMATCH"));
    }
    let out = hgauss(dir.path(), &["reproduce", "ty-table"]);
    assert!(stdout(&out).contains("expected 8,48,8,64,8,48,8,64, computed 8,48,8,64,8,48,8,64"));
    assert_eq!(code(&hgauss(dir.path(), &["reproduce", "nope"])), 2);
}

#[test]
fn input_errors_and_failures() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path();
    assert_eq!(code(&hgauss(cat, &["invariants", "--category", "missing.json"])), 2);
    assert_eq!(code(&hgauss(cat, &["build", "pointed", "--orders", "3", "--q", "zeta5"])), 2);

    // sVec is premodular but not modular
    hgauss(cat, &["build", "pointed", "--orders", "2", "--q", "-1", "--name", "sVec"]);
    assert_eq!(code(&hgauss(cat, &["verify", "--suite", "galois", "--category", "sVec.json"])), 2);
    assert_eq!(code(&hgauss(cat, &["verify", "--suite", "first-second", "--category", "sVec.json"])), 0);

    // tampering breaks the checksum
    let path = cat.join("sVec.json");
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replace("\"sVec\"", "\"other\"")).unwrap();
    assert_eq!(code(&hgauss(cat, &["fusion", "sVec.json"])), 2);
    assert_eq!(code(&hgauss(cat, &["validate"])), 1);

    // well-formed data whose twists do not match its S-matrix
    let s = (0..3).map(|x| (0..3).map(|y| CycloNum::zeta_pow(3, 2 * x * y)).collect()).collect();
    let twists = vec![RootOfUnity::ONE, RootOfUnity::new(3, 1), RootOfUnity::ONE];
    let bad = PremodularData::new("bad", vec!["0".into(), "1".into(), "2".into()], vec![CycloNum::one(); 3], twists, Some(s));
    let bad_path = dir.path().join("outside.json");
    fs::write(&bad_path, bad.to_json()).unwrap();
    let out = hgauss(cat, &["verify", "--suite", "first-second", "--category", bad_path.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));

    let invalid = bad.to_json().replacen("\"M\": 1,\n      \"e\": 0", "\"M\": 3,\n      \"e\": 1", 1);
    fs::write(&bad_path, invalid).unwrap();
    assert_eq!(code(&hgauss(cat, &["validate", bad_path.to_str().unwrap()])), 1);
}
