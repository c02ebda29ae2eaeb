use std::process::Command;

use serde_json::Value;

fn maxcurve(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_maxcurve")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, stderr)
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn example16_report() {
    let (code, v, _) = maxcurve(&["example16"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "example16");
    let r = &v["results"];
    assert_eq!(r["count"], 118);
    assert_eq!(r["deg_r"], 164);
    assert_eq!(r["nonrational_dw_points"], 40);
    assert_eq!(r["holds"], true);
}

#[test]
fn certify_maximal_artin_schreier() {
    let (code, v, _) = maxcurve(&["certify-maximal", "--family", "artin_schreier", "--q", "5", "--m", "3"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!((r["count"].as_u64(), r["expected"].as_u64(), &r["maximal"]), (Some(66), Some(66), &Value::Bool(true)));
    assert_eq!(v["curve"]["family"], "artin_schreier");
}

#[test]
fn certify_by_power_sums_suzuki() {
    let (code, v, _) = maxcurve(&["certify-maximal", "--family", "suzuki", "--s", "0", "--power-sums"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["predicted_count"], 25);
}

#[test]
fn semigroup_symmetric() {
    let (code, v, _) = maxcurve(&["semigroup", "--gens", "3,5", "--check", "symmetric"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["gaps"], serde_json::json!([1, 2, 4, 7]));
    assert_eq!(r["genus"], 4);
    assert_eq!(r["symmetric"], true);
    // <3,4,5> has gaps {1, 2} and Frobenius number 2, not symmetric
    let (code, v, _) = maxcurve(&["semigroup", "--gens", "3,4,5", "--check", "symmetric"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["symmetric"], false);
}

#[test]
fn failed_checks_exit_one() {
    // genus above q(q-1)/2 violates the bounds
    let (code, v, _) = maxcurve(&["bounds", "--q", "5", "--genus", "11", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["all_hold"], false);
    let (code, v, _) = maxcurve(&["bounds", "--q", "5", "--genus", "4", "--n", "2", "--m1", "3", "--count", "66"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["all_hold"], true);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = maxcurve(&["certify-maximal", "--family", "artin_schreier", "--q", "5", "--m", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("must divide"));
    let (code, _, _) = maxcurve(&["count-points"]);
    assert_eq!(code, 2);
    let (code, _, _) = maxcurve(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = maxcurve(&["normal-form", "--q", "5", "--m", "3", "--a1", "0", "--aq", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn orders_at_points() {
    let base = ["orders", "--family", "hyperelliptic_example", "--d", "10"];
    let (code, v, _) = maxcurve(&base);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["generic"]["orders"], serde_json::json!([0, 1, 2, 3, 4, 5, 6, 7, 9]));
    let (code, v, _) = maxcurve(&[&base[..], &["--infinity"]].concat());
    assert_eq!(code, 0);
    assert_eq!(v["results"]["at_point"]["orders"], serde_json::json!([0, 1, 2, 3, 4, 5, 6, 8, 10]));
    assert_eq!(v["results"]["v_r"], 2);
    assert_eq!(v["results"]["field"]["size"], 81);
}

#[test]
fn classification_and_pipeline() {
    let (code, v, _) = maxcurve(&["classify-points", "--family", "artin_schreier", "--q", "5", "--m", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["types"]["t1"], 60);
    assert_eq!(v["results"]["types"]["t2"], 6);
    assert_eq!(v["results"]["star_star"]["n"], 2);
    let (code, v, _) = maxcurve(&["theorem31", "--q", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["curve"]["certificate"]["count"], 176);
    assert_eq!(v["results"]["curve"]["genus"], 9);
}

#[test]
fn normal_form_and_frobenius_checks() {
    let (code, v, _) = maxcurve(&["normal-form", "--q", "5", "--m", "3", "--a1", "1", "--aq", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["witness"]["substitution_identity"], true);
    let (code, v, _) = maxcurve(&["verify-cor12", "--family", "hermitian", "--q", "3", "--per-degree", "12"]);
    assert_eq!(code, 0);
    assert!(v["results"]["verified"].as_u64().unwrap() >= 20);
}

#[test]
fn spec_file_input() {
    let dir = std::env::temp_dir().join(format!("maxcurve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.json");
    std::fs::write(&path, r#"{"family": "hermitian", "q": 3}"#).unwrap();
    let (code, v, _) = maxcurve(&["count-points", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["count"], 28);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn field_budget_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_maxcurve"))
        .args(["count-points", "--family", "hermitian", "--q", "9"])
        .env("MAXCURVE_FIELD_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let args = ["sv-divisors", "--family", "artin_schreier", "--q", "5", "--m", "3", "--d", "6"];
    let (c1, a, _) = maxcurve(&[&["--threads", "1"], &args[..]].concat());
    let (c2, b, _) = maxcurve(&[&["--threads", "4"], &args[..]].concat());
    let (c3, c, _) = maxcurve(&args);
    assert_eq!((c1, c2, c3), (0, 0, 0));
    let (a, b, c) = (without_timing(a), without_timing(b), without_timing(c));
    assert_eq!(a, b);
    assert_eq!(b, c);
    assert_eq!(a["results"]["deg_r_formula"], 72);
}

#[test]
fn lpoly_report() {
    let (code, v, _) = maxcurve(&["lpoly", "--family", "hermitian", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["coeffs"], serde_json::json!([1, 4, 4]));
    assert_eq!(v["results"]["maximal_shape"], true);
}
