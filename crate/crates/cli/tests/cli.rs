use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("curvestab-{}-{name}", std::process::id()))
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }

    fn error(&self) -> Value {
        serde_json::from_str(self.stderr.trim()).unwrap_or_else(|e| panic!("{e}: {}", self.stderr))
    }
}

fn curvestab(args: &[&str]) -> Run {
    curvestab_env(args, &[])
}

fn curvestab_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_curvestab"));
    cmd.args(args).env_remove("CURVESTAB_MAX_R");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn check_f2() {
    let f2 = fixture("f2.json");
    let r = curvestab(&["check", "--curve", &f2, "--polarization", "C1=10,C2=10"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["status"], "Stable");

    let r = curvestab(&["check", "--curve", &f2, "--polarization", "C1=11,C2=9"]);
    assert_eq!(r.code, 2);
    let v = r.json();
    assert_eq!(v["status"], "Unstable");
    let w = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["subcurve"] == serde_json::json!(["C2"]))
        .expect("C2 witness");
    assert_eq!(w["value"], "9");
    assert_eq!(w["lower"], "19/2");
    assert_eq!(w["kind"], "violated");
}

#[test]
fn check_f4_both_criteria() {
    let r = curvestab(&[
        "check",
        "--curve",
        &fixture("f4.json"),
        "--polarization",
        "C1=11,P=9",
        "--criterion",
        "both",
    ]);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!(v["status"], "StrictlySemistable");
    assert_eq!(v["h0"]["status"], "StrictlySemistable");
    assert_eq!(v["equivalence"]["disagreements"], serde_json::json!([]));
}

#[test]
fn h0_outside_regime_is_a_precondition_error() {
    let r = curvestab(&[
        "check",
        "--curve",
        &fixture("f2.json"),
        "--polarization",
        "C1=2,C2=2",
        "--criterion",
        "h0",
    ]);
    assert_eq!(r.code, 7);
    assert!(r.error()["message"].as_str().unwrap().contains("degree too small"));
}

#[test]
fn k_check_f2() {
    let f2 = fixture("f2.json");
    let r = curvestab(&["k-check", "--curve", &f2, "--polarization", "C1=11,C2=9"]);
    assert_eq!(r.code, 2);
    let v = r.json();
    assert_eq!(v["verdict"], "NotKStable");
    assert_eq!(v["witness"]["subcurve"], serde_json::json!(["C2"]));
    assert_eq!(v["witness"]["value"], "1/40");

    let r = curvestab(&["k-check", "--curve", &f2, "--polarization", "C1=10,C2=10"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["df"][1]["value"], "-1/40");
}

#[test]
fn k_check_rejects_marks() {
    let r = curvestab(&["k-check", "--curve", &fixture("f4.json"), "--polarization", "C1=11,P=9"]);
    assert_eq!(r.code, 7);
}

#[test]
fn newton_examples() {
    let r = curvestab(&["newton", "--gamma", "0,1;1,0", "--width", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["area"], "1/2");

    let r = curvestab(&["newton", "--gamma", "0,2;1,1;3,0", "--oracle-k", "3"]);
    let v = r.json();
    assert_eq!(v["width"], 3);
    assert_eq!(v["area"], "5/2");
    assert_eq!(v["oracle"]["second_difference"], 5);

    let r = curvestab(&["newton", "--gamma", "0,1;1,0", "--oracle-k", "2"]);
    assert_eq!(r.json()["oracle"]["count"], 6);

    let r = curvestab(&["newton", "--gamma", "0,x"]);
    assert_eq!(r.code, 8);
}

#[test]
fn twist_examples() {
    let r = curvestab(&["twist", "--curve", &fixture("f2.json"), "--vector", "C1=13,C2=7"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["twist"], serde_json::json!([10, 10]));
    assert_eq!(v["coefficients"], serde_json::json!([3, 0]));

    let r = curvestab(&["twist", "--curve", &fixture("banana.json"), "--vector", "C1=25,C2=-5"]);
    let v = r.json();
    assert_eq!(v["twist"], serde_json::json!([10, 10]));
    assert_eq!(v["coefficients"], serde_json::json!([5, 0]));
}

#[test]
fn two_weight_datum_feeds_chow_weight() {
    let f4 = fixture("f4.json");
    let datum = temp("f4-datum.json");
    let r = curvestab(&[
        "two-weight",
        "--curve",
        &f4,
        "--polarization",
        "C1=11,P=9",
        "--subcurve",
        "P",
        "--datum-out",
        datum.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!((&v["omega"], &v["mu_a"], &v["omega_a"]), (&"1".into(), &"-1".into(), &"0".into()));
    assert_eq!(v["agrees"], true);

    let r = curvestab(&[
        "chow-weight",
        "--curve",
        &f4,
        "--polarization",
        "C1=11,P=9",
        "--ops",
        datum.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["e"], "19");

    let r = curvestab(&[
        "bounds",
        "--curve",
        &f4,
        "--polarization",
        "C1=11,P=9",
        "--ops",
        datum.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["staircase"]["ok"], true);
    assert_eq!(v["trapezoid_report"].as_array().unwrap().len(), 3);
    std::fs::remove_file(datum).ok();
}

#[test]
fn two_weight_f2_closed_form() {
    let r = curvestab(&[
        "two-weight",
        "--curve",
        &fixture("f2.json"),
        "--polarization",
        "C1=10,C2=10",
        "--subcurve",
        "C2",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["closed_form"], "1/19");
}

#[test]
fn bounds_without_datum() {
    let r = curvestab(&["bounds", "--curve", &fixture("f2.json"), "--polarization", "C1=10,C2=10"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert!(v["degree_bound"]["C"].is_string());
    assert!(v.get("E_alpha").is_none());
}

#[test]
fn classify_and_stabilize_chain() {
    let chain = fixture("chain.json");
    let r = curvestab(&["classify", "--curve", &chain]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["exceptional"], serde_json::json!(["E"]));

    let r = curvestab(&["stabilize", "--curve", &chain]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["nodes"], serde_json::json!([["C1", "C2"]]));
    assert_eq!(v["marks"][0]["weight"], "1/2");

    let out = temp("stable.json");
    std::fs::write(&out, &r.stdout).unwrap();
    let again = curvestab(&["stabilize", "--curve", out.to_str().unwrap()]);
    assert_eq!(again.stdout, r.stdout);
    std::fs::remove_file(out).ok();
}

#[test]
fn error_codes() {
    let r = curvestab(&["classify", "--curve", &fixture("zero_denominator.json")]);
    assert_eq!(r.code, 3);
    let e = r.error();
    assert!(e["message"].as_str().unwrap().contains("zero denominator"));
    assert!(e["message"].as_str().unwrap().starts_with("/marks/0/weight"));

    let r = curvestab(&["classify", "--curve", &fixture("unknown_node.json")]);
    assert_eq!(r.code, 4);
    assert!(r.error()["message"].as_str().unwrap().contains("unknown component"));

    let r = curvestab(&["check", "--curve", &fixture("f2.json"), "--polarization", "C1=10,C9=10"]);
    assert_eq!(r.code, 4);

    let r = curvestab(&["classify", "--curve", &fixture("bad_genus.json")]);
    assert_eq!(r.code, 5);
    assert!(r.error()["message"].as_str().unwrap().starts_with("/components/0/genus"));

    let r = curvestab(&["classify", "--curve", &fixture("missing.json")]);
    assert_eq!(r.code, 6);

    let r = curvestab(&["check", "--curve", &fixture("f2.json")]);
    assert_eq!(r.code, 8);
}

#[test]
fn enumeration_cap_from_env() {
    let args = ["check", "--curve", &fixture("f2.json"), "--polarization", "C1=10,C2=10"];
    let r = curvestab_env(&args, &[("CURVESTAB_MAX_R", "1")]);
    assert_eq!(r.code, 7);
    assert!(r.error()["message"].as_str().unwrap().contains("cap"));
    let r = curvestab_env(&args, &[("CURVESTAB_MAX_R", "1000")]);
    assert_eq!(r.code, 0);
    let r = curvestab_env(&args, &[("CURVESTAB_MAX_R", "many")]);
    assert_eq!(r.code, 8);
}

#[test]
fn float_rendering_and_output_file() {
    let out = temp("newton.json");
    let r = curvestab(&[
        "newton",
        "--gamma",
        "0,1;1,0",
        "--width",
        "1",
        "--float",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["area"]["exact"], "1/2");
    assert_eq!(v["area"]["approx"], 0.5);
    std::fs::remove_file(out).ok();
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "--curve", &fixture("f4.json"), "--polarization", "C1=11,P=9", "--criterion", "both"];
    assert_eq!(curvestab(&args).stdout, curvestab(&args).stdout);
}
