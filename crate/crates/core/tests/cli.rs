use std::path::PathBuf;
use std::process::{Command, Output};

use geninv::cli::parse_ext_function;
use geninv::scalar::int;
use geninv::{fixtures, invert_minus, ExtReal};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn geninv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geninv")).args(args).env_remove("GENINV_SEED").output().expect("binary runs")
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate() {
    let o = geninv(&["validate", &path("f2.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"value\": \"1\""));

    let o = geninv(&["validate", &path("decreasing.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MonotonicityViolation"));
    assert!(stderr(&o).contains("segment 1"));

    let o = geninv(&["validate", &path("malformed.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"Parse\""));

    let o = geninv(&["validate", &path("missing.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"Io\""));
}

#[test]
fn invert() {
    let o = geninv(&["invert", &path("identity.json"), "--plus"]);
    assert_eq!(o.status.code(), Some(0));
    let inv = parse_ext_function(&stdout(&o)).unwrap();
    assert!(inv.canonical_equal(&fixtures::identity().to_ext()));

    let o = geninv(&["invert", &path("f3.json"), "--plus"]);
    let inv = parse_ext_function(&stdout(&o)).unwrap();
    assert_eq!(inv.eval(&int(-1)), ExtReal::Fin(int(-1)));
    assert_eq!(inv.eval(&int(0)), ExtReal::Fin(int(1)));
    assert_eq!(inv.eval(&int(2)), ExtReal::Fin(int(3)));

    let o = geninv(&["invert", &path("f2.json"), "--minus"]);
    let inv = parse_ext_function(&stdout(&o)).unwrap();
    assert!(inv.canonical_equal(&invert_minus(&fixtures::f2())));
    assert_eq!(inv.eval(&int(0)), ExtReal::NegInf);
    assert_eq!(inv.eval(&int(1)), ExtReal::Fin(int(0)));
    assert_eq!(inv.eval(&int(2)), ExtReal::PosInf);

    assert_eq!(geninv(&["invert", &path("f2.json")]).status.code(), Some(2));
    assert_eq!(geninv(&["invert", &path("f2.json"), "--plus", "--minus"]).status.code(), Some(2));
}

#[test]
fn eval() {
    let run = |args: &[&str]| stdout(&geninv(args)).trim().to_string();
    assert_eq!(run(&["eval", &path("f2.json"), "--at", "0"]), "1");
    assert_eq!(run(&["eval", &path("f2.json"), "--at", "0", "--left"]), "0");
    assert_eq!(run(&["eval", &path("f2.json"), "--at", "0", "--right"]), "1");
    assert_eq!(run(&["eval", &path("f3.json"), "--at", "1/2"]), "0");
    assert_eq!(run(&["eval", &path("f3.json"), "--at", "-3/2"]), "-3/2");
    assert_eq!(run(&["eval", &path("f4.json"), "--at", "0.25"]), "5/4");
}

#[test]
fn compose() {
    let o = geninv(&["compose", &path("f4.json"), "--check-lemma4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["clean"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);

    let o = geninv(&["compose", &path("f5.json"), "--check-lemma4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for r in v["reports"].as_array().unwrap() {
        assert!(r["mismatches"].as_array().unwrap().is_empty());
        assert!(!r["excluded"].as_array().unwrap().is_empty());
    }

    let o = geninv(&["compose", &path("f5.json"), "--check-lemma5", "right"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotOneSidedContinuous"));

    let o = geninv(&["compose", &path("f2.json"), "--check-lemma5", "right"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check() {
    let o = geninv(&["check", "--seed", "42", "--cases", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["results"].as_array().unwrap().len(), 35);

    let o = geninv(&["check", "--only", "L1.v", "--cases", "20"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(v["results"][0]["id"], "L1.v");
    assert_eq!(v["seed"], 42);

    let o = geninv(&["check", "--only", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("UnknownProperty"));
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_geninv"))
        .args(["check", "--only", "L1.ii", "--cases", "3"])
        .env("GENINV_SEED", "9")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 9);
}

#[test]
fn sampling_commands() {
    let o = geninv(&["sample", &path("bernoulli.json"), "--n", "4", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l == "0" || l == "1"));
    assert_eq!(stdout(&geninv(&["sample", &path("bernoulli.json"), "--n", "4", "--seed", "7"])), stdout(&o));

    let o = geninv(&["sample", &path("identity.json"), "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("BadLimits"));

    let o = geninv(&["ecdf", &path("data01.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let f = geninv::cli::parse_function(&stdout(&o)).unwrap();
    assert!(f.canonical_equal(&fixtures::bernoulli_half()));

    let o = geninv(&["ks", &path("f2.json"), &path("f2.json")]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = geninv(&["ks", &path("f2.json"), &path("bernoulli.json")]);
    assert_eq!(stdout(&o).trim(), "1/2");
}

#[test]
fn plotdata() {
    let o = geninv(&["plotdata", &path("identity.json"), "--xmin", "0", "--xmax", "1", "--points", "3"]);
    let rows: Vec<Vec<f64>> = stdout(&o).lines().map(|l| l.split('\t').map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.len() == 4 && r.iter().all(|v| *v == r[0])));

    let o = geninv(&["plotdata", &path("f2.json"), "--xmin", "-1", "--xmax", "1", "--points", "4"]);
    assert!(stdout(&o).lines().any(|l| l == "0\t1\t0\t1"));

    let o = geninv(&["plotdata", &path("f2.json"), "--xmin", "1", "--xmax", "0", "--points", "3"]);
    assert_eq!(o.status.code(), Some(2));
}
