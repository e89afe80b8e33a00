use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn pocs(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = Command::new(env!("CARGO_BIN_EXE_pocs")).args(&full).output().unwrap();
    let code = out.status.code().unwrap();
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, report)
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    let (code, r) = pocs(&["validate", "path:3"]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["archimedean"], true);
    assert_eq!(r["outcome"], "pass");

    let good = scratch("good.json", r#"{"elements":["1","2"],"op":[[1,1],[1,1]],"leq":[[true,true],[false,true]]}"#);
    assert_eq!(pocs(&["validate", &good]).0, 0);

    let noncomm = scratch("noncomm.json", r#"{"elements":["a","b"],"op":[[0,1],[0,1]],"leq":[[true,true],[false,true]]}"#);
    let (code, r) = pocs(&["validate", &noncomm]);
    assert_eq!(code, 1);
    let axioms: Vec<&str> = r["payload"]["validation"]["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["axiom"].as_str().unwrap())
        .collect();
    assert!(axioms.contains(&"commutativity"));

    let truncated = scratch("truncated.json", r#"{"elements":["a""#);
    let (code, r) = pocs(&["validate", &truncated]);
    assert_eq!(code, 2);
    assert_eq!(r["outcome"], "error");
}

#[test]
fn bound_command() {
    assert_eq!(pocs(&["bound", "path:4"]).1["payload"]["bound"], 4);
    assert_eq!(pocs(&["bound", "product:3,2"]).1["payload"]["bound"], 3);
    let (code, r) = pocs(&["bound", "path:4", "--max-len", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["exceeds"], true);
    let invalid = scratch("invalid.json", r#"{"elements":["a","b"],"op":[[0,1],[1,1]],"leq":[[true,false],[false,true]]}"#);
    assert_eq!(pocs(&["bound", &invalid]).0, 1);
    assert_eq!(pocs(&["bound", "path:x"]).0, 2);
}

#[test]
fn check_command() {
    let (code, r) = pocs(&["check", "path:3", "--suite", "sir", "--trials", "1000", "--seed", "7"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["seed"], 7);
    let outcome = &r["payload"]["outcomes"][0];
    for key in ["axiom", "passed", "trials", "seed", "counterexample"] {
        assert!(outcome.get(key).is_some(), "missing {key}");
    }
    assert_eq!(pocs(&["check", "product:3,2", "--suite", "derived", "--trials", "300"]).0, 0);
    assert_eq!(pocs(&["check", "path:3", "--relation", "lowered-infimum", "--trials", "50"]).0, 1);
    let (code, r) = pocs(&["check", "path:1", "--suite", "metric-like", "--trials", "20"]);
    assert_eq!(code, 1);
    assert_eq!(r["payload"]["outcomes"][1]["axiom"], "dependent_pair");
    assert_eq!(r["payload"]["outcomes"][1]["passed"], false);
}

#[test]
fn support_and_amalgamation() {
    let (code, r) = pocs(&["support", "product:3,2", "--k", "1"]);
    assert_eq!(code, 1);
    assert_eq!(r["payload"]["witness"]["base"].as_array().unwrap().len(), 2);
    assert_eq!(pocs(&["support", "path:3", "--k", "1"]).0, 0);
    assert_eq!(pocs(&["amalgamation", "path:3", "--base", "3"]).0, 0);
    assert_eq!(pocs(&["amalgamation", "path:3", "--base", "4"]).0, 2);
}

#[test]
fn spaces_from_files() {
    let space = scratch(
        "example.json",
        r#"{"semigroup":"product:3,2","vertices":["a","b","c1","c2"],
            "d":[[null,"(2,2)","(1,1)","(1,1)"],
                 ["(2,2)",null,"(1,2)","(2,1)"],
                 ["(1,1)","(1,2)",null,null],
                 ["(1,1)","(2,1)",null,null]]}"#,
    );
    let (code, r) = pocs(&["complete", &space]);
    assert_eq!(code, 0, "{r}");
    let complete = scratch("complete.json", &r["payload"]["space"].to_string());
    let (_, r) = pocs(&["indep", &complete, "--a", "a", "--c", "c1,c2", "--b", "b"]);
    assert_eq!(r["payload"]["independent"], true);
    let (_, r) = pocs(&["indep", &complete, "--a", "a", "--c", "c1", "--b", "b"]);
    assert_eq!(r["payload"]["independent"], false);
    let (code, r) = pocs(&["support", "--space", &complete, "--a", "a", "--b", "b", "--base", "c1,c2", "--k", "1"]);
    assert_eq!(code, 1);
    assert_eq!(r["payload"]["supports"].as_array().unwrap().len(), 0);
    assert_eq!(pocs(&["indep", &complete, "--a", "zz", "--b", "b"]).0, 2);

    let broken = scratch(
        "broken.json",
        r#"{"semigroup":"path:3","vertices":["x","y","z"],"d":[[null,"1","3"],["1",null,"1"],["3","1",null]]}"#,
    );
    assert_eq!(pocs(&["complete", &broken]).0, 1);

    let tri = scratch(
        "tri.json",
        r#"{"semigroup":"path:3","vertices":["x","y","z"],"d":[[null,"1","1"],["1",null,"1"],["1","1",null]]}"#,
    );
    let (code, r) = pocs(&["forbidden", &tri, "--k1", "2", "--delta", "3"]);
    assert_eq!(code, 1);
    assert_eq!(r["payload"]["forbidden"].as_array().unwrap().len(), 1);
}

#[test]
fn enumerate_geodesic_almost_free() {
    let (code, a) = pocs(&["enumerate", "--max-size", "2"]);
    assert_eq!(code, 0);
    assert_eq!(a["payload"]["count"], pocs(&["enumerate", "--max-size", "2"]).1["payload"]["count"]);
    assert_eq!(pocs(&["enumerate", "--max-size", "5"]).0, 2);

    let (code, r) = pocs(&["geodesic", "product:3,2", "--step", "(1,1)", "--step", "(1,1)", "--step", "(1,1)"]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["endpoint_distance"], "(3,3)");
    assert_eq!(pocs(&["almost-free", "path:5"]).1["payload"]["almost_free"], serde_json::json!(["4"]));
    assert_eq!(pocs(&["validate", "sauer:1,2,3"]).0, 0);
}

#[test]
fn output_file_and_timing() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let out = dir.join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_pocs"))
        .args(["--json", "--timing", "-o", out.to_str().unwrap(), "bound", "path:3"])
        .status()
        .unwrap();
    assert!(status.success());
    let r: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(r.get("elapsed_ms").is_some());
    assert!(pocs(&["bound", "path:3"]).1.get("elapsed_ms").is_none());
}
