use std::path::PathBuf;
use std::process::{Command, Output};

fn cxh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cxh"))
        .args(args)
        .env_remove("CXH_TIME_LIMIT")
        .output()
        .expect("cxh runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cxh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn hull_of_grid_file() {
    let path = scratch("grid.el");
    std::fs::write(&path, "4 4\n0 1\n1 3\n3 2\n2 0\n").unwrap();
    let out = cxh(&["hull", "--convexity", "cc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn fastpath_needs_a_product() {
    let out = cxh(&["hull", "--fastpath", "strong(path:4,cycle:5)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["method"], "fastpath-strong");
    assert_eq!(cxh(&["hull", "--fastpath", "path:4"]).status.code(), Some(2));
    assert_eq!(cxh(&["hull", "--exact", "--fastpath", "path:4"]).status.code(), Some(2));
}

#[test]
fn cnum_alpha_closure() {
    let out = cxh(&["cnum", "--convexity", "cc", "cartesian(cycle:4,cycle:6)", "--fastpath"]);
    assert_eq!(json(&out)["value"], 16);
    let out = cxh(&["alpha", "grid:5x5"]);
    assert_eq!(json(&out)["value"], 13);
    let out = cxh(&["closure", "--convexity", "cc", "cycle:4", "--seed-set", "0,1,2"]);
    let v = json(&out);
    assert_eq!(v["hull_set"], true);
    assert_eq!(v["rounds"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(cxh(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cxh(&["hull"]).status.code(), Some(2));
    assert_eq!(cxh(&["verify", "--suite", "no-such-check"]).status.code(), Some(2));
    // odd cycle into the bipartite reduction
    assert_eq!(cxh(&["reduce", "p3cc", "cycle:5", "-k", "2"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_cxh"))
        .args(["hull", "grid:6x6"])
        .env("CXH_TIME_LIMIT", "0.001")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn verify_writes_report() {
    let path = scratch("r.json");
    let out = cxh(&["verify", "--suite", "strong-hull,lex-hull", "--seed", "42", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ids: Vec<&str> = reports.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["strong-hull", "lex-hull"]);
    let out = cxh(&["verify", "--suite", "negative-control"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(cxh(&["verify", "--suite", ""]).status.code(), Some(0));
}

#[test]
fn reductions_and_conversion() {
    let path = scratch("p3.json");
    let out = cxh(&["reduce", "p3cc", "path:3", "-k", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let env: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(env["k_prime"], 47);
    assert_eq!(env["L"], serde_json::json!([[0, 2]]));
    let out = cxh(&["reduce", "cart-k2", "cycle:4", "-u", "0", "-k", "3"]);
    assert_eq!(json(&out)["k_prime"], 21);
    let out = cxh(&["graph", "convert", "cycle:5", "--to", "graph6"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Dhc");
    let out = cxh(&["product", "--kind", "strong", "path:2", "path:2"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("4 6"));
    assert_eq!(json(&cxh(&["graph", "stats", "cycle:5"]))["bipartite"], false);
}

#[test]
fn full_suite_is_deterministic() {
    let run = |name: &str, jobs: &str| {
        let path = scratch(name);
        let out = cxh(&["verify", "--suite", "all", "--seed", "42", "--jobs", jobs, "--report", path.to_str().unwrap()]);
        // two checks in the suite refute the claim they test
        assert_eq!(out.status.code(), Some(1));
        let mut reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        for r in reports.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("wallclock");
        }
        reports
    };
    let a = run("all-1.json", "1");
    assert_eq!(a, run("all-4.json", "4"));
    let failed: Vec<&str> = a
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "failed")
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["p3-reduction-converse", "identified-pair-count"]);
}
