use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_terwilliger"))
        .args(args)
        .env_remove("TERWILLIGER_D_LIMIT")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn build_adjacency_of_square() {
    let out = run(&["build", "--d", "2", "--op", "adjacency"]);
    assert_eq!(status(&out), 0);
    let v = json(&out);
    assert_eq!(v["rows"], 4);
    assert_eq!(v["cols"], 4);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 8);
    assert!(entries.iter().all(|e| e[2] == "1/1" && e[3] == "0/1"));
}

#[test]
fn build_p_for_one_cube() {
    let out = run(&["build", "--d", "1", "--op", "P"]);
    assert_eq!(status(&out), 0);
    let v = json(&out);
    let entries: Vec<(u64, u64, String, String)> = serde_json::from_value(v["entries"].clone()).unwrap();
    let want = [
        (0, 0, "1/1", "0/1"),
        (0, 1, "1/1", "0/1"),
        (1, 0, "0/1", "-1/1"),
        (1, 1, "0/1", "1/1"),
    ];
    let want: Vec<_> = want
        .iter()
        .map(|&(r, c, re, im)| (r, c, re.to_string(), im.to_string()))
        .collect();
    assert_eq!(entries, want);
}

#[test]
fn build_family_member_needs_index() {
    assert_eq!(status(&run(&["build", "--d", "2", "--op", "e"])), 2);
    assert_eq!(status(&run(&["build", "--d", "2", "--op", "e", "--index", "3"])), 2);
    assert_eq!(status(&run(&["build", "--d", "2", "--op", "e", "--index", "2"])), 0);
}

#[test]
fn dimension_out_of_range_is_a_usage_error() {
    assert_eq!(status(&run(&["build", "--d", "0"])), 2);
    assert_eq!(status(&run(&["decompose", "--d", "11"])), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_terwilliger"))
        .args(["decompose", "--d", "3"])
        .env("TERWILLIGER_D_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(status(&out), 2);
}

#[test]
fn verify_all_small_cube() {
    let out = run(&["verify", "--d", "4", "--suite", "all"]);
    assert_eq!(status(&out), 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() > 1000);
}

#[test]
fn verify_commutators_lists_five_identities() {
    let out = run(&["verify", "--d", "6", "--suite", "commutators"]);
    assert_eq!(status(&out), 0);
    let checks = json(&out)["checks"].as_array().unwrap().clone();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn corrupted_operator_is_reported() {
    let out = run(&["verify", "--d", "3", "--suite", "commutators", "--corrupt-aeps", "0,1"]);
    assert_eq!(status(&out), 1);
    let v = json(&out);
    assert_eq!(v["passed"], false);
    let failed: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["first_discrepancy"].is_array()));
}

#[test]
fn corrupted_phi_is_reported() {
    let out = run(&[
        "verify",
        "--d",
        "3",
        "--suite",
        "inner-products",
        "--corrupt-phi",
        "1,1",
    ]);
    assert_eq!(status(&out), 1);
    let out = run(&["verify", "--d", "3", "--suite", "transitions", "--corrupt-phi", "0,2"]);
    assert_eq!(status(&out), 1);
}

#[test]
fn decompose_three_cube() {
    let out = run(&["decompose", "--d", "3"]);
    assert_eq!(status(&out), 0);
    let v = json(&out);
    let rs: Vec<u64> = v["modules"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["r"].as_u64().unwrap())
        .collect();
    assert_eq!(rs, vec![0, 1, 1]);
}

#[test]
fn decompose_emits_one_seed_file_per_module() {
    let dir = tempfile::tempdir().unwrap();
    let seeds = dir.path().join("seeds");
    let out = run(&["decompose", "--d", "5", "--emit-seeds", seeds.to_str().unwrap()]);
    assert_eq!(status(&out), 0);
    let mut names: Vec<String> = std::fs::read_dir(&seeds)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 10);
    for r in 0..3 {
        let count = names
            .iter()
            .filter(|n| n.starts_with(&format!("seeds_D5_r{r}_")))
            .count();
        assert_eq!(count, [1, 4, 5][r]);
    }
    let seed: Value =
        serde_json::from_str(&std::fs::read_to_string(seeds.join("seeds_D5_r0_k0.json")).unwrap()).unwrap();
    assert_eq!(seed["u_star"]["entries"], serde_json::json!([[0, "1/1", "0/1"]]));
}

#[test]
fn csv_report_has_flat_rows() {
    let out = run(&["verify", "--d", "2", "--suite", "inner-products", "--format", "csv"]);
    assert_eq!(status(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theorem_id,i,j,passed,first_discrepancy"));
    assert!(lines.any(|l| l.contains("krawtchouk")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--d", "3", "--suite", "all"][..],
        &["module-report", "--d", "3"][..],
        &["decompose", "--d", "4", "--format", "csv"][..],
    ] {
        let a = run(args);
        let b = run(args);
        let mut par = args.to_vec();
        par.push("--parallel");
        let c = run(&par);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
}

#[test]
fn output_file_and_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let out = run(&["build", "--d", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(status(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&["build", "--d", "2"]).stdout);

    let bad = dir.path().join("missing").join("a.json");
    assert_eq!(
        status(&run(&["build", "--d", "2", "--output", bad.to_str().unwrap()])),
        3
    );
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let seeds = blocker.join("seeds");
    assert_eq!(
        status(&run(&[
            "decompose",
            "--d",
            "2",
            "--emit-seeds",
            seeds.to_str().unwrap()
        ])),
        3
    );
}

#[test]
fn module_report_single_module() {
    let out = run(&["module-report", "--d", "4", "--r", "1", "--index", "2"]);
    assert_eq!(status(&out), 0);
    let v = json(&out);
    assert_eq!(v["r"], 1);
    assert_eq!(v["module_index"], 2);
    assert_eq!(v["leonard_triple"], "true");
    assert_eq!(v["rep_matrices"]["AsA"]["A"]["form"], "matrika1");
    assert_eq!(status(&run(&["module-report", "--d", "4", "--r", "3"])), 2);
}

#[test]
fn leonard_check_modules_and_input() {
    let out = run(&["leonard-check", "--d", "4"]);
    assert_eq!(status(&out), 0);
    let v = json(&out);
    assert_eq!(v["modules"].as_array().unwrap().len(), 6);

    let dir = tempfile::tempdir().unwrap();
    let dump = |args: &[&str]| json(&run(args));
    let triple = Value::Array(vec![
        dump(&["build", "--d", "1", "--op", "A"]),
        dump(&["build", "--d", "1", "--op", "Astar"]),
        dump(&["build", "--d", "1", "--op", "Aeps"]),
    ]);
    let path = dir.path().join("triple.json");
    std::fs::write(&path, triple.to_string()).unwrap();
    let out = run(&["leonard-check", "--d", "1", "--input", path.to_str().unwrap()]);
    assert_eq!(status(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["verdict"], "true");

    let diag = Value::Array(vec![
        dump(&["build", "--d", "1", "--op", "Astar"]),
        dump(&["build", "--d", "1", "--op", "Astar"]),
        dump(&["build", "--d", "1", "--op", "Astar"]),
    ]);
    std::fs::write(&path, diag.to_string()).unwrap();
    let out = run(&["leonard-check", "--d", "1", "--input", path.to_str().unwrap()]);
    assert_eq!(status(&out), 1);
    assert_eq!(json(&out)["verdict"], "false");
}
