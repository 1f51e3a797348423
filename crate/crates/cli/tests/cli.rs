//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn cluster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster"))
        .args(args)
        .env_remove("CLUSTER_MAX_DEPTH")
        .env_remove("CLUSTER_MAX_VARS")
        .env_remove("CLUSTER_MAX_TERMS")
        .env_remove("CLUSTER_MAX_POWER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8")
}

#[test]
fn enumerate_path_type_is_complete_and_exact() {
    let out = cluster(&["enumerate", "--type", "A3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["complete"], serde_json::Value::Bool(true));
    assert_eq!(v["variables"].as_array().unwrap().len(), 9);
    assert_eq!(v["clusters"].as_array().unwrap().len(), 14);
    let vars: Vec<&str> = v["variables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert!(vars.contains(&"u1^-1*u2 + u1^-1"));
    assert!(vars.contains(&"u2^-1 + u1^-1*u3 + u1^-1*u2^-1*u3"));
    // Every cluster points at three distinct variables.
    for c in v["clusters"].as_array().unwrap() {
        let idx: Vec<usize> = c
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .collect();
        assert_eq!(idx.len(), 3);
        assert!(idx.iter().all(|&i| i < 9));
    }
}

#[test]
fn explicit_path_orientation_matches_the_default() {
    let a = cluster(&["enumerate", "--type", "A3", "--format", "json"]);
    let b = cluster(&[
        "enumerate",
        "--type",
        "A3",
        "--orientation",
        "3,2,1-path",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn json_reports_are_byte_deterministic() {
    let a = cluster(&["enumerate", "--type", "B3", "--format", "json"]);
    let b = cluster(&["enumerate", "--type", "B3", "--format", "json"]);
    assert_eq!(out_bytes(&a), out_bytes(&b));

    fn out_bytes(o: &Output) -> &[u8] {
        &o.stdout
    }
}

#[test]
fn classify_affine_matrix() {
    let out = cluster(&["classify", "--matrix", "[[0,2],[-2,0]]"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("infinite type (affine)"));
}

#[test]
fn classify_finite_types() {
    let out = cluster(&["classify", "--type", "A3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["type"], "A3");
    assert_eq!(v["finite"], true);

    let out = cluster(&["classify", "--cartan", "[[2,-1],[-2,2]]", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["type"], "B2");
    assert_eq!(v["symmetrizer"], serde_json::json!([2, 1]));
}

#[test]
fn mutation_reproduces_the_reflected_matrix() {
    let out = cluster(&["mutate", "--type", "A3", "--k", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([[0, 1, 0], [-1, 0, -1], [0, 1, 0]]));
    assert_eq!(v["fractions"][0], "(u2 + 1)/(u1)");
}

#[test]
fn orbit_reports_the_rank2_order() {
    let out = cluster(&["orbit", "--type", "B2", "--mmax", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["entries"].as_array().unwrap().len(), 8);
}

#[test]
fn order_of_single_vertex() {
    let out = cluster(&["order", "--type", "A1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["formula_order"], 2);
}

#[test]
fn order_of_affine_type_is_unbounded() {
    let out = cluster(&["order", "--type", "AFF2", "--max-power", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("no finite order"));
}

#[test]
fn budget_exceeded_exits_2_with_partial_results() {
    let out = cluster(&[
        "enumerate",
        "--type",
        "AFF2",
        "--max-vars",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["complete"], serde_json::Value::Bool(false));
    assert!(v["variables"].as_array().unwrap().len() >= 2);
}

#[test]
fn budget_env_override_applies() {
    let out = Command::new(env!("CARGO_BIN_EXE_cluster"))
        .args(["enumerate", "--type", "AFF2", "--format", "json"])
        .env("CLUSTER_MAX_VARS", "8")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_1_with_distinct_diagnostics() {
    let out = cluster(&["enumerate", "--matrix", "not json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("malformed matrix JSON"));

    let out = cluster(&["enumerate", "--matrix", "[[0,1],[1,0]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not skew-symmetrizable"));

    let out = cluster(&["classify", "--cartan", "[[2,1],[-1,2]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not a generalized Cartan matrix"));

    let out = cluster(&["enumerate", "--type", "Z9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown builtin"));

    let out = cluster(&["enumerate", "--type", "A3", "--matrix", "[[0]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("exactly one input source"));

    let out = cluster(&[
        "enumerate",
        "--matrix",
        "[[0,-1],[1,0]]",
        "--orientation",
        "default",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--orientation cannot be combined"));

    let out = cluster(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn cyclic_orientation_is_rejected() {
    let out = cluster(&["orbit", "--matrix", "[[0,1,-1],[-1,0,1],[1,-1,0]]", "--mmax", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("oriented cycle"));
}

#[test]
fn orientation_file_and_json_edges() {
    let out = cluster(&[
        "enumerate",
        "--cartan",
        "[[2,-1,0],[-1,2,-1],[0,-1,2]]",
        "--orientation",
        "{\"edges\":[[3,2],[2,1]]}",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["variables"].as_array().unwrap().len(), 9);

    let dir = std::env::temp_dir().join("cluster-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.json");
    std::fs::write(&path, "{\"n\":2,\"b\":[[0,-1],[2,0]]}").unwrap();
    let out = cluster(&["enumerate", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["variables"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_all_passes_at_rank_3() {
    let out = cluster(&["verify", "all", "--max-rank", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("[PASS]"));
    assert!(!text.contains("[FAIL]"));
    assert!(text.contains("all passed"));
}

#[test]
fn verify_single_suite_json() {
    let out = cluster(&["verify", "thm4.15", "--max-rank", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert!(!v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn examples_subcommand_prints_the_worked_cases() {
    let out = cluster(&["examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(u1*u2 + u1 + u2*u3 + u3)/(u1*u2*u3)"));
    assert!(text.contains("order of T: 3"));
    assert!(text.contains("F4=7"));
}
