//! End-to-end tests of the command-line surface: flag parsing, exit codes,
//! exact output, and byte-for-byte determinism.

use std::process::{Command, Output};

fn eigencone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigencone"))
        .args(args)
        .env_remove("EIGENCONE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn member_accepts_and_rejects() {
    let out = eigencone(&["member", "--n", "2", "--s", "3", "--weights", "1,0;1,0;0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("member:"));

    let out = eigencone(&["member", "--n", "2", "--s", "3", "--weights", "0,0;0,0;0,0"]);
    assert_eq!(out.status.code(), Some(0));

    let out = eigencone(&["member", "--n", "2", "--s", "3", "--weights", "1,0;0,0;0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("violates r=1;I1=1;I2=2;I3=2 with value 1/2"), "{text}");
}

#[test]
fn member_reads_kappa_vectors() {
    let out = eigencone(&[
        "member",
        "--n",
        "4",
        "--s",
        "3",
        "--kappa",
        "1,0,0,-1;1/2,1/2,-1/2,-1/2;1/2,1/2,-1/2,-1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn member_domain_errors_exit_two() {
    // Non-dominant weight vector.
    let out = eigencone(&["member", "--n", "2", "--s", "3", "--weights", "0,1;0,0;0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // Malformed rational.
    let out = eigencone(&["member", "--n", "2", "--s", "3", "--kappa", "x,0;0,0;0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // Missing input.
    let out = eigencone(&["member", "--n", "2", "--s", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown flag is a usage error.
    let out = eigencone(&["member", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn facets_lists_and_validates() {
    let out = eigencone(&["facets", "--n", "2", "--s", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("3 facets"));
    assert!(text.contains("r=1;I1=1;I2=2;I3=2  q=2"));

    let out = eigencone(&["facets", "--n", "2", "--s", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn facets_json_schema() {
    let out = eigencone(&["facets", "--n", "2", "--s", "3", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(record["schema_version"], "1");
    assert_eq!(record["command"], "facets");
    assert_eq!(record["result"]["count"], 3);
    assert_eq!(record["result"]["facets"][0]["q"], 2);
}

#[test]
fn facets_rank_filter() {
    let out = eigencone(&["facets", "--n", "3", "--s", "3", "--r", "2", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(record["result"]["count"], 6);
}

#[test]
fn rays_reproduce_small_cones() {
    let out = eigencone(&["rays", "--n", "2", "--s", "3", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(record["result"]["count"], 3);

    let out = eigencone(&["rays", "--n", "4", "--s", "3", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rays = record["result"]["rays"].as_array().unwrap();
    let target = serde_json::json!([[2, 1, 1, 0], [1, 1, 0, 0], [1, 1, 0, 0]]);
    assert!(rays.iter().any(|r| r["weight_tuple"] == target));
    // Every payload carries weights, coordinates and provenance.
    for ray in rays {
        assert!(ray["weight_tuple"].is_array());
        assert!(ray["kappa_tuple"].is_array());
        assert!(ray["provenance"]["kind"].is_string());
    }
}

#[test]
fn rays_restricted_to_a_facet() {
    let out = eigencone(&[
        "rays",
        "--n",
        "2",
        "--s",
        "3",
        "--facet",
        "r=1;I1=1;I2=2;I3=2",
        "--diagnostics",
        "--json",
    ]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(record["result"]["count"], 2);
    assert_eq!(record["result"]["rejected"].as_array().unwrap().len(), 0);
}

#[test]
fn induct_reproduces_the_rank_nine_ray() {
    let out = eigencone(&[
        "induct",
        "--facet",
        "r=3;I1=3,7,8;I2=3,6,9;I3=3,6,9",
        "--left",
        "1,1,0;1,1,0;1,1,0",
        "--right",
        "0,0,0,0,0,0;0,0,0,0,0,0;0,0,0,0,0,0",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(
        record["result"]["result_weights"],
        serde_json::json!([
            [3, 3, 3, 2, 2, 2, 2, 1, 0],
            [2, 2, 2, 1, 1, 1, 0, 0, 0],
            [2, 2, 2, 1, 1, 1, 0, 0, 0]
        ])
    );
    assert_eq!(record["result"]["corrections"].as_array().unwrap().len(), 8);
}

#[test]
fn induct_small_subface_ray_and_zero() {
    let out = eigencone(&[
        "induct",
        "--facet",
        "r=2;I1=1,2;I2=2,3;I3=2,3",
        "--left",
        "0,0;1,0;1,0",
        "--right",
        "0;0;0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("result weights: (1,1,0) (1,1,0) (1,1,0)"), "{text}");

    let out = eigencone(&[
        "induct",
        "--facet",
        "r=2;I1=1,2;I2=2,3;I3=2,3",
        "--left",
        "0,0;0,0;0,0",
        "--right",
        "0;0;0",
    ]);
    assert!(stdout(&out).contains("result weights: zero"));
}

#[test]
fn induct_rejects_bad_inputs() {
    // Not a facet: intersection number differs from one.
    let out = eigencone(&[
        "induct",
        "--facet",
        "r=1;I1=2;I2=2;I3=2",
        "--left",
        "0;0;0",
        "--right",
        "0,0;0,0;0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Left factor outside its eigencone.
    let out = eigencone(&[
        "induct",
        "--facet",
        "r=2;I1=1,2;I2=2,3;I3=2,3",
        "--left",
        "1,0;0,0;0,0",
        "--right",
        "0;0;0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Mismatched --n.
    let out = eigencone(&[
        "induct",
        "--facet",
        "r=2;I1=1,2;I2=2,3;I3=2,3",
        "--n",
        "5",
        "--left",
        "0,0;0,0;0,0",
        "--right",
        "0;0;0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_flag_and_env() {
    let out = eigencone(&["facets", "--n", "9", "--s", "3", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"), "{err}");

    let out = Command::new(env!("CARGO_BIN_EXE_eigencone"))
        .args(["facets", "--n", "9", "--s", "3"])
        .env("EIGENCONE_BUDGET", "1000")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));

    // Flag overrides environment.
    let out = Command::new(env!("CARGO_BIN_EXE_eigencone"))
        .args(["facets", "--n", "2", "--s", "3", "--budget", "1000000"])
        .env("EIGENCONE_BUDGET", "1")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_single_check_and_unknown_id() {
    let out = eigencone(&["verify", "--only", "gamma2-rays"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS gamma2-rays"));

    let out = eigencone(&["verify", "--only", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = eigencone(&["verify", "--only", "gamma2-rays", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(record["result"]["passed"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["rays", "--n", "3", "--s", "3", "--json"],
        vec!["facets", "--n", "4", "--s", "3", "--json"],
        vec![
            "induct",
            "--facet",
            "r=2;I1=1,2;I2=2,3;I3=2,3",
            "--left",
            "0,0;1,0;1,0",
            "--right",
            "0;0;0",
            "--json",
        ],
    ] {
        let first = stdout(&eigencone(&args));
        let second = stdout(&eigencone(&args));
        assert_eq!(first, second, "nondeterministic output for {args:?}");
    }
}

#[test]
fn no_decimal_output_anywhere() {
    for args in [
        vec!["rays", "--n", "3", "--s", "3", "--json"],
        vec![
            "member",
            "--n",
            "4",
            "--s",
            "3",
            "--weights",
            "2,1,1,0;1,1,0,0;1,1,0,0",
            "--json",
        ],
    ] {
        let text = stdout(&eigencone(&args));
        assert!(!text.contains('.'), "decimal leaked into {text}");
    }
}
