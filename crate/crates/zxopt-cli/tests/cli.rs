// zxopt - exhaustive search optimisation of quantum circuits
//         using the ZX-calculus
// Copyright (C) 2026 - the zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Binary-level tests: exit codes, artifacts, and output formats.

use std::path::Path;
use std::process::{Command, Output};

fn zxopt(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zxopt"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const T_QASM: &str = "OPENQASM 2.0;\nqreg q[1];\nt q[0];\n";
const X_QASM: &str = "OPENQASM 2.0;\nqreg q[1];\nx q[0];\n";
const Z_QASM: &str = "OPENQASM 2.0;\nqreg q[1];\nz q[0];\n";

#[test]
fn optimize_writes_artifacts_and_respects_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "in.qasm",
        "OPENQASM 2.0;\nqreg q[2];\nt q[0];\nh q[0];\nt q[0];\ncx q[0],q[1];\nt q[1];\n",
    );
    let out = zxopt(
        &[
            "optimize", &input, "--metric", "tcount", "--strategy", "iddfs", "--depth", "4",
            "--time-limit", "10s", "-o", "out.zx.json", "--report", "r.json", "--trace", "t.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert!(report["final"]["tcount"].as_u64() <= report["initial"]["tcount"].as_u64());
    assert_eq!(report["initial"]["gates"].as_u64(), Some(5));
    assert_eq!(report["strategy"], "iddfs");
    assert_eq!(report["terminated_by"], "depth_exhausted");

    // the best diagram parses and is valid
    let diagram =
        zxopt::json::from_json(&std::fs::read_to_string(dir.path().join("out.zx.json")).unwrap())
            .unwrap();
    assert!(diagram.validate().is_ok());

    // trace: header, strictly increasing elapsed, non-increasing best
    let trace = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next(), Some("elapsed_ms,best_value,nodes_expanded"));
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(!rows.is_empty());
    for w in rows.windows(2) {
        assert!(w[0][0] < w[1][0], "elapsed_ms not strictly increasing");
        assert!(w[0][1] >= w[1][1], "best_value increased");
    }
}

#[test]
fn optimize_edge_metric_never_worsens() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "in.qasm",
        "OPENQASM 2.0;\nqreg q[2];\nh q[0];\ncx q[0],q[1];\ns q[1];\ncz q[0],q[1];\n",
    );
    let out = zxopt(
        &["optimize", &input, "--metric", "edges", "--strategy", "dfs", "--depth", "5",
          "--report", "r.json"],
        dir.path(),
    );
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert!(report["final"]["edges"].as_u64() <= report["initial"]["edges"].as_u64());
}

#[test]
fn optimize_with_verify_passes_on_toffoli() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "toffoli.qasm",
        "OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n",
    );
    let out = zxopt(
        &["optimize", &input, "--metric", "tcount", "--strategy", "iddfs", "--depth", "4",
          "--time-limit", "20s", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.qasm", T_QASM);
    let x = write(dir.path(), "x.qasm", X_QASM);
    let z = write(dir.path(), "z.qasm", Z_QASM);

    // reflexivity
    let out = zxopt(&["verify", &t, &t], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("lambda"));

    // different single-gate circuits differ
    let out = zxopt(&["verify", &x, &z], dir.path());
    assert_eq!(out.status.code(), Some(3));

    // parse error
    let bad = write(dir.path(), "bad.qasm", "OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n");
    let out = zxopt(&["verify", &bad, &t], dir.path());
    assert_eq!(out.status.code(), Some(1));

    // dimension mismatch counts as inequivalence
    let two = write(dir.path(), "two.qasm", "OPENQASM 2.0;\nqreg q[2];\nh q[0];\n");
    let out = zxopt(&["verify", &t, &two], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_budget_exceeded_is_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut big = String::from("OPENQASM 2.0;\nqreg q[8];\n");
    for q in 0..8 {
        big.push_str(&format!("h q[{q}];\n"));
    }
    let a = write(dir.path(), "a.qasm", &big);
    let out = zxopt(&["verify", &a, &a], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.qasm", T_QASM);
    let out = zxopt(&["optimize", &t, "--metric", "qubits"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = zxopt(&["optimize", &t, "--strategy", "bfs"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = zxopt(&["optimize", &t, "--rule-order", "f,nope"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = zxopt(&["optimize", &t, "--time-limit", "10parsecs"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = zxopt(&["optimize", &t, "--extractability", "maybe"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // clap-level errors also exit 2
    let out = zxopt(&["optimize"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.qasm", "OPENQASM 2.0;\nqreg q[1];\ncy q[0];\n");
    let out = zxopt(&["optimize", &bad], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let out = zxopt(&["stats", &bad], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let out = zxopt(&["optimize", "missing.qasm"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stats_fields() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.qasm", T_QASM);
    let out = zxopt(&["stats", &t], dir.path());
    assert!(out.status.success());
    let stats: serde_json::Value =
        serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(stats["tcount"], 1);
    assert_eq!(stats["spiders"], 1);
    assert_eq!(stats["graph_like"], true);
    assert_eq!(stats["gflow"], true);

    // empty circuit
    let empty = write(dir.path(), "empty.qasm", "OPENQASM 2.0;\nqreg q[2];\n");
    let out = zxopt(&["stats", &empty], dir.path());
    let stats: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(stats["tcount"], 0);
    assert_eq!(stats["spiders"], 0);
    assert_eq!(stats["gflow"], true);
}

#[test]
fn reports_are_deterministic_modulo_wall_time() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "in.qasm",
        "OPENQASM 2.0;\nqreg q[3];\nt q[0];\ncx q[0],q[1];\nh q[1];\nt q[1];\ncz q[1],q[2];\nt q[2];\n",
    );
    let mut reports = vec![];
    for name in ["a.json", "b.json"] {
        let out = zxopt(
            &["optimize", &input, "--depth", "4", "--time-limit", "60s", "--report", name],
            dir.path(),
        );
        assert!(out.status.success());
        let mut report: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join(name)).unwrap()).unwrap();
        report.as_object_mut().unwrap().remove("wall_time_ms");
        reports.push(report);
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn optimize_accepts_zx_json_input() {
    let dir = tempfile::tempdir().unwrap();
    let circ = zxopt::parse_qasm("OPENQASM 2.0;\nqreg q[2];\nt q[0];\ncx q[0],q[1];\n").unwrap();
    let path = write(dir.path(), "in.zx.json", &zxopt::json::to_json(&circ.to_diagram()));
    let out = zxopt(
        &["optimize", &path, "--metric", "spiders", "--depth", "3", "--report", "r.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    // no gate count for diagram input
    assert!(report["initial"]["gates"].is_null());
}
