use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use schurlab_core::enumerate::ReportDoc;
use schurlab_core::schurity::{verify_certificate, SchurityCertificate, Verdict};
use schurlab_core::{build_group, SRing};
use serde_json::Value;

fn schurlab(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurlab"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("SCHURLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn group_info_reports_classes_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["group", "A5", "info"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class_sizes"], serde_json::json!([1, 12, 12, 15, 20]));

    let o = schurlab(dir.path(), &["group", "quaternion:16", "info"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["maximal_cyclic"], Value::Bool(true));
}

#[test]
fn bad_spec_is_an_error_not_a_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["group", "dihedral:7", "info"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn enumerate_writes_files_that_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["enumerate", "A5", "--mode", "central"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc: ReportDoc = serde_json::from_value(json(&dir.path().join("A5-central.json"))).unwrap();
    assert_eq!((doc.count, doc.members.len()), (3, 3));
    assert!(doc.complete);
    let g = Arc::new(build_group("A5").unwrap());
    for m in &doc.members {
        SRing::from_doc(&g, &m.sring).unwrap();
    }
    let csv = fs::read_to_string(dir.path().join("A5-central.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn exhausted_node_budget_is_undecided() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["--node-budget", "2", "enumerate", "cyclic:12", "--mode", "all"]);
    assert_eq!(code(&o), 20);
    let v = json(&dir.path().join("cyclic_12-all.json"));
    assert_eq!(v["complete"], Value::Bool(false));
}

#[test]
fn check_emits_replayable_certificates() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&schurlab(dir.path(), &["enumerate", "dihedral:8"])), 0);
    let report = dir.path().join("dihedral_8-central.json");

    let o = schurlab(dir.path(), &["check", "dihedral:8", report.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let certs: Vec<SchurityCertificate> =
        serde_json::from_value(json(&dir.path().join("dihedral_8-central-certificate.json"))).unwrap();
    let doc: ReportDoc = serde_json::from_value(json(&report)).unwrap();
    assert_eq!(certs.len(), doc.members.len());
    let g = Arc::new(build_group("dihedral:8").unwrap());
    for (c, m) in certs.iter().zip(&doc.members) {
        assert_eq!(c.verdict, Verdict::Schurian);
        verify_certificate(c, &SRing::from_doc(&g, &m.sring).unwrap()).unwrap();
    }

    // a single S-ring document works too
    let single = dir.path().join("one.json");
    fs::write(&single, serde_json::to_string(&doc.members[0].sring).unwrap()).unwrap();
    assert_eq!(code(&schurlab(dir.path(), &["check", "dihedral:8", single.to_str().unwrap()])), 0);
    let c: SchurityCertificate = serde_json::from_value(json(&dir.path().join("one-certificate.json"))).unwrap();
    assert_eq!(c.verdict, Verdict::Schurian);
}

#[test]
fn check_rejects_a_non_sring() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let doc = serde_json::json!({"group-spec": "cyclic:4", "blocks": [[0], [1], [2, 3]], "rank": 3, "sizes": [1, 1, 2]});
    fs::write(&bad, doc.to_string()).unwrap();
    assert_eq!(code(&schurlab(dir.path(), &["check", "cyclic:4", bad.to_str().unwrap()])), 1);
}

#[test]
fn gschur_true_and_false_both_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["gschur", "dihedral:24"]);
    assert_eq!(code(&o), 0);
    let v = json(&dir.path().join("dihedral_24-gschur.json"));
    assert_eq!(v["verdict"], "true");
    assert_eq!(v["witness"], Value::Null);

    let o = schurlab(dir.path(), &["--atom-cap", "25", "gschur", "elemabelian:5^2"]);
    assert_eq!(code(&o), 0);
    let v = json(&dir.path().join("elemabelian_5_2-gschur.json"));
    assert_eq!(v["verdict"], "false");
    let witness: SchurityCertificate =
        serde_json::from_value(json(Path::new(v["witness"].as_str().unwrap()))).unwrap();
    let g = Arc::new(build_group("elemabelian:5^2").unwrap());
    let a = SRing::from_partition(&g, witness.blocks.clone()).unwrap();
    verify_certificate(&witness, &a).unwrap();
    assert_eq!(witness.verdict, Verdict::Nonschurian);
}

#[test]
fn aut_cap_gives_undecided_exit() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["--aut-cap", "10", "gschur", "A5"]);
    assert_eq!(code(&o), 20);
}

#[test]
fn config_file_and_jobs_env_are_applied() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# caps\naut-cap = 200\nformats = json\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_schurlab"))
        .args(["gschur", "dihedral:6", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()])
        .env("SCHURLAB_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&dir.path().join("dihedral_6-gschur.json"));
    assert_eq!(v["config"]["jobs"], "2");
    assert_eq!(v["config"]["aut-cap"], "200");
    assert!(!dir.path().join("dihedral_6-gschur-members.csv").exists());
}

#[test]
fn enumeration_is_independent_of_job_count() {
    let members = |jobs: &str| {
        let dir = tempfile::tempdir().unwrap();
        let o = schurlab(dir.path(), &["--jobs", jobs, "enumerate", "direct(cyclic:4,cyclic:2)", "--mode", "all"]);
        assert_eq!(code(&o), 0);
        json(&dir.path().join("direct_cyclic_4_cyclic_2-all.json"))["members"].clone()
    };
    assert_eq!(members("1"), members("4"));
}

#[test]
fn verify_runs_a_recipe() {
    let dir = tempfile::tempdir().unwrap();
    let o = schurlab(dir.path(), &["verify", "small-schur"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&dir.path().join("small-schur.json"));
    assert_eq!(v["checks"].as_array().unwrap().len(), 28);
    assert!(dir.path().join("small-schur.csv").exists());

    let o = schurlab(dir.path(), &["verify", "thm9"]);
    assert_eq!(code(&o), 2);
}
