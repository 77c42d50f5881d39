//! End-to-end tests of the command-line interface: exit codes, report
//! shapes, determinism, and pipe fidelity, all through the real binary.

use serde_json::Value;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reebmod"))
}

fn scenes_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenes")
        .canonicalize()
        .expect("shipped scenes directory")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_round_fold_reports_order_two_module() {
    let scene = scenes_dir().join("round_fold.json");
    let out = run(&["--json", "check", scene.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["module"]["torsion_factors"], serde_json::json!([2]));
    assert_eq!(v["module"]["free_rank"], 0);
    assert_eq!(v["verdict"]["nonvanishing"], true);
    let witness = v["verdict"]["witness_cell"].as_str().unwrap();
    assert!(witness == "cap1" || witness == "cap2");
}

#[test]
fn check_identified_round_fold_is_inconclusive() {
    let scene = scenes_dir().join("round_fold_identified.json");
    let out = run(&["--json", "check", scene.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["verdict"]["nonvanishing"], false);
    assert_eq!(v["module"]["is_trivial"], true);
}

#[test]
fn incompatible_classifier_exits_three_with_offender() {
    let scene = scenes_dir().join("round_fold.json");
    let classifier = scenes_dir().join("bad_classifier.json");
    let out = run(&[
        "--json",
        "check",
        scene.to_str().unwrap(),
        "--classifier",
        classifier.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_stdout(&out);
    assert_eq!(v["classifier"]["compatible"], false);
    let offending = &v["classifier"]["offending_relation"];
    assert_eq!(offending["site"], "outer");
    assert_eq!(offending["vector"], serde_json::json!([[1, "S"]]));
}

#[test]
fn compatible_classifier_reports_group_classes() {
    let scene = scenes_dir().join("round_fold.json");
    let classifier = scenes_dir().join("sphere_group_classifier.json");
    let out = run(&[
        "--json",
        "check",
        scene.to_str().unwrap(),
        "--classifier",
        classifier.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["classifier"]["compatible"], true);
    assert_eq!(v["verdict"]["nonvanishing"], true);
    assert_eq!(v["classes"]["Sigma"]["coords"], serde_json::json!([14]));
}

#[test]
fn parity_classifier_recovers_loop_verdicts() {
    let crosscap = scenes_dir().join("loop_crosscap.json");
    let torus = scenes_dir().join("loop_torus.json");
    let out = run(&[
        "--json",
        "check",
        crosscap.to_str().unwrap(),
        "--classifier",
        scenes_dir().join("parity_crosscap.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_stdout(&out)["verdict"]["nonvanishing"], true);

    let out = run(&[
        "--json",
        "check",
        torus.to_str().unwrap(),
        "--classifier",
        scenes_dir().join("parity_torus.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_stdout(&out)["verdict"]["nonvanishing"], false);
}

#[test]
fn validation_failure_exits_two_and_names_the_cell() {
    let scene = scenes_dir().join("round_fold.json");
    let text = std::fs::read_to_string(&scene).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["labels"].as_object_mut().unwrap().remove("cap1");
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let out = run(&["--json", "validate", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_stdout(&out);
    assert_eq!(v["validation"]["ok"], false);
    let violations = v["validation"]["violations"].as_array().unwrap();
    assert!(violations.iter().any(|m| m.as_str().unwrap().contains("cap1")));
}

#[test]
fn shipped_scenes_all_validate() {
    for entry in std::fs::read_dir(scenes_dir()).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        if !name.ends_with(".json") || name.contains("classifier") || name.contains("parity") {
            continue;
        }
        let out = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "scene {name} failed validation");
    }
}

#[test]
fn usage_errors_exit_four() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["check", "/nonexistent/scene.json"]);
    assert_eq!(out.status.code(), Some(4));
    let scene = scenes_dir().join("klein_demo.json");
    let out = run(&["homology", scene.to_str().unwrap(), "--ring", "q"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["generate", "genus-split", "-g", "2"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn malformed_scene_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"ring\": {\"kind\": \"integers\"},\n  oops\n").unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "stderr: {err}");
}

#[test]
fn reports_are_byte_deterministic() {
    let scene = scenes_dir().join("klein_demo.json");
    let a = run(&["--json", "check", scene.to_str().unwrap()]);
    let b = run(&["--json", "check", scene.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["check", scene.to_str().unwrap()]);
    let b = run(&["check", scene.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generated_scene_checks_identically_through_a_pipe() {
    // generate to a file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gen.json");
    let out = run(&["generate", "genus-split", "-g", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let from_file = run(&["--json", "check", path.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));

    // generate to stdout and pipe into check -
    let generated = run(&["generate", "genus-split", "-g", "5"]);
    assert_eq!(generated.status.code(), Some(0));
    assert_eq!(generated.stdout, std::fs::read(&path).unwrap());
    let mut child = bin()
        .args(["--json", "check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(&generated.stdout)
        .unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(piped.status.code(), Some(0));

    // identical content up to the echoed command line
    let mut v1 = json_stdout(&from_file);
    let mut v2: Value = serde_json::from_slice(&piped.stdout).unwrap();
    v1.as_object_mut().unwrap().remove("command");
    v2.as_object_mut().unwrap().remove("command");
    assert_eq!(v1, v2);
}

#[test]
fn homology_rings_on_the_transition_graph() {
    let scene = scenes_dir().join("klein_demo.json");
    let out = run(&["--json", "homology", scene.to_str().unwrap(), "--ring", "z"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["homology"][0]["free_rank"], 1);
    assert_eq!(v["homology"][1]["free_rank"], 1);

    let out = run(&["--json", "homology", scene.to_str().unwrap(), "--ring", "z2"]);
    let v = json_stdout(&out);
    assert_eq!(v["homology"][0]["torsion_factors"], serde_json::json!([2]));
    assert_eq!(v["homology"][1]["torsion_factors"], serde_json::json!([2]));
}

#[test]
fn spin_subcommand_preserves_the_verdict() {
    let scene = scenes_dir().join("klein_demo.json");
    let dir = tempfile::tempdir().unwrap();
    let spun = dir.path().join("spun.json");
    let out = run(&[
        "spin",
        scene.to_str().unwrap(),
        "--base",
        "v0",
        "-o",
        spun.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let a = json_stdout(&run(&["--json", "check", scene.to_str().unwrap()]));
    let b = json_stdout(&run(&["--json", "check", spun.to_str().unwrap()]));
    assert_eq!(a["verdict"]["nonvanishing"], b["verdict"]["nonvanishing"]);
    assert_eq!(a["module"]["torsion_factors"], b["module"]["torsion_factors"]);
    assert_eq!(a["module"]["free_rank"], b["module"]["free_rank"]);
}

#[test]
fn relations_listing_shows_the_transition_vectors() {
    let scene = scenes_dir().join("y_patch.json");
    let out = run(&["--json", "relations", scene.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    let rels = v["relations"].as_array().unwrap();
    assert_eq!(rels.len(), 1);
    assert_eq!(rels[0]["site"], "tau");
    assert_eq!(
        rels[0]["vector"],
        serde_json::json!([[1, "a1"], [1, "a2"], [-1, "a3"]])
    );
}
