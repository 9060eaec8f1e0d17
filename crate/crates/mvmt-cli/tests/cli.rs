//! End-to-end tests of the command-line interface: exit codes, output
//! formats and agreement with the library entry points.

use std::path::PathBuf;
use std::process::{Command, Output};

fn mvmt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvmt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path: PathBuf =
        [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_frame_tiny_fixture_is_compatible() {
    let out = mvmt(&["check-frame", &fixture("tiny-frame.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("compatible"));
}

#[test]
fn check_frame_rejects_malformed_json_with_position() {
    let dir = std::env::temp_dir().join("mvmt-cli-bad-json");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{ this is not json").unwrap();
    let out = mvmt(&["check-frame", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line"), "{err}");
}

#[test]
fn check_frame_matches_the_scenario_verdict() {
    // the bundled published frame fails compatibility, so exit code 1
    let out = mvmt(&["check-frame", &fixture("case-study-model-frame.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("incompatible: 30"));
}

#[test]
fn eval_published_cell() {
    let out = mvmt(&[
        "eval",
        &fixture("case-study-model.json"),
        "--formula",
        "PP: pi_L",
        "--beta",
        "0.0",
        "--state",
        "zF",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0.6");
}

#[test]
fn eval_of_falsum_returns_the_grade() {
    for (beta, expected) in [("0.0", "0.0"), ("0.4", "0.4"), ("1.0", "1.0")] {
        let out = mvmt(&[
            "eval",
            &fixture("case-study-model.json"),
            "--formula",
            "SD: F",
            "--beta",
            beta,
            "--state",
            "zL",
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), expected);
    }
}

#[test]
fn eval_rejects_wrong_side_state() {
    let out = mvmt(&[
        "eval",
        &fixture("case-study-model.json"),
        "--formula",
        "SD: sigma_F",
        "--beta",
        "0.0",
        "--state",
        "zF",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_has_eleven_rows_ending_saturated() {
    let out = mvmt(&[
        "table",
        &fixture("case-study-model.json"),
        "--formula",
        "PP: pi_L",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // header, 11 grade rows, refutation vector
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[1], "0.0\t0.6\t0.1\t0.2");
    assert_eq!(lines[11], "1.0\t1.0\t1.0\t1.0");
    assert_eq!(lines[12], "descr[pi_L] = (0.4, 0.9, 0.8)");
}

#[test]
fn sequent_truth_and_exit_codes() {
    let model = fixture("case-study-model.json");
    let out = mvmt(&["sequent", &model, "PP: pi_L & pi_C |- pi_L"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "true");

    let out = mvmt(&["sequent", &model, "PP: pi_L |- pi_C"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "false");

    let out = mvmt(&["sequent", &model, "PP: pi_L |-"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn countermodel_is_found_and_deterministic() {
    let args = [
        "countermodel",
        "SD: p |- q",
        "--max-states",
        "1",
        "--lattice",
        "lukasiewicz:2",
        "--exhaustive",
    ];
    let first = mvmt(&args);
    assert_eq!(first.status.code(), Some(1));
    assert!(stdout(&first).contains("countermodel found"));
    let second = mvmt(&args);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn countermodel_exhausts_on_an_axiom_instance() {
    let out = mvmt(&[
        "countermodel",
        "SD: p & q |- p",
        "--max-states",
        "1",
        "--lattice",
        "lukasiewicz:2",
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("exhausted"));
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn concepts_count_matches_brute_force_oracle() {
    let out = mvmt(&["concepts", &fixture("tiny-context.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // oracle: scan all candidate pairs of the same context
    let polarity = mvmt::formats::load_context(
        std::path::Path::new(&fixture("tiny-context.json")),
    )
    .unwrap();
    let oracle = polarity
        .enumerate_concepts(mvmt::polarity::EnumerationMode::Exhaustive, 1e6)
        .unwrap();
    assert!(text.starts_with(&format!("{} concepts", oracle.len())), "{text}");
}

#[test]
fn case_study_report_is_byte_identical_across_runs() {
    let a = mvmt(&["case-study", "--report", "--output", "csv"]);
    let b = mvmt(&["case-study", "--report", "--output", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let csv = stdout(&a);
    assert!(csv.starts_with("section,quantity,computed,published,match\n"));
    assert!(csv.contains("modal-row,val dmd_pi_C beta=0.0 zC,0.2,0.2,yes"));
}
