use std::process::{Command, Output};

use gamme::pitch::{Pitch, PitchRatio};
use gamme::scl::parse_scl;
use gamme::verify::{all_passed, run_all, CheckReport, Witness};

fn gamme(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamme"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn success_exits_zero() {
    for args in [
        &["notes"][..],
        &["families"],
        &["enumerate", "3"],
        &["types", "4"],
        &["modes", "4", "t3", "--tonality", "ré"],
        &["scale"],
        &["scale", "G4_15", "--tonality", "sib"],
        &["transpose", "G3_1", "la"],
        &["export", "G4_15"],
        &["verify"],
        &["--help"],
    ] {
        let o = gamme(args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["notes", "--from", "3", "--to", "1"][..],
        &["families", "--k-max", "31"],
        &["families", "--k-max", "0"],
        &["enumerate", "7"],
        &["enumerate", "3", "--tonality", "xyz"],
        &["modes", "4", "t9"],
        &["scale", "G9_1"],
        &["notes", "--format", "scl"],
        &["frobnicate"],
        &["notes", "--format", "yaml"],
    ] {
        let o = gamme(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn failing_check_sets_the_verdict() {
    let mut reports = run_all(5);
    assert!(all_passed(&reports));
    reports.push(CheckReport {
        name: "synthetic".into(),
        range: None,
        passed: false,
        informational: false,
        witnesses: vec![Witness {
            ok: false,
            detail: "forced".into(),
        }],
    });
    assert!(!all_passed(&reports));
}

#[test]
fn verify_reports_published_table_as_note() {
    let o = gamme(&["verify", "--k-max", "20"]);
    let text = stdout(&o);
    assert!(text.contains("NOTE  published lattice index table"));
    assert!(text.trim_end().ends_with("all checks passed"));
    assert!(!text.contains("\nFAIL  "));
}

#[test]
fn export_writes_a_readable_scl_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dorien.scl");
    let o = gamme(&[
        "export",
        "G4_16",
        "--tonality",
        "ré",
        "--description",
        "dorian on re",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let f = parse_scl(&text).unwrap();
    assert_eq!(f.description, "dorian on re");
    assert_eq!(f.ratios.len(), 7);
    assert_eq!(f.ratios[0], Pitch::new(2, 0).ratio());
    assert_eq!(f.ratios[6], PitchRatio::OCTAVE);
}

#[test]
fn unwritable_output_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.txt");
    let o = gamme(&["notes", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_is_deterministic_and_parses() {
    let a = stdout(&gamme(&["families", "--k-max", "10", "--format", "json"]));
    let b = stdout(&gamme(&["families", "--k-max", "10", "--format", "json"]));
    assert_eq!(a, b);
    assert!(a.contains("\"count\": 760365888182828026538367852"));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert_eq!(v[4]["p"], 12);
}

#[test]
fn ascii_flag_avoids_non_ascii_output() {
    let o = gamme(&["--ascii", "notes", "--from", "-15", "--to", "19"]);
    let text = stdout(&o);
    assert!(text.is_ascii(), "{text}");
    assert!(text.contains("fa##"));
    assert!(text.contains("re"));
}

#[test]
fn enumerate_lists_every_pentatonic_structure() {
    let o = gamme(&["enumerate", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 11);
    assert!(text.contains("SSTST"));
}
