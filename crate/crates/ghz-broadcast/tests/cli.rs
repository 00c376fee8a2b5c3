//! End-to-end checks of the binary: flag handling, exit codes, and the
//! round trip of structured-text output back into library types.

use std::io::Write;
use std::process::Command;

use ghz_broadcast::cli::{broadcast_from_document, CloneMode, VerifyReport};
use ghz_broadcast::entanglement::full_report;
use ghz_broadcast::textfmt::Document;
use ghz_broadcast::{serialize_state, EntanglementReport, ThreeQubitState};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ghz-broadcast"))
}

#[test]
fn analyze_text_output_parses_back() {
    let out = bin().args(["analyze", "--ghz", "--format", "text"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = EntanglementReport::parse_text(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let direct = full_report(&ThreeQubitState::ghz().density()).unwrap();
    assert_eq!(report, direct);
}

#[test]
fn broadcast_text_output_parses_back() {
    let out = bin()
        .args(["broadcast", "--mode", "local", "--ghz", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let (mode, result) = broadcast_from_document(&doc).unwrap();
    assert_eq!(mode, CloneMode::Local);
    assert!((result.originals.mat()[(0, 0)].re - 7.0 / 24.0).abs() < 1e-12);
}

#[test]
fn verify_text_output_parses_back() {
    let out = bin().args(["verify", "--format", "text"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = VerifyReport::parse_text(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(!report.has_failures());
    assert_eq!(report.rows.len(), 23);
}

#[test]
fn broadcast_reads_a_state_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{}", serialize_state(&ThreeQubitState::ghz())).unwrap();
    let out = bin()
        .args(["broadcast", "--mode", "nonlocal", "--state"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("fidelity(originals) = 0.611111111111 (= 11/18)"), "{stdout}");
}

#[test]
fn product_state_analysis_shows_no_entanglement() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "1 0\n{}", "0 0\n".repeat(7)).unwrap();
    let out = bin().args(["analyze", "--state"]).arg(file.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("E3      = 0"), "{stdout}");
}

#[test]
fn broadcasting_a_product_state_yields_product_clones() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "1 0\n{}", "0 0\n".repeat(7)).unwrap();
    let out = bin()
        .args(["broadcast", "--mode", "local", "--state"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("E3      = 0"), "{stdout}");
    // diag of the single-qubit channel output, (5/6)^3 at |000>
    assert!(stdout.contains("0.578703703704"), "{stdout}");
}

#[test]
fn usage_errors_exit_2() {
    // missing state source
    let out = bin().arg("analyze").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // both sources at once
    let out = bin().args(["analyze", "--ghz", "--state", "x.txt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // broadcast without a mode
    let out = bin().args(["broadcast", "--ghz"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // unknown flag
    let out = bin().args(["verify", "--frmat", "text"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // non-positive tolerance
    let out = bin().args(["verify", "--tolerance", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = bin().args(["analyze", "--state", "/no/such/file.txt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
