//! Runs the full verification table programmatically: every published
//! reference value against the simulation, with the channel-oracle column
//! for the local-clone family. Flagged rows mark reference values that the
//! simulation and the independent oracle jointly contradict.
//!
//! Run with: `cargo run -p ghz-broadcast --example verify_suite`

use ghz_broadcast::cli::{cmd_verify, Command, OutputFormat, RowStatus, RunConfig, StateSource};

fn main() -> Result<(), ghz_broadcast::Error> {
    let config = RunConfig {
        command: Command::Verify,
        mode: None,
        source: StateSource::BuiltinGhz,
        format: OutputFormat::Table,
        tolerance: 1e-9,
    };
    let report = cmd_verify(&config)?;
    print!("{report}");

    let flagged: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| r.status == RowStatus::Flag)
        .map(|r| r.label.as_str())
        .collect();
    if !flagged.is_empty() {
        println!("\nflagged rows (simulation and oracle agree, reference differs):");
        for label in flagged {
            println!("  - {label}");
        }
    }
    std::process::exit(i32::from(report.has_failures()));
}
