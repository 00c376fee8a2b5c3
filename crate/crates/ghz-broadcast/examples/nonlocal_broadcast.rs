//! Broadcasts the GHZ state through the single 8-dimensional cloner and
//! compares the result with the local pipeline: cloning the state as a
//! whole preserves much more entanglement.
//!
//! Run with: `cargo run -p ghz-broadcast --example nonlocal_broadcast`

use ghz_broadcast::{broadcast_local, broadcast_nonlocal, ThreeQubitState};

fn main() -> Result<(), ghz_broadcast::Error> {
    let ghz = ThreeQubitState::ghz();
    let nonlocal = broadcast_nonlocal(&ghz)?;
    let local = broadcast_local(&ghz)?;

    println!("nonlocal broadcast of the GHZ state\n");
    println!("clone diagonal at |000>:          {:.12}", nonlocal.originals.mat()[(0, 0)].re);
    println!("clone diagonal at |001>..|110>:   {:.12}", nonlocal.originals.mat()[(1, 1)].re);
    println!("clone off-diagonal <000|rho|111>: {:.12}", nonlocal.originals.mat()[(0, 7)].re);
    println!();
    println!("{:<22} {:>14} {:>14}", "", "nonlocal", "local");
    println!(
        "{:<22} {:>14.10} {:>14.10}",
        "E3 of each clone", nonlocal.report_originals.e3, local.report_originals.e3
    );
    println!(
        "{:<22} {:>14.10} {:>14.10}",
        "E2(1,2) of each clone", nonlocal.report_originals.e2[0], local.report_originals.e2[0]
    );
    println!(
        "{:<22} {:>14.10} {:>14.10}",
        "fidelity to the input", nonlocal.fidelity_originals, local.fidelity_originals
    );

    assert!(nonlocal.report_originals.e3 > local.report_originals.e3);
    assert!(nonlocal.fidelity_originals > local.fidelity_originals);
    println!("\nthe nonlocal cloner wins on every column");
    Ok(())
}
