//! Broadcasts the GHZ state with three independent local cloning machines
//! and shows how much entanglement each three-qubit clone keeps.
//!
//! Run with: `cargo run -p ghz-broadcast --example local_broadcast`

use ghz_broadcast::{broadcast_local, ThreeQubitState};

fn main() -> Result<(), ghz_broadcast::Error> {
    let ghz = ThreeQubitState::ghz();
    let result = broadcast_local(&ghz)?;

    println!("local broadcast of the GHZ state\n");
    println!("clone diagonal at |000>:          {:.12}", result.originals.mat()[(0, 0)].re);
    println!("clone diagonal at |001>..|110>:   {:.12}", result.originals.mat()[(1, 1)].re);
    println!("clone off-diagonal <000|rho|111>: {:.12}", result.originals.mat()[(0, 7)].re);
    println!();
    println!("E3 of each clone:  {:.12}", result.report_originals.e3);
    println!("E2(1,2) of each clone: {:.12}", result.report_originals.e2[0]);
    println!("fidelity to the input: {:.12}", result.fidelity_originals);

    // Originals and copies come out in the same state.
    let gap = ghz_broadcast::max_abs_diff(result.originals.mat(), result.copies.mat());
    println!("\noriginals vs copies: max deviation {gap:.2e}");

    // Entanglement survives, but reduced: 0 < E3(clone) < E3(GHZ) = 1.
    assert!(result.report_originals.e3 > 0.0);
    assert!(result.report_originals.e3 < 1.0);
    Ok(())
}
