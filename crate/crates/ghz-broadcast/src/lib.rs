//! Entanglement of three-qubit states and its broadcasting through quantum
//! cloning.
//!
//! The crate simulates, in dense double-precision complex arithmetic:
//!
//! - the Pauli-expansion data of any three-qubit density matrix (coherence
//!   vectors, pair and triple correlation tensors), the entanglement tensors
//!   obtained by subtracting all factorized contributions, and the scalar
//!   measures `E2` (pair) and `E3` (three-qubit) built from them
//!   ([`entanglement`]);
//! - two ways of copying a three-qubit state with universal cloning
//!   machines: qubit-by-qubit with three local cloners, or as a single
//!   8-dimensional system with one non-local cloner ([`cloning`]). Either
//!   pipeline yields a six-qubit state carrying two approximate clones,
//!   whose entanglement and fidelity to the input quantify how much
//!   entanglement survives the copying.
//!
//! Conventions, fixed once for the whole crate: basis index of
//! `|q1 q2 ... qn>` is big-endian (subsystem 1 most significant); subsystem
//! and qubit labels in public APIs are 1-based; Pauli axes are 1 = x, 2 = y,
//! 3 = z.
//!
//! ```
//! use ghz_broadcast::{broadcast_nonlocal, full_report, ThreeQubitState};
//!
//! let ghz = ThreeQubitState::ghz();
//! let report = full_report(&ghz.density()).unwrap();
//! assert!((report.e3 - 1.0).abs() < 1e-12);
//!
//! let result = broadcast_nonlocal(&ghz).unwrap();
//! assert!((result.fidelity_copies - 11.0 / 18.0).abs() < 1e-12);
//! ```
//!
//! The `examples/` directory exercises each capability as a runnable
//! program; the `ghz-broadcast` binary exposes the same functionality as
//! `analyze`, `broadcast` and `verify` subcommands.

pub mod cli;
pub mod cloning;
pub mod entanglement;
mod error;
mod render;
pub mod sample;
pub mod states;
pub mod tensor;
pub mod textfmt;

pub use cloning::{
    broadcast_local, broadcast_nonlocal, clone_channel, clone_channel_product, extract_clone,
    local_cloner_isometry, nonlocal_cloner_isometry, BroadcastResult, CloneSlot,
};
pub use entanglement::{
    coherence_vector, correlation_tensor2, correlation_tensor3, e2, e3, full_report, m_tensor2,
    m_tensor3, CoherenceVector, CorrelationTensor2, CorrelationTensor3, EntanglementReport,
};
pub use error::{Error, ParseError, Result};
pub use states::{basis_index, basis_label, parse_state, serialize_state, ThreeQubitState};
pub use tensor::{
    fidelity, kron, max_abs_diff, pauli, CMatrix, CVector, DensityMatrix, Isometry, StateVector,
};
