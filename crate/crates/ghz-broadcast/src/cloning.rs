//! Cloner isometries and the two entanglement-broadcasting pipelines.
//!
//! The local pipeline sends each of the three qubits through its own
//! universal cloning machine (a qubit-to-qubit-pair cloner with a
//! two-dimensional machine register). The non-local pipeline treats the
//! three-qubit state as a single 8-dimensional system and clones it as a
//! whole. Both produce a six-qubit output holding two approximate copies of
//! the input, ordered `(1a, 1b, 2a, 2b, 3a, 3b)` where the `a` slots carry
//! the original qubits and the `b` slots the copies.
//!
//! Cloners are stored as isometries from the input system alone; the blank
//! copy and the machine's initial state are absorbed into the map, and the
//! machine is traced out after copying. The local machine basis puts "up" at
//! index 0 and "down" at index 1; the non-local machine state tagged by
//! input basis vector `j` sits at index `j - 1`.

use num_complex::Complex64;

use crate::entanglement::{full_report, EntanglementReport};
use crate::error::{Error, Result};
use crate::states::ThreeQubitState;
use crate::tensor::{fidelity, kron, partial_trace_raw, CMatrix, DensityMatrix, Isometry};

/// Which three-qubit clone to pull out of the six-qubit output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloneSlot {
    /// The original qubits, slots (1, 3, 5).
    Originals,
    /// The copy qubits, slots (2, 4, 6).
    Copies,
}

/// Output of one broadcasting pipeline.
#[derive(Debug, Clone)]
pub struct BroadcastResult {
    /// Six-qubit joint state of originals and copies, machines traced out,
    /// subsystem order `(1a, 1b, 2a, 2b, 3a, 3b)`.
    pub six_qubit: DensityMatrix,
    /// Reduced state of the original qubits (slots 1, 3, 5).
    pub originals: DensityMatrix,
    /// Reduced state of the copy qubits (slots 2, 4, 6).
    pub copies: DensityMatrix,
    pub report_originals: EntanglementReport,
    pub report_copies: EntanglementReport,
    /// Overlap of `originals` with the pipeline's own input state.
    pub fidelity_originals: f64,
    /// Overlap of `copies` with the pipeline's own input state.
    pub fidelity_copies: f64,
}

/// The qubit cloner as an isometry from one qubit into (original, copy,
/// machine), each two-dimensional:
///
/// ```text
/// |0>  ->  sqrt(2/3) |00>|up>   + sqrt(1/6) (|10> + |01>) |down>
/// |1>  ->  sqrt(2/3) |11>|down> + sqrt(1/6) (|10> + |01>) |up>
/// ```
pub fn local_cloner_isometry() -> Isometry {
    let a = Complex64::new((2.0f64 / 3.0).sqrt(), 0.0);
    let b = Complex64::new((1.0f64 / 6.0).sqrt(), 0.0);
    let mut mat = CMatrix::zeros(8, 2);
    // column for |0>: entries at |0 0 up>, |0 1 down>, |1 0 down>
    mat[(0b000, 0)] = a;
    mat[(0b011, 0)] = b;
    mat[(0b101, 0)] = b;
    // column for |1>: entries at |1 1 down>, |0 1 up>, |1 0 up>
    mat[(0b111, 1)] = a;
    mat[(0b010, 1)] = b;
    mat[(0b100, 1)] = b;
    Isometry::new(mat, vec![2, 2, 2]).expect("cloner columns are orthonormal")
}

/// The N-dimensional cloner as an isometry from the input system into
/// (original, copy, machine), each N-dimensional. Basis vector `i` maps to
///
/// ```text
/// c |ii>|X_i> + d * sum_{j != i} (|ij> + |ji>) |X_j>
/// ```
///
/// with `c^2 = 2/(N+1)` and `d^2 = 1/(2(N+1))`.
pub fn nonlocal_cloner_isometry(n: usize) -> Result<Isometry> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "cloner dimension must be at least 2, got {n}"
        )));
    }
    let c = Complex64::new((2.0 / (n as f64 + 1.0)).sqrt(), 0.0);
    let d = Complex64::new((1.0 / (2.0 * (n as f64 + 1.0))).sqrt(), 0.0);
    let mut mat = CMatrix::zeros(n * n * n, n);
    for i in 0..n {
        mat[(i * n * n + i * n + i, i)] = c;
        for j in 0..n {
            if j != i {
                mat[(i * n * n + j * n + j, i)] = d; // |i j>|X_j>
                mat[(j * n * n + i * n + j, i)] = d; // |j i>|X_j>
            }
        }
    }
    Isometry::new(mat, vec![n, n, n])
}

/// The single-qubit clone channel: clone one qubit, discard the copy and the
/// machine. Acts linearly on an arbitrary 2x2 operator, so it can be applied
/// to off-diagonal basis operators as well as to states.
pub fn clone_channel(op: &CMatrix) -> Result<CMatrix> {
    if op.nrows() != 2 || op.ncols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "clone channel acts on 2x2 operators, got {}x{}",
            op.nrows(),
            op.ncols()
        )));
    }
    let v = local_cloner_isometry();
    let lifted = v.mat() * op * v.mat().adjoint();
    Ok(partial_trace_raw(&lifted, &[2, 2, 2], &[0]))
}

/// Applies the single-qubit clone channel to each qubit of a three-qubit
/// density matrix independently. This is the product-channel route to the
/// local pipeline's clone states: it composes the channel's responses to the
/// sixteen single-qubit basis operators instead of simulating the nine-qubit
/// joint state, so the two paths check each other.
pub fn clone_channel_product(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dims() != [2, 2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "expected dims [2, 2, 2], got {:?}",
            rho.dims()
        )));
    }
    // Channel responses to the four basis operators |a><b|.
    let mut responses = Vec::with_capacity(4);
    for a in 0..2 {
        for b in 0..2 {
            let mut e = CMatrix::zeros(2, 2);
            e[(a, b)] = Complex64::new(1.0, 0.0);
            responses.push(clone_channel(&e)?);
        }
    }
    let eps = |a: usize, b: usize| &responses[2 * a + b];
    let mut out = CMatrix::zeros(8, 8);
    for r in 0..8 {
        for s in 0..8 {
            let z = rho.mat()[(r, s)];
            if z.norm() == 0.0 {
                continue;
            }
            let term = kron(
                &kron(eps(r >> 2 & 1, s >> 2 & 1), eps(r >> 1 & 1, s >> 1 & 1)),
                eps(r & 1, s & 1),
            );
            out += term * z;
        }
    }
    DensityMatrix::new(out, vec![2, 2, 2])
}

/// Pulls one three-qubit clone out of a six-qubit output in the canonical
/// `(1a, 1b, 2a, 2b, 3a, 3b)` order.
pub fn extract_clone(rho6: &DensityMatrix, which: CloneSlot) -> Result<DensityMatrix> {
    if rho6.dims() != [2; 6] {
        return Err(Error::DimensionMismatch(format!(
            "expected a six-qubit state with dims [2; 6], got {:?}",
            rho6.dims()
        )));
    }
    match which {
        CloneSlot::Originals => rho6.partial_trace(&[1, 3, 5]),
        CloneSlot::Copies => rho6.partial_trace(&[2, 4, 6]),
    }
}

fn assemble(six_qubit: DensityMatrix, input: &ThreeQubitState) -> Result<BroadcastResult> {
    six_qubit.validate()?;
    let originals = extract_clone(&six_qubit, CloneSlot::Originals)?;
    let copies = extract_clone(&six_qubit, CloneSlot::Copies)?;
    let report_originals = full_report(&originals)?;
    let report_copies = full_report(&copies)?;
    let fidelity_originals = fidelity(input.state_vector(), &originals)?;
    let fidelity_copies = fidelity(input.state_vector(), &copies)?;
    Ok(BroadcastResult {
        six_qubit,
        originals,
        copies,
        report_originals,
        report_copies,
        fidelity_originals,
        fidelity_copies,
    })
}

/// Clones each qubit with its own local cloning machine. The joint pure
/// state lives on nine subsystems ordered `(1a, 1b, x1, 2a, 2b, x2, 3a, 3b,
/// x3)`; tracing out the three machines leaves the six-qubit output in
/// canonical order.
pub fn broadcast_local(psi: &ThreeQubitState) -> Result<BroadcastResult> {
    let v = local_cloner_isometry();
    let v3 = Isometry::new(
        kron(&kron(v.mat(), v.mat()), v.mat()),
        vec![2; 9],
    )?;
    let total = v3.apply(psi.state_vector())?;
    let six_qubit = total.reduced_density(&[1, 2, 4, 5, 7, 8])?;
    assemble(six_qubit, psi)
}

/// Clones the three-qubit state as a single 8-dimensional system. The
/// 8-dimensional original and copy are reinterpreted as three qubits each
/// and interleaved into the canonical `(1a, 1b, 2a, 2b, 3a, 3b)` order.
pub fn broadcast_nonlocal(psi: &ThreeQubitState) -> Result<BroadcastResult> {
    let v = nonlocal_cloner_isometry(8)?;
    let flat = psi.state_vector().clone().with_dims(vec![8])?;
    let total = v.apply(&flat)?;
    let pair = total.reduced_density(&[1, 2])?; // (original, copy), each 8-dim
    let six_qubit = pair
        .with_dims(vec![2; 6])? // (1a, 2a, 3a, 1b, 2b, 3b)
        .permute_subsystems(&[1, 4, 2, 5, 3, 6])?;
    assemble(six_qubit, psi)
}
