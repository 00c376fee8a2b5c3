//! Dense complex linear algebra on composite quantum systems.
//!
//! Every object carries an ordered list of subsystem dimensions. For a
//! register with dims `[d1, d2, ..., dn]` the flat index of the basis state
//! `|q1 q2 ... qn>` is `q1*(d2*...*dn) + q2*(d3*...*dn) + ... + qn`, i.e.
//! subsystem 1 is the most significant digit. Subsystem labels in the public
//! API are 1-based throughout the crate, matching the physics convention of
//! calling the qubits 1, 2 and 3.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// State vectors must be normalized to within this tolerance.
pub const NORM_TOL: f64 = 1e-12;
/// Maximum allowed deviation from Hermiticity for a density matrix.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Maximum allowed deviation of a density-matrix trace from 1.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues of a density matrix may undershoot zero by roundoff only.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;
/// Isometry columns must be orthonormal to within this tolerance.
pub const ISOMETRY_TOL: f64 = 1e-12;
/// Quantities that are real by construction may carry at most this much
/// imaginary residue before the library reports a violation.
pub const IMAG_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The Pauli matrix for `axis` with the convention 1 -> x, 2 -> y, 3 -> z.
pub fn pauli(axis: usize) -> Result<CMatrix> {
    if !(1..=3).contains(&axis) {
        return Err(Error::InvalidArgument(format!(
            "Pauli axis must be 1 (x), 2 (y) or 3 (z), got {axis}"
        )));
    }
    Ok(pauli_unchecked(axis - 1))
}

/// Pauli matrix by 0-based axis; internal helper for loops over x, y, z.
pub(crate) fn pauli_unchecked(axis0: usize) -> CMatrix {
    let i = Complex64::new(0.0, 1.0);
    match axis0 {
        0 => CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
        1 => CMatrix::from_row_slice(2, 2, &[ZERO, -i, i, ZERO]),
        2 => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]),
        _ => unreachable!("axis0 out of range"),
    }
}

/// Complex identity matrix of size `n`.
pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Kronecker product. Subsystem dimensions concatenate: an operator on dims
/// `[a...]` tensored with one on dims `[b...]` acts on dims `[a..., b...]`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Largest elementwise absolute difference between two matrices.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch in max_abs_diff");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn check_dims(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "subsystem dimensions must be non-empty and positive, got {dims:?}"
        )));
    }
    Ok(dims.iter().product())
}

/// Flat-index strides of each subsystem (subsystem 1 most significant).
fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// Validates a 1-based permutation of `1..=n` and converts it to 0-based.
fn check_perm(perm: &[usize], n: usize) -> Result<Vec<usize>> {
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation must list all {n} subsystems, got {perm:?}"
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::InvalidArgument(format!(
                "invalid permutation {perm:?} of 1..={n}"
            )));
        }
        seen[p - 1] = true;
    }
    Ok(perm.iter().map(|&p| p - 1).collect())
}

/// Validates a 1-based keep-set (non-empty, strictly increasing, in range)
/// and converts it to 0-based.
fn check_keep(keep: &[usize], n: usize) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::InvalidArgument(
            "keep-set must not be empty".into(),
        ));
    }
    for w in keep.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidArgument(format!(
                "keep-set must be strictly increasing, got {keep:?}"
            )));
        }
    }
    if keep[0] == 0 || *keep.last().unwrap() > n {
        return Err(Error::InvalidArgument(format!(
            "keep-set {keep:?} out of range for {n} subsystems"
        )));
    }
    Ok(keep.iter().map(|&k| k - 1).collect())
}

/// Flat offsets spanned by the listed subsystems, enumerated in their own
/// big-endian order, expressed in the full index space.
fn subspace_offsets(dims: &[usize], subsys: &[usize]) -> Vec<usize> {
    let full_strides = strides(dims);
    let sub_dims: Vec<usize> = subsys.iter().map(|&s| dims[s]).collect();
    let total: usize = sub_dims.iter().product();
    let mut offsets = Vec::with_capacity(total);
    for flat in 0..total {
        let mut rem = flat;
        let mut off = 0;
        for k in (0..sub_dims.len()).rev() {
            off += (rem % sub_dims[k]) * full_strides[subsys[k]];
            rem /= sub_dims[k];
        }
        offsets.push(off);
    }
    offsets
}

/// For a 0-based permutation, the map `out_flat -> in_flat` together with the
/// permuted dimension list.
fn permutation_index_map(dims: &[usize], perm0: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let out_dims: Vec<usize> = perm0.iter().map(|&p| dims[p]).collect();
    let in_strides = strides(dims);
    let total: usize = dims.iter().product();
    let mut map = vec![0usize; total];
    for (out_flat, slot) in map.iter_mut().enumerate() {
        let mut rem = out_flat;
        let mut in_flat = 0;
        for k in (0..out_dims.len()).rev() {
            in_flat += (rem % out_dims[k]) * in_strides[perm0[k]];
            rem /= out_dims[k];
        }
        *slot = in_flat;
    }
    (out_dims, map)
}

/// Partial trace of a raw square matrix over the complement of `keep0`
/// (0-based, strictly increasing). No density-matrix validation.
pub(crate) fn partial_trace_raw(mat: &CMatrix, dims: &[usize], keep0: &[usize]) -> CMatrix {
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep0.contains(k)).collect();
    let keep_offsets = subspace_offsets(dims, keep0);
    let traced_offsets = subspace_offsets(dims, &traced);
    let out_dim = keep_offsets.len();
    let mut out = CMatrix::zeros(out_dim, out_dim);
    for (r, &ro) in keep_offsets.iter().enumerate() {
        for (c, &co) in keep_offsets.iter().enumerate() {
            let mut acc = ZERO;
            for &to in &traced_offsets {
                acc += mat[(ro + to, co + to)];
            }
            out[(r, c)] = acc;
        }
    }
    out
}

/// A pure state over a composite system, normalized by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: CVector,
    dims: Vec<usize>,
}

impl StateVector {
    /// Wraps an amplitude vector. The length must equal the product of
    /// `dims` and the 2-norm must be 1 within [`NORM_TOL`].
    pub fn new(amps: CVector, dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&dims)?;
        if amps.len() != total {
            return Err(Error::DimensionMismatch(format!(
                "amplitude vector has length {}, dims {:?} require {}",
                amps.len(),
                dims,
                total
            )));
        }
        let norm = amps.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NumericalViolation(format!(
                "state vector norm {norm} deviates from 1 by more than {NORM_TOL:e}"
            )));
        }
        Ok(Self { amps, dims })
    }

    /// The computational basis state with the given flat index.
    pub fn basis(dims: Vec<usize>, index: usize) -> Result<Self> {
        let total = check_dims(&dims)?;
        if index >= total {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for dimension {total}"
            )));
        }
        let mut amps = CVector::zeros(total);
        amps[index] = ONE;
        Ok(Self { amps, dims })
    }

    pub fn amps(&self) -> &CVector {
        &self.amps
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amp(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    /// Tensor product; subsystem dimensions concatenate.
    pub fn tensor(&self, other: &Self) -> Self {
        let amps = self.amps.kronecker(&other.amps);
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self { amps, dims }
    }

    /// Reinterprets the subsystem structure without touching amplitudes.
    /// The product of `dims` must equal the current total dimension.
    pub fn with_dims(self, dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&dims)?;
        if total != self.amps.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot reinterpret a {}-dimensional state with dims {:?}",
                self.amps.len(),
                dims
            )));
        }
        Ok(Self { amps: self.amps, dims })
    }

    /// Reorders subsystems so that output subsystem `k` is input subsystem
    /// `perm[k-1]` (1-based labels).
    pub fn permute_subsystems(&self, perm: &[usize]) -> Result<Self> {
        let perm0 = check_perm(perm, self.dims.len())?;
        let (out_dims, map) = permutation_index_map(&self.dims, &perm0);
        let amps = CVector::from_fn(self.amps.len(), |o, _| self.amps[map[o]]);
        Ok(Self { amps, dims: out_dims })
    }

    /// The reduced density matrix over the kept subsystems (1-based,
    /// strictly increasing), i.e. the partial trace of `|psi><psi|` over
    /// everything else, computed directly from the amplitudes.
    pub fn reduced_density(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let keep0 = check_keep(keep, self.dims.len())?;
        let traced: Vec<usize> = (0..self.dims.len()).filter(|k| !keep0.contains(k)).collect();
        let keep_offsets = subspace_offsets(&self.dims, &keep0);
        let traced_offsets = subspace_offsets(&self.dims, &traced);
        let out_dim = keep_offsets.len();
        let norm_sq = self.amps.norm_squared();
        let mut mat = CMatrix::zeros(out_dim, out_dim);
        for (r, &ro) in keep_offsets.iter().enumerate() {
            for (c, &co) in keep_offsets.iter().enumerate() {
                let mut acc = ZERO;
                for &to in &traced_offsets {
                    acc += self.amps[ro + to] * self.amps[co + to].conj();
                }
                mat[(r, c)] = acc / norm_sq;
            }
        }
        let dims = keep0.iter().map(|&k| self.dims[k]).collect();
        Ok(DensityMatrix::trusted(mat, dims))
    }

    /// The projector `|psi><psi|` as a density matrix.
    pub fn to_density(&self) -> DensityMatrix {
        let norm_sq = self.amps.norm_squared();
        let mat = CMatrix::from_fn(self.amps.len(), self.amps.len(), |r, c| {
            self.amps[r] * self.amps[c].conj() / norm_sq
        });
        DensityMatrix::trusted(mat, self.dims.clone())
    }
}

/// A density operator over a composite system. Construction through [`new`]
/// checks Hermiticity, unit trace and positivity; the stored matrix is the
/// Hermitian part of the input, so later traces against Hermitian
/// observables are real to machine precision.
///
/// [`new`]: DensityMatrix::new
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates and wraps a matrix as a density operator.
    pub fn new(mat: CMatrix, dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&dims)?;
        if mat.nrows() != total || mat.ncols() != total {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, dims {:?} require {}x{}",
                mat.nrows(),
                mat.ncols(),
                dims,
                total,
                total
            )));
        }
        let asym = mat
            .iter()
            .enumerate()
            .map(|(k, z)| {
                let (r, c) = (k % total, k / total);
                (z - mat[(c, r)].conj()).norm()
            })
            .fold(0.0, f64::max)
            / 2.0;
        if asym > HERMITICITY_TOL {
            return Err(Error::NumericalViolation(format!(
                "matrix deviates from Hermiticity by {asym:e}"
            )));
        }
        let herm = (&mat + mat.adjoint()).scale(0.5);
        let out = Self { mat: herm, dims };
        let trace = out.trace();
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::NumericalViolation(format!(
                "trace {trace} deviates from 1 by more than {TRACE_TOL:e}"
            )));
        }
        let min_eig = out.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min_eig < EIGENVALUE_FLOOR {
            return Err(Error::NumericalViolation(format!(
                "matrix has eigenvalue {min_eig:e} below the floor {EIGENVALUE_FLOOR:e}"
            )));
        }
        Ok(out)
    }

    /// Wraps output of an operation that preserves validity (partial trace,
    /// permutation, projectors of normalized states). Checked in debug
    /// builds.
    pub(crate) fn trusted(mat: CMatrix, dims: Vec<usize>) -> Self {
        let out = Self { mat, dims };
        debug_assert!(out.validate().is_ok(), "trusted density matrix invalid");
        out
    }

    /// `|psi><psi|` for a normalized state.
    pub fn from_pure(psi: &StateVector) -> Self {
        psi.to_density()
    }

    /// The maximally mixed state `I/d`.
    pub fn maximally_mixed(dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&dims)?;
        let mat = identity(total).scale(1.0 / total as f64);
        Ok(Self { mat, dims })
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Trace, as a real number (the stored matrix is exactly Hermitian).
    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    /// Eigenvalues of the operator (real; unsorted).
    pub fn eigenvalues(&self) -> Vec<f64> {
        SymmetricEigen::new(self.mat.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect()
    }

    /// Re-runs the construction checks on the stored matrix.
    pub fn validate(&self) -> Result<()> {
        Self::new(self.mat.clone(), self.dims.clone()).map(|_| ())
    }

    /// `tr(rho * op)` for an operator on the same space.
    pub fn expectation(&self, op: &CMatrix) -> Result<Complex64> {
        let d = self.dim();
        if op.nrows() != d || op.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}x{}, state dimension is {}",
                op.nrows(),
                op.ncols(),
                d
            )));
        }
        let mut acc = ZERO;
        for r in 0..d {
            for c in 0..d {
                acc += self.mat[(r, c)] * op[(c, r)];
            }
        }
        Ok(acc)
    }

    /// Partial trace keeping the listed subsystems (1-based, strictly
    /// increasing) in their original relative order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        let keep0 = check_keep(keep, self.dims.len())?;
        let mat = partial_trace_raw(&self.mat, &self.dims, &keep0);
        let dims = keep0.iter().map(|&k| self.dims[k]).collect();
        Ok(Self::trusted(mat, dims))
    }

    /// Reorders subsystems so that output subsystem `k` is input subsystem
    /// `perm[k-1]` (1-based labels).
    pub fn permute_subsystems(&self, perm: &[usize]) -> Result<Self> {
        let perm0 = check_perm(perm, self.dims.len())?;
        let (out_dims, map) = permutation_index_map(&self.dims, &perm0);
        let mat = CMatrix::from_fn(self.dim(), self.dim(), |r, c| self.mat[(map[r], map[c])]);
        Ok(Self::trusted(mat, out_dims))
    }

    /// Tensor product; subsystem dimensions concatenate.
    pub fn tensor(&self, other: &Self) -> Self {
        let mat = kron(&self.mat, &other.mat);
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self::trusted(mat, dims)
    }

    /// Reinterprets the subsystem structure without touching entries.
    pub fn with_dims(self, dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&dims)?;
        if total != self.mat.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot reinterpret a {}-dimensional operator with dims {:?}",
                self.mat.nrows(),
                dims
            )));
        }
        Ok(Self { mat: self.mat, dims })
    }
}

/// A norm-preserving linear map into a larger space: a rectangular matrix
/// with orthonormal columns, together with the subsystem structure of the
/// output space.
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    mat: CMatrix,
    out_dims: Vec<usize>,
}

impl Isometry {
    /// Validates `V^dagger V = I` within [`ISOMETRY_TOL`] and that the row
    /// count matches the product of `out_dims`.
    pub fn new(mat: CMatrix, out_dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&out_dims)?;
        if mat.nrows() != total {
            return Err(Error::DimensionMismatch(format!(
                "isometry has {} rows, output dims {:?} require {}",
                mat.nrows(),
                out_dims,
                total
            )));
        }
        if mat.ncols() > mat.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "isometry cannot map dimension {} into smaller dimension {}",
                mat.ncols(),
                mat.nrows()
            )));
        }
        let gram = mat.adjoint() * &mat;
        let dev = max_abs_diff(&gram, &identity(mat.ncols()));
        if dev > ISOMETRY_TOL {
            return Err(Error::NumericalViolation(format!(
                "columns deviate from orthonormality by {dev:e}"
            )));
        }
        Ok(Self { mat, out_dims })
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn input_dim(&self) -> usize {
        self.mat.ncols()
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.out_dims
    }

    /// Applies the isometry: `|out> = V |psi>`. Norm is preserved.
    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        if psi.dim() != self.input_dim() {
            return Err(Error::DimensionMismatch(format!(
                "isometry expects input dimension {}, state has {}",
                self.input_dim(),
                psi.dim()
            )));
        }
        let amps = &self.mat * psi.amps();
        StateVector::new(amps, self.out_dims.clone())
    }
}

/// The overlap `<psi| rho |psi>`, clamped to `[0, 1]`.
pub fn fidelity(psi: &StateVector, rho: &DensityMatrix) -> Result<f64> {
    if psi.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} does not match operator dimension {}",
            psi.dim(),
            rho.dim()
        )));
    }
    let value = psi.amps().dotc(&(rho.mat() * psi.amps()));
    if value.im.abs() > IMAG_TOL {
        return Err(Error::NumericalViolation(format!(
            "fidelity has imaginary residue {:e}",
            value.im
        )));
    }
    Ok(value.re.clamp(0.0, 1.0))
}
