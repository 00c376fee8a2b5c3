//! Correlation data and entanglement measures for three-qubit density
//! matrices.
//!
//! A three-qubit density operator is determined by its expansion in tensor
//! products of Pauli matrices: the per-qubit coherence vectors
//! `lambda_i(m) = tr(rho sigma_i^(m))`, the pair correlation tensors
//! `K_ij(m,n)` and the triple correlation tensor `K_ijk(1,2,3)`. Subtracting
//! every factorized (lower-order) contribution turns the correlation tensors
//! into entanglement tensors `M`, which vanish on product states:
//!
//! ```text
//! M_ij(m,n)    = K_ij(m,n) - lambda_i(m) lambda_j(n)
//! M_ijk(1,2,3) = K_ijk - lambda_i(1) M_jk(2,3) - lambda_j(2) M_ik(1,3)
//!                      - lambda_k(3) M_ij(1,2) - lambda_i(1) lambda_j(2) lambda_k(3)
//! ```
//!
//! The scalar measures are the squared norms `E2(m,n) = sum M_ij(m,n)^2 / 3`
//! and `E3 = sum M_ijk^2 / 4`, both 0 on product states and 1 on maximally
//! entangled states.
//!
//! Axis indices in the tensor types are 0-based arrays over x, y, z; qubit
//! labels `m`, `n` in the API are 1-based.

// index loops over multiple tensors at once read better than enumerate chains
#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::sync::LazyLock;

use num_complex::Complex64;

use crate::error::{Error, ParseError, Result};
use crate::render;
use crate::tensor::{identity, kron, pauli_unchecked, CMatrix, DensityMatrix, IMAG_TOL};
use crate::textfmt::{num_array, Document, Value};

/// Measures and tensor entries may leave their guaranteed range by at most
/// this much before the library reports a violation.
pub const MEASURE_RANGE_TOL: f64 = 1e-9;

pub type Tensor2 = [[f64; 3]; 3];
pub type Tensor3 = [[[f64; 3]; 3]; 3];

/// Bloch vector of one qubit's reduced state; entries are the x, y, z Pauli
/// expectation values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceVector(pub [f64; 3]);

impl CoherenceVector {
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Joint Pauli expectation values of an ordered qubit pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTensor2(pub Tensor2);

/// Joint Pauli expectation values of all three qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTensor3(pub Tensor3);

/// The ordered qubit pairs, in the order used by every per-pair array in
/// this module: (1,2), (1,3), (2,3).
pub const PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

/// Index of an ordered pair `(m, n)` with `1 <= m < n <= 3` into [`PAIRS`].
pub fn pair_index(m: usize, n: usize) -> Result<usize> {
    PAIRS
        .iter()
        .position(|&p| p == (m, n))
        .ok_or_else(|| Error::InvalidArgument(format!(
            "qubit pair must be one of (1,2), (1,3), (2,3), got ({m},{n})"
        )))
}

static PAULI: LazyLock<[CMatrix; 3]> =
    LazyLock::new(|| [pauli_unchecked(0), pauli_unchecked(1), pauli_unchecked(2)]);

/// Tensor product over the three qubit slots with `sigma_axis` (0-based axis)
/// at the listed slots (0-based) and identity elsewhere.
fn slot_operator(slots: &[(usize, usize)]) -> CMatrix {
    let mut out = CMatrix::identity(1, 1);
    for slot in 0..3 {
        let factor = match slots.iter().find(|&&(s, _)| s == slot) {
            Some(&(_, axis)) => PAULI[axis].clone(),
            None => identity(2),
        };
        out = kron(&out, &factor);
    }
    out
}

fn check_three_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dims() != [2, 2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "expected a three-qubit density matrix with dims [2, 2, 2], got {:?}",
            rho.dims()
        )));
    }
    Ok(())
}

fn check_qubit(m: usize) -> Result<()> {
    if !(1..=3).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "qubit label must be 1, 2 or 3, got {m}"
        )));
    }
    Ok(())
}

fn check_pair(m: usize, n: usize) -> Result<()> {
    check_qubit(m)?;
    check_qubit(n)?;
    if m >= n {
        return Err(Error::InvalidArgument(format!(
            "pair must be ordered with m < n, got ({m},{n})"
        )));
    }
    Ok(())
}

/// Discards the imaginary residue of a trace that is real by construction,
/// after checking it is below [`IMAG_TOL`].
fn real_trace(value: Complex64, what: &str) -> Result<f64> {
    if value.im.abs() > IMAG_TOL {
        return Err(Error::NumericalViolation(format!(
            "{what} has imaginary residue {:e}",
            value.im
        )));
    }
    Ok(value.re)
}

fn check_magnitude(value: f64, what: &str) -> Result<f64> {
    if value.abs() > 1.0 + MEASURE_RANGE_TOL {
        return Err(Error::NumericalViolation(format!(
            "{what} = {value} exceeds magnitude 1 beyond tolerance"
        )));
    }
    Ok(value)
}

/// Coherence vector of qubit `m`: `lambda_i(m) = tr(rho sigma_i^(m))`.
pub fn coherence_vector(rho: &DensityMatrix, m: usize) -> Result<CoherenceVector> {
    check_three_qubits(rho)?;
    check_qubit(m)?;
    let mut v = [0.0; 3];
    for (axis, entry) in v.iter_mut().enumerate() {
        let op = slot_operator(&[(m - 1, axis)]);
        let value = real_trace(rho.expectation(&op)?, "coherence-vector entry")?;
        *entry = check_magnitude(value, "coherence-vector entry")?;
    }
    let out = CoherenceVector(v);
    if out.norm() > 1.0 + MEASURE_RANGE_TOL {
        return Err(Error::NumericalViolation(format!(
            "coherence vector of qubit {m} has norm {} > 1",
            out.norm()
        )));
    }
    Ok(out)
}

/// Pair correlation tensor `K_ij(m,n) = tr(rho sigma_i^(m) sigma_j^(n))`
/// for an ordered pair `m < n`.
pub fn correlation_tensor2(rho: &DensityMatrix, m: usize, n: usize) -> Result<CorrelationTensor2> {
    check_three_qubits(rho)?;
    check_pair(m, n)?;
    let mut k = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let op = slot_operator(&[(m - 1, i), (n - 1, j)]);
            let value = real_trace(rho.expectation(&op)?, "pair correlation entry")?;
            k[i][j] = check_magnitude(value, "pair correlation entry")?;
        }
    }
    Ok(CorrelationTensor2(k))
}

/// Triple correlation tensor `K_ijk = tr(rho sigma_i sigma_j sigma_k)`.
pub fn correlation_tensor3(rho: &DensityMatrix) -> Result<CorrelationTensor3> {
    check_three_qubits(rho)?;
    let mut k = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                let op = slot_operator(&[(0, i), (1, j), (2, l)]);
                let value = real_trace(rho.expectation(&op)?, "triple correlation entry")?;
                k[i][j][l] = check_magnitude(value, "triple correlation entry")?;
            }
        }
    }
    Ok(CorrelationTensor3(k))
}

fn m2_from_parts(k: &CorrelationTensor2, lm: &CoherenceVector, ln: &CoherenceVector) -> Tensor2 {
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = k.0[i][j] - lm.0[i] * ln.0[j];
        }
    }
    m
}

fn m3_from_parts(
    k3: &CorrelationTensor3,
    lambda: &[CoherenceVector; 3],
    m12: &Tensor2,
    m13: &Tensor2,
    m23: &Tensor2,
) -> Tensor3 {
    let mut m = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                m[i][j][l] = k3.0[i][j][l]
                    - lambda[0].0[i] * m23[j][l]
                    - lambda[1].0[j] * m13[i][l]
                    - lambda[2].0[l] * m12[i][j]
                    - lambda[0].0[i] * lambda[1].0[j] * lambda[2].0[l];
            }
        }
    }
    m
}

/// Pair entanglement tensor `M_ij(m,n) = K_ij(m,n) - lambda_i(m) lambda_j(n)`.
pub fn m_tensor2(rho: &DensityMatrix, m: usize, n: usize) -> Result<Tensor2> {
    let k = correlation_tensor2(rho, m, n)?;
    let lm = coherence_vector(rho, m)?;
    let ln = coherence_vector(rho, n)?;
    Ok(m2_from_parts(&k, &lm, &ln))
}

/// Triple entanglement tensor; vanishes on every product state.
pub fn m_tensor3(rho: &DensityMatrix) -> Result<Tensor3> {
    check_three_qubits(rho)?;
    let lambda = [
        coherence_vector(rho, 1)?,
        coherence_vector(rho, 2)?,
        coherence_vector(rho, 3)?,
    ];
    let m12 = m2_from_parts(&correlation_tensor2(rho, 1, 2)?, &lambda[0], &lambda[1]);
    let m13 = m2_from_parts(&correlation_tensor2(rho, 1, 3)?, &lambda[0], &lambda[2]);
    let m23 = m2_from_parts(&correlation_tensor2(rho, 2, 3)?, &lambda[1], &lambda[2]);
    let k3 = correlation_tensor3(rho)?;
    Ok(m3_from_parts(&k3, &lambda, &m12, &m13, &m23))
}

fn sum_sq2(m: &Tensor2) -> f64 {
    m.iter().flatten().map(|x| x * x).sum()
}

fn sum_sq3(m: &Tensor3) -> f64 {
    m.iter().flatten().flatten().map(|x| x * x).sum()
}

fn clamp_measure(raw: f64, what: &str) -> Result<f64> {
    if !(-MEASURE_RANGE_TOL..=1.0 + MEASURE_RANGE_TOL).contains(&raw) {
        return Err(Error::NumericalViolation(format!(
            "{what} = {raw} lies outside [0, 1] beyond tolerance"
        )));
    }
    Ok(raw.clamp(0.0, 1.0))
}

/// Pair entanglement measure `E2(m,n) = sum_ij M_ij(m,n)^2 / 3`, clamped to
/// `[0, 1]`; an excursion beyond 1e-9 is reported as an error.
pub fn e2(rho: &DensityMatrix, m: usize, n: usize) -> Result<f64> {
    let raw = sum_sq2(&m_tensor2(rho, m, n)?) / 3.0;
    clamp_measure(raw, &format!("E2({m},{n})"))
}

/// Three-qubit entanglement measure `E3 = sum_ijk M_ijk^2 / 4`, clamped to
/// `[0, 1]`; an excursion beyond 1e-9 is reported as an error.
pub fn e3(rho: &DensityMatrix) -> Result<f64> {
    let raw = sum_sq3(&m_tensor3(rho)?) / 4.0;
    clamp_measure(raw, "E3")
}

/// Complete correlation and entanglement data of one three-qubit state.
///
/// Per-pair arrays are ordered as in [`PAIRS`]. The `e2`/`e3` fields are
/// clamped to `[0, 1]`; the `_raw` fields keep the unclamped sums so that
/// roundoff excursions stay visible.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub lambda: [CoherenceVector; 3],
    pub k2: [CorrelationTensor2; 3],
    pub k3: CorrelationTensor3,
    pub m2: [Tensor2; 3],
    pub m3: Tensor3,
    pub e2: [f64; 3],
    pub e3: f64,
    pub e2_raw: [f64; 3],
    pub e3_raw: f64,
}

/// Computes every quantity of an [`EntanglementReport`] in one pass.
pub fn full_report(rho: &DensityMatrix) -> Result<EntanglementReport> {
    check_three_qubits(rho)?;
    let lambda = [
        coherence_vector(rho, 1)?,
        coherence_vector(rho, 2)?,
        coherence_vector(rho, 3)?,
    ];
    let k2 = [
        correlation_tensor2(rho, 1, 2)?,
        correlation_tensor2(rho, 1, 3)?,
        correlation_tensor2(rho, 2, 3)?,
    ];
    let k3 = correlation_tensor3(rho)?;
    let m2 = [
        m2_from_parts(&k2[0], &lambda[0], &lambda[1]),
        m2_from_parts(&k2[1], &lambda[0], &lambda[2]),
        m2_from_parts(&k2[2], &lambda[1], &lambda[2]),
    ];
    let m3 = m3_from_parts(&k3, &lambda, &m2[0], &m2[1], &m2[2]);
    let e2_raw = [
        sum_sq2(&m2[0]) / 3.0,
        sum_sq2(&m2[1]) / 3.0,
        sum_sq2(&m2[2]) / 3.0,
    ];
    let e3_raw = sum_sq3(&m3) / 4.0;
    let mut e2 = [0.0; 3];
    for (slot, (&raw, &(m, n))) in e2_raw.iter().zip(PAIRS.iter()).enumerate() {
        e2[slot] = clamp_measure(raw, &format!("E2({m},{n})"))?;
    }
    let e3 = clamp_measure(e3_raw, "E3")?;
    Ok(EntanglementReport {
        lambda,
        k2,
        k3,
        m2,
        m3,
        e2,
        e3,
        e2_raw,
        e3_raw,
    })
}

impl EntanglementReport {
    /// The pair measure for `(m, n)` with `m < n`; `(n, m)` gives the same
    /// value since the measure is invariant under transposing `M`.
    pub fn e2_pair(&self, m: usize, n: usize) -> Result<f64> {
        let (m, n) = if m < n { (m, n) } else { (n, m) };
        Ok(self.e2[pair_index(m, n)?])
    }

    /// Rebuilds the density matrix from the Pauli expansion data
    /// (coherence vectors and correlation tensors).
    pub fn reconstruct_density(&self) -> Result<DensityMatrix> {
        let mut acc = identity(8);
        for (slot, lambda) in self.lambda.iter().enumerate() {
            for (axis, &v) in lambda.0.iter().enumerate() {
                acc += slot_operator(&[(slot, axis)]).scale(v);
            }
        }
        for (&(m, n), k) in PAIRS.iter().zip(self.k2.iter()) {
            for i in 0..3 {
                for j in 0..3 {
                    acc += slot_operator(&[(m - 1, i), (n - 1, j)]).scale(k.0[i][j]);
                }
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    acc += slot_operator(&[(0, i), (1, j), (2, l)]).scale(self.k3.0[i][j][l]);
                }
            }
        }
        DensityMatrix::new(acc.scale(0.125), vec![2, 2, 2])
    }

    /// Serializes to a structured-text document with the stable key order
    /// `lambda1..3, K12, K13, K23, K123, M12, M13, M23, M123, E2_12, E2_13,
    /// E2_23, E3` followed by the raw (unclamped) measure values.
    pub fn to_document(&self) -> Document {
        let mut doc = Document::new();
        for (q, lambda) in self.lambda.iter().enumerate() {
            doc.push(format!("lambda{}", q + 1), num_array(lambda.0));
        }
        for (&(m, n), k) in PAIRS.iter().zip(self.k2.iter()) {
            doc.push(format!("K{m}{n}"), tensor2_value(&k.0));
        }
        doc.push("K123", tensor3_value(&self.k3.0));
        for (&(m, n), t) in PAIRS.iter().zip(self.m2.iter()) {
            doc.push(format!("M{m}{n}"), tensor2_value(t));
        }
        doc.push("M123", tensor3_value(&self.m3));
        for (&(m, n), &value) in PAIRS.iter().zip(self.e2.iter()) {
            doc.push_num(format!("E2_{m}{n}"), value);
        }
        doc.push_num("E3", self.e3);
        for (&(m, n), &value) in PAIRS.iter().zip(self.e2_raw.iter()) {
            doc.push_num(format!("E2_{m}{n}_raw"), value);
        }
        doc.push_num("E3_raw", self.e3_raw);
        doc
    }

    pub fn from_document(doc: &Document) -> Result<Self> {
        let mut lambda = [CoherenceVector([0.0; 3]); 3];
        for (q, slot) in lambda.iter_mut().enumerate() {
            let v = doc.get_nums(&format!("lambda{}", q + 1), 3)?;
            *slot = CoherenceVector([v[0], v[1], v[2]]);
        }
        let mut k2 = [CorrelationTensor2([[0.0; 3]; 3]); 3];
        for (&(m, n), slot) in PAIRS.iter().zip(k2.iter_mut()) {
            *slot = CorrelationTensor2(tensor2_from_doc(doc, &format!("K{m}{n}"))?);
        }
        let k3 = CorrelationTensor3(tensor3_from_doc(doc, "K123")?);
        let mut m2 = [[[0.0; 3]; 3]; 3];
        for (&(m, n), slot) in PAIRS.iter().zip(m2.iter_mut()) {
            *slot = tensor2_from_doc(doc, &format!("M{m}{n}"))?;
        }
        let m3 = tensor3_from_doc(doc, "M123")?;
        let mut e2 = [0.0; 3];
        let mut e2_raw = [0.0; 3];
        for (slot, &(m, n)) in PAIRS.iter().enumerate() {
            e2[slot] = doc.get_num(&format!("E2_{m}{n}"))?;
            e2_raw[slot] = doc.get_num(&format!("E2_{m}{n}_raw"))?;
        }
        let e3 = doc.get_num("E3")?;
        let e3_raw = doc.get_num("E3_raw")?;
        Ok(Self {
            lambda,
            k2,
            k3,
            m2,
            m3,
            e2,
            e3,
            e2_raw,
            e3_raw,
        })
    }

    pub fn to_text(&self) -> String {
        self.to_document().render()
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        Self::from_document(&Document::parse(text)?)
    }
}

fn tensor2_value(t: &Tensor2) -> Value {
    Value::Arr(t.iter().map(|row| num_array(*row)).collect())
}

fn tensor3_value(t: &Tensor3) -> Value {
    Value::Arr(
        t.iter()
            .map(|plane| Value::Arr(plane.iter().map(|row| num_array(*row)).collect()))
            .collect(),
    )
}

fn tensor2_from_doc(doc: &Document, key: &str) -> Result<Tensor2, ParseError> {
    let rows = doc.get_matrix(key, 3, 3)?;
    let mut t = [[0.0; 3]; 3];
    for (i, row) in rows.iter().enumerate() {
        t[i].copy_from_slice(row);
    }
    Ok(t)
}

fn tensor3_from_doc(doc: &Document, key: &str) -> Result<Tensor3, ParseError> {
    let planes = doc.get_arr(key)?;
    if planes.len() != 3 {
        return Err(ParseError::BadShape {
            key: key.to_string(),
            expected: "3 planes of 3x3 numbers".to_string(),
        });
    }
    let mut t = [[[0.0; 3]; 3]; 3];
    for (i, plane) in planes.iter().enumerate() {
        let rows = plane.arr().ok_or_else(|| ParseError::BadShape {
            key: key.to_string(),
            expected: "3 planes of 3x3 numbers".to_string(),
        })?;
        if rows.len() != 3 {
            return Err(ParseError::BadShape {
                key: key.to_string(),
                expected: "3 planes of 3x3 numbers".to_string(),
            });
        }
        for (j, row) in rows.iter().enumerate() {
            let row = row.arr().filter(|r| r.len() == 3).ok_or_else(|| ParseError::BadShape {
                key: key.to_string(),
                expected: "3 planes of 3x3 numbers".to_string(),
            })?;
            for (l, v) in row.iter().enumerate() {
                t[i][j][l] = v.num().ok_or_else(|| ParseError::BadShape {
                    key: key.to_string(),
                    expected: "numbers".to_string(),
                })?;
            }
        }
    }
    Ok(t)
}

const AXES: [char; 3] = ['x', 'y', 'z'];

fn write_tensor2(f: &mut fmt::Formatter<'_>, name: &str, t: &Tensor2) -> fmt::Result {
    writeln!(f, "  {name} (rows/cols x, y, z):")?;
    for row in t {
        write!(f, "    [")?;
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                write!(f, "  ")?;
            }
            write!(f, "{:>15}", render::sig12(*v))?;
        }
        writeln!(f, "]")?;
    }
    Ok(())
}

fn write_tensor3_nonzero(f: &mut fmt::Formatter<'_>, name: &str, t: &Tensor3) -> fmt::Result {
    writeln!(f, "  {name}, nonzero entries (|entry| > 1e-12):")?;
    let mut any = false;
    for (i, plane) in t.iter().enumerate() {
        for (j, row) in plane.iter().enumerate() {
            for (l, &v) in row.iter().enumerate() {
                if v.abs() > 1e-12 {
                    writeln!(
                        f,
                        "    {name}_{}{}{} = {}",
                        AXES[i],
                        AXES[j],
                        AXES[l],
                        render::annotated(v)
                    )?;
                    any = true;
                }
            }
        }
    }
    if !any {
        writeln!(f, "    (all zero)")?;
    }
    Ok(())
}

impl fmt::Display for EntanglementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coherence vectors:")?;
        for (q, lambda) in self.lambda.iter().enumerate() {
            writeln!(
                f,
                "  lambda({}) = [{}, {}, {}]   |lambda| = {}",
                q + 1,
                render::sig12(lambda.0[0]),
                render::sig12(lambda.0[1]),
                render::sig12(lambda.0[2]),
                render::sig12(lambda.norm())
            )?;
        }
        writeln!(f, "pair correlation tensors:")?;
        for (&(m, n), k) in PAIRS.iter().zip(self.k2.iter()) {
            write_tensor2(f, &format!("K({m},{n})"), &k.0)?;
        }
        writeln!(f, "triple correlation tensor:")?;
        write_tensor3_nonzero(f, "K", &self.k3.0)?;
        writeln!(f, "pair entanglement tensors:")?;
        for (&(m, n), t) in PAIRS.iter().zip(self.m2.iter()) {
            write_tensor2(f, &format!("M({m},{n})"), t)?;
        }
        writeln!(f, "triple entanglement tensor:")?;
        write_tensor3_nonzero(f, "M", &self.m3)?;
        writeln!(f, "measures:")?;
        for (&(m, n), &value) in PAIRS.iter().zip(self.e2.iter()) {
            writeln!(f, "  E2({m},{n}) = {}", render::annotated(value))?;
        }
        writeln!(f, "  E3      = {}", render::annotated(self.e3))?;
        Ok(())
    }
}
