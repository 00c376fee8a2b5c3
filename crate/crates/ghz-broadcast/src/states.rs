//! Three-qubit pure states: construction, basis labeling, and the
//! plain-text state-file format.
//!
//! A state file is exactly eight lines, line `k` holding the real and
//! imaginary part of the amplitude of flat basis index `k-1`, separated by
//! whitespace: `re im`. Each field is a plain decimal with optional fraction
//! and exponent (no leading `+`). Files may be slightly unnormalized (norm
//! within `1e-6` of 1); parsing renormalizes.

use std::sync::LazyLock;

use num_complex::Complex64;
use regex::Regex;

use crate::error::{Error, ParseError, Result};
use crate::tensor::{CVector, DensityMatrix, StateVector};

/// Parsed states may deviate from unit norm by at most this much.
pub const STATE_FILE_NORM_TOL: f64 = 1e-6;

static AMPLITUDE_LINE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^\s*(-?\d+(\.\d+)?([eE][+-]?\d+)?)\s+(-?\d+(\.\d+)?([eE][+-]?\d+)?)\s*$")
        .expect("amplitude line pattern compiles")
});

/// A normalized pure state of three qubits (dims `[2, 2, 2]`).
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeQubitState(StateVector);

impl ThreeQubitState {
    /// Wraps eight amplitudes; must be normalized within `1e-12`.
    pub fn new(amps: &[Complex64; 8]) -> Result<Self> {
        let sv = StateVector::new(CVector::from_row_slice(amps), vec![2, 2, 2])?;
        Ok(Self(sv))
    }

    /// Wraps a state vector after checking it has dims `[2, 2, 2]`.
    pub fn from_state_vector(sv: StateVector) -> Result<Self> {
        if sv.dims() != [2, 2, 2] {
            return Err(Error::DimensionMismatch(format!(
                "expected a three-qubit state with dims [2, 2, 2], got {:?}",
                sv.dims()
            )));
        }
        Ok(Self(sv))
    }

    /// The GHZ state `(|000> + |111>)/sqrt(2)`.
    pub fn ghz() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::new(&[s, zero, zero, zero, zero, zero, zero, s])
            .expect("GHZ state is normalized")
    }

    pub fn state_vector(&self) -> &StateVector {
        &self.0
    }

    pub fn into_state_vector(self) -> StateVector {
        self.0
    }

    pub fn amp(&self, index: usize) -> Complex64 {
        self.0.amp(index)
    }

    /// The projector `|psi><psi|` with dims `[2, 2, 2]`.
    pub fn density(&self) -> DensityMatrix {
        self.0.to_density()
    }
}

/// Flat basis index of a three-qubit label such as `"010"`. The first
/// character is the most significant qubit, so `"000" -> 0` and `"111" -> 7`.
pub fn basis_index(label: &str) -> Result<usize> {
    if label.len() != 3 || !label.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(ParseError::BadBasisLabel(label.to_string()).into());
    }
    Ok(label
        .bytes()
        .fold(0usize, |acc, b| (acc << 1) | usize::from(b == b'1')))
}

/// Inverse of [`basis_index`]: the three-character label of a flat index.
pub fn basis_label(index: usize) -> Result<String> {
    if index > 7 {
        return Err(Error::InvalidArgument(format!(
            "basis index {index} out of range 0..=7"
        )));
    }
    Ok(format!("{index:03b}"))
}

/// Parses the eight-line state-file format. Validates the norm to within
/// [`STATE_FILE_NORM_TOL`] and renormalizes.
pub fn parse_state(text: &str) -> Result<ThreeQubitState> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.len() != 8 {
        return Err(ParseError::AmplitudeLineCount(lines.len()).into());
    }
    let mut amps = [Complex64::new(0.0, 0.0); 8];
    for (k, line) in lines.iter().enumerate() {
        let captures = AMPLITUDE_LINE.captures(line).ok_or_else(|| ParseError::MalformedAmplitude {
            line: k + 1,
            text: line.to_string(),
        })?;
        let re: f64 = captures[1].parse().expect("matched float parses");
        let im: f64 = captures[4].parse().expect("matched float parses");
        amps[k] = Complex64::new(re, im);
    }
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > STATE_FILE_NORM_TOL {
        return Err(ParseError::BadNorm(norm).into());
    }
    for amp in &mut amps {
        *amp /= norm;
    }
    ThreeQubitState::new(&amps)
}

/// Writes the eight-line state-file format. Round-trips through
/// [`parse_state`] exactly.
pub fn serialize_state(state: &ThreeQubitState) -> String {
    let mut out = String::new();
    for k in 0..8 {
        let amp = state.amp(k);
        out.push_str(&format!("{} {}\n", amp.re, amp.im));
    }
    out
}
