//! Exact state-vector simulation of small qubit registers.
//!
//! Bit convention: qubit 0 is the *most significant* bit of a basis index,
//! so a basis label reads left-to-right as the ket string |x⟩|y⟩ with the
//! leftmost qubit first.
//!
//! All operations are pure functions over immutable values. Probabilities
//! are exact; [`sample`] is a demonstration-only convenience that requires
//! an explicit seed.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::TOL_ALGEBRA;

/// Default cap on register size for [`zero_state`].
pub const QUBIT_CAP: usize = 20;

#[derive(Debug, Error, PartialEq)]
pub enum QsimError {
    #[error("qubit count {0} outside [1, {1}]")]
    QubitCountOutOfRange(usize, usize),
    #[error("gate dimension {gate_dim} does not match 2^{targets} targets")]
    DimensionMismatch { gate_dim: usize, targets: usize },
    #[error("duplicate target qubit {0}")]
    DuplicateTarget(usize),
    #[error("target qubit {target} out of range for {num_qubits}-qubit state")]
    TargetOutOfRange { target: usize, num_qubits: usize },
    #[error("matrix of dimension {0} is not unitary")]
    NotUnitary(usize),
    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),
}

/// Exact complex amplitude vector over a qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Builds a state from raw amplitudes, checking length and norm.
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self, QsimError> {
        if amplitudes.len() != 1 << num_qubits {
            return Err(QsimError::DimensionMismatch {
                gate_dim: amplitudes.len(),
                targets: num_qubits,
            });
        }
        let state = Self {
            num_qubits,
            amplitudes,
        };
        if (state.norm_sq() - 1.0).abs() > TOL_ALGEBRA {
            return Err(QsimError::NotUnitary(1 << num_qubits));
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Dense unitary matrix of power-of-two dimension, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    dim: usize,
    entries: Vec<Complex64>,
}

impl Unitary {
    /// Builds a unitary from row-major entries, checking U†U = I within 1e-12.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self, QsimError> {
        if !dim.is_power_of_two() {
            return Err(QsimError::NotPowerOfTwo(dim));
        }
        if entries.len() != dim * dim {
            return Err(QsimError::DimensionMismatch {
                gate_dim: entries.len(),
                targets: dim,
            });
        }
        let u = Self { dim, entries };
        if !u.is_unitary(TOL_ALGEBRA) {
            return Err(QsimError::NotUnitary(dim));
        }
        Ok(u)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    /// Checks U†U = I entrywise within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.dim {
                    acc += self.entry(k, i).conj() * self.entry(k, j);
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                if (acc - expect).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Unitary) -> Unitary {
        assert_eq!(self.dim, rhs.dim);
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..d {
                    acc += self.entry(i, k) * rhs.entry(k, j);
                }
                entries[i * d + j] = acc;
            }
        }
        Unitary { dim: d, entries }
    }
}

/// Prepares |0...0⟩ on `num_qubits` qubits.
pub fn zero_state(num_qubits: usize) -> Result<StateVector, QsimError> {
    if !(1..=QUBIT_CAP).contains(&num_qubits) {
        return Err(QsimError::QubitCountOutOfRange(num_qubits, QUBIT_CAP));
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
    amplitudes[0] = Complex64::new(1.0, 0.0);
    Ok(StateVector {
        num_qubits,
        amplitudes,
    })
}

/// The Hadamard gate (1/√2)[[1,1],[1,-1]].
pub fn hadamard() -> Unitary {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Unitary {
        dim: 2,
        entries: vec![h, h, h, -h],
    }
}

/// The NOT gate [[0,1],[1,0]].
pub fn pauli_x() -> Unitary {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    Unitary {
        dim: 2,
        entries: vec![zero, one, one, zero],
    }
}

/// Applies `gate` on the given target qubits, identity elsewhere.
///
/// `targets[0]` is the most significant bit of the gate's own index space,
/// matching the global convention.
pub fn apply(
    state: &StateVector,
    gate: &Unitary,
    targets: &[usize],
) -> Result<StateVector, QsimError> {
    let n = state.num_qubits;
    let k = targets.len();
    if gate.dim != 1 << k {
        return Err(QsimError::DimensionMismatch {
            gate_dim: gate.dim,
            targets: k,
        });
    }
    for (i, &t) in targets.iter().enumerate() {
        if t >= n {
            return Err(QsimError::TargetOutOfRange {
                target: t,
                num_qubits: n,
            });
        }
        if targets[..i].contains(&t) {
            return Err(QsimError::DuplicateTarget(t));
        }
    }

    // Bit position of qubit q within a basis index (qubit 0 is the MSB).
    let shifts: Vec<usize> = targets.iter().map(|&q| n - 1 - q).collect();
    let target_mask: usize = shifts.iter().map(|&s| 1usize << s).sum();
    let dim = 1usize << n;
    // Position of gate sub-index t within the global index.
    let spread = |t: usize| -> usize {
        let mut pos = 0;
        for (j, &s) in shifts.iter().enumerate() {
            if (t >> (k - 1 - j)) & 1 == 1 {
                pos |= 1 << s;
            }
        }
        pos
    };
    let sub_positions: Vec<usize> = (0..gate.dim).map(spread).collect();

    let mut out = state.amplitudes.clone();
    for base in 0..dim {
        if base & target_mask != 0 {
            continue;
        }
        let gathered: Vec<Complex64> = sub_positions
            .iter()
            .map(|&p| state.amplitudes[base | p])
            .collect();
        for (row, &p) in sub_positions.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (col, &amp) in gathered.iter().enumerate() {
                acc += gate.entry(row, col) * amp;
            }
            out[base | p] = acc;
        }
    }
    Ok(StateVector {
        num_qubits: n,
        amplitudes: out,
    })
}

/// Applies a single-qubit gate to every qubit in turn.
pub fn apply_all(state: &StateVector, gate: &Unitary) -> Result<StateVector, QsimError> {
    if gate.dim != 2 {
        return Err(QsimError::DimensionMismatch {
            gate_dim: gate.dim,
            targets: 1,
        });
    }
    let mut s = state.clone();
    for q in 0..state.num_qubits {
        s = apply(&s, gate, &[q])?;
    }
    Ok(s)
}

/// Squared magnitudes of every amplitude.
pub fn probabilities(state: &StateVector) -> Vec<f64> {
    state.amplitudes.iter().map(|a| a.norm_sqr()).collect()
}

/// Probability that the given qubits read out as `outcome`.
///
/// `outcome` bit `j` (from the most significant end of the pattern) is the
/// required value of `qubits[j]`. An empty qubit set gives 1.
pub fn marginal_probability(
    state: &StateVector,
    qubits: &[usize],
    outcome: usize,
) -> Result<f64, QsimError> {
    let n = state.num_qubits;
    for (i, &q) in qubits.iter().enumerate() {
        if q >= n {
            return Err(QsimError::TargetOutOfRange {
                target: q,
                num_qubits: n,
            });
        }
        if qubits[..i].contains(&q) {
            return Err(QsimError::DuplicateTarget(q));
        }
    }
    let k = qubits.len();
    let matches = |index: usize| {
        qubits.iter().enumerate().all(|(j, &q)| {
            let bit = (index >> (n - 1 - q)) & 1;
            bit == (outcome >> (k - 1 - j)) & 1
        })
    };
    Ok(state
        .amplitudes
        .iter()
        .enumerate()
        .filter(|(i, _)| matches(*i))
        .map(|(_, a)| a.norm_sqr())
        .sum())
}

/// Draws one basis index from the exact outcome distribution.
///
/// Demonstration only; every caller must supply the seed.
pub fn sample(state: &StateVector, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r: f64 = rng.gen();
    let mut acc = 0.0;
    for (i, a) in state.amplitudes.iter().enumerate() {
        acc += a.norm_sqr();
        if r < acc {
            return i;
        }
    }
    state.amplitudes.len() - 1
}
