//! Mach-Zehnder realization of the one-bit circuit.
//!
//! Splitter, one phase shifter per arm, recombiner. The splitter is taken
//! to be the Hadamard matrix, which makes the interferometer literally the
//! n = 1 quantum circuit; detector intensities depend only on the
//! inter-arm phase difference.

use num_complex::Complex64;
use thiserror::Error;

use crate::deutsch::{classify_table, Classification, FunctionTable};
use crate::qsim::{self, StateVector, Unitary};

#[derive(Debug, Error, PartialEq)]
pub enum MzError {
    #[error("phase {0} is not finite")]
    NonFinitePhase(f64),
    #[error("oracle must take exactly one input bit, got {0}")]
    WrongArity(usize),
    #[error("function is neither constant nor balanced; promise violated")]
    PromiseViolation,
}

/// A two-arm network: per-arm phases and the input port the photon enters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MzNetwork {
    pub phase_upper: f64,
    pub phase_lower: f64,
    pub input_port: u8,
}

impl MzNetwork {
    pub fn new(phase_upper: f64, phase_lower: f64, input_port: u8) -> Result<Self, MzError> {
        for phi in [phase_upper, phase_lower] {
            if !phi.is_finite() {
                return Err(MzError::NonFinitePhase(phi));
            }
        }
        Ok(Self {
            phase_upper,
            phase_lower,
            input_port: input_port & 1,
        })
    }

    /// Inter-arm phase difference, upper minus lower.
    pub fn delta(&self) -> f64 {
        self.phase_upper - self.phase_lower
    }
}

/// Detector intensities at the two output ports; they sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Intensities {
    pub port0: f64,
    pub port1: f64,
}

impl Intensities {
    /// The port with the larger intensity; port 0 on a tie.
    pub fn dominant_port(&self) -> u8 {
        if self.port1 > self.port0 {
            1
        } else {
            0
        }
    }
}

/// The phase-shifter gate diag(1, e^(i·phi)).
pub fn phase_shifter(phi: f64) -> Result<Unitary, MzError> {
    if !phi.is_finite() {
        return Err(MzError::NonFinitePhase(phi));
    }
    let zero = Complex64::new(0.0, 0.0);
    Ok(Unitary::new(
        2,
        vec![Complex64::new(1.0, 0.0), zero, zero, Complex64::from_polar(1.0, phi)],
    )
    .expect("diagonal phase matrix is unitary"))
}

fn arm_phases(upper: f64, lower: f64) -> Unitary {
    let zero = Complex64::new(0.0, 0.0);
    Unitary::new(
        2,
        vec![
            Complex64::from_polar(1.0, upper),
            zero,
            zero,
            Complex64::from_polar(1.0, lower),
        ],
    )
    .expect("diagonal phase matrix is unitary")
}

/// Runs H · diag(e^(i·upper), e^(i·lower)) · H on the input-port state and
/// squares the output amplitudes.
pub fn mz_intensities(net: &MzNetwork) -> Intensities {
    let input = if net.input_port == 0 {
        qsim::zero_state(1).unwrap()
    } else {
        StateVector::new(
            1,
            vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        )
        .unwrap()
    };
    let h = qsim::hadamard();
    let mut state = qsim::apply(&input, &h, &[0]).unwrap();
    state = qsim::apply(&state, &arm_phases(net.phase_upper, net.phase_lower), &[0]).unwrap();
    state = qsim::apply(&state, &h, &[0]).unwrap();
    let p = qsim::probabilities(&state);
    Intensities {
        port0: p[0],
        port1: p[1],
    }
}

/// Encodes a 1-bit promise table as arm phases (π·f(0), π·f(1)), port 0.
///
/// Detector 0 then fires exactly for constant tables and detector 1 for
/// balanced ones.
pub fn deutsch_phases(f: &FunctionTable) -> Result<MzNetwork, MzError> {
    if f.input_bits() != 1 {
        return Err(MzError::WrongArity(f.input_bits()));
    }
    if classify_table(f) == Classification::Neither {
        return Err(MzError::PromiseViolation);
    }
    MzNetwork::new(
        std::f64::consts::PI * f.eval(0) as f64,
        std::f64::consts::PI * f.eval(1) as f64,
        0,
    )
}

/// Worst-case detector error when each target phase difference is missed
/// by up to `epsilon` on either side.
///
/// Deterministic: evaluates at Δ-ε, Δ, Δ+ε and reports the largest
/// deviation of the dominant detector's probability from its nominal value.
pub fn phase_error_sweep(delta_targets: &[f64], epsilon: f64) -> Result<Vec<(f64, f64)>, MzError> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(MzError::NonFinitePhase(epsilon));
    }
    delta_targets
        .iter()
        .map(|&delta| {
            if !delta.is_finite() {
                return Err(MzError::NonFinitePhase(delta));
            }
            let at = |d: f64| mz_intensities(&MzNetwork::new(d, 0.0, 0).unwrap());
            let nominal = at(delta);
            let port = nominal.dominant_port();
            let read = |i: Intensities| if port == 0 { i.port0 } else { i.port1 };
            let worst = [delta - epsilon, delta, delta + epsilon]
                .into_iter()
                .map(|d| (read(at(d)) - read(nominal)).abs())
                .fold(0.0f64, f64::max);
            Ok((delta, worst))
        })
        .collect()
}
