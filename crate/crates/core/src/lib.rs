//! A dual-world simulator for the one-query constant-vs-balanced problem.
//!
//! Three views of the same question — is a hidden one-bit-valued function
//! constant or balanced? — are implemented side by side and checked against
//! each other exhaustively:
//!
//! * [`qsim`] / [`deutsch`]: an exact state-vector simulator and the
//!   one-query quantum classifier, plus the deterministic classical
//!   classifier with query counting.
//! * [`switchboard`]: the classical switch-wiring analogue — four wirings,
//!   the light truth table, the flip-on-lower-terminal inspection trick,
//!   and its N-wire parity generalization.
//! * [`interferometer`]: the Mach-Zehnder optical realization of the
//!   one-bit circuit via 2x2 transfer matrices.
//!
//! [`verify`] runs every cross-world equivalence as one exhaustive suite.
//!
//! With the `parallel` feature (on by default) the exhaustive sweeps in
//! [`verify`] run on rayon; without it they fall back to sequential
//! iteration with identical results.

pub mod deutsch;
pub mod interferometer;
pub mod qsim;
pub mod switchboard;
pub mod verify;

pub use deutsch::{Classification, FunctionTable, QueryLog};
pub use qsim::{StateVector, Unitary};
pub use switchboard::{Observation, SwitchPos, Wiring};

/// Tolerance for kernel-level algebraic identities (unitarity, norms).
pub const TOL_ALGEBRA: f64 = 1e-12;

/// Tolerance for end-to-end circuit outcomes.
pub const TOL_CIRCUIT: f64 = 1e-9;
