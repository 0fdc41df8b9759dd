//! Dense statevector simulation of gate-level quantum circuits.
//!
//! A register of n qubits is stored as 2^n complex amplitudes; gates act as
//! unitary maps on that vector. Qubit 0 is the least-significant bit of the
//! basis-state index, and bitstrings are printed most-significant-first.
//! Besides plain gate application the crate prepares the special states the
//! solvers need (uniform superposition, fixed-Hamming-weight Dicke states,
//! amplitude embedding of classical data) and supports seeded measurement
//! sampling so every downstream experiment is reproducible.

mod circuit;
mod error;
mod gate;
mod state;

pub use circuit::Circuit;
pub use error::SimError;
pub use gate::Gate;
pub use state::{
    bits_to_index, index_to_bits, set_simulator_limit, simulator_limit, MeasurementOutcome,
    StateVector, DEFAULT_MAX_QUBITS,
};
