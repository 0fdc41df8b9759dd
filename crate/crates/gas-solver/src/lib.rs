//! Grover adaptive search for QUBO/HUBO minimization.
//!
//! The solver couples the phase-encoding state preparation from
//! `pseudo-boolean` with the sign-qubit oracle: after preparation, every
//! basis branch whose shifted cost is negative carries a 1 in the cost
//! register's most-significant qubit, so a single Z gate marks exactly the
//! states that improve on the current threshold. Rotation counts follow the
//! standard randomized schedule for an unknown number of marked states, and
//! every measurement is re-checked classically before the threshold moves.
//! A classical exhaustive baseline with the same query accounting is
//! included for comparison experiments.

mod classical;
mod config;
mod engine;
mod error;
mod oracle;
mod solver;
mod threshold;
mod trace;

pub use classical::{
    classical_exhaustive, greedy_descent, ExhaustiveResult, CLASSICAL_EXHAUSTIVE_LIMIT,
};
pub use config::{GasConfig, InitialThreshold, DEFAULT_BUDGET, DEFAULT_LAMBDA};
pub use engine::{feasible_bounds, resolve_encoding, GasEngine};
pub use error::GasError;
pub use oracle::{build_oracle, grover_operator};
pub use solver::{amplified_measure, run_gas, single_marked_polynomial, AmplifiedMeasurement};
pub use threshold::{
    initial_threshold, initial_threshold_with_witness, random_feasible, ThresholdInit,
    QUANTILE_SAMPLES,
};
pub use trace::{GasRound, GasTrace, RunDocument};
