use std::f64::consts::PI;

use quantum_sim::{Circuit, Gate};

use crate::error::GasError;

/// The oracle over an `num_qubits`-wide circuit whose top `m` qubits form
/// the cost register: a single Z gate on the most-significant cost qubit,
/// flipping the sign of every branch whose two's-complement cost is negative.
pub fn build_oracle(num_qubits: usize, m: usize) -> Result<Circuit, GasError> {
    if m == 0 || m > num_qubits {
        return Err(GasError::BadOracleWidth);
    }
    let mut circuit = Circuit::new(num_qubits);
    circuit
        .push(Gate::Z {
            target: num_qubits - 1,
        })
        .expect("target in range");
    Ok(circuit)
}

/// The Grover operator G = prep . reflect-about-zero . prep^-1 . oracle
/// (rightmost applied first), with the reflection about |0...0> realized as
/// X on every qubit, a multi-controlled phase of pi, and X again. G equals
/// the inversion-about-prepared-state formulation up to a global phase.
pub fn grover_operator(prep: &Circuit, m: usize) -> Result<Circuit, GasError> {
    let num_qubits = prep.num_qubits();
    let mut g = build_oracle(num_qubits, m)?;
    g.extend(&prep.inverse())?;
    for q in 0..num_qubits {
        g.push(Gate::X { target: q })?;
    }
    g.push(Gate::ControlledPhase {
        controls: (0..num_qubits - 1).collect(),
        target: num_qubits - 1,
        angle: PI,
    })?;
    for q in 0..num_qubits {
        g.push(Gate::X { target: q })?;
    }
    g.extend(prep)?;
    Ok(g)
}
