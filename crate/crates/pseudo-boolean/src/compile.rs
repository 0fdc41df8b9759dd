use std::f64::consts::TAU;

use quantum_sim::{Circuit, Gate};

use crate::encoding::CostEncoding;
use crate::error::PolyError;
use crate::poly::{BinaryPolynomial, EXHAUSTIVE_LIMIT};

/// Compiles the state-preparation operator for a cost polynomial on
/// n + m qubits: variable qubits 0..n, cost qubits n..n+m with the sign in
/// the most-significant qubit.
///
/// The circuit applies H to every qubit, then for each term (coefficient c,
/// variables S) and each cost qubit j a phase of 2*pi*scale*c*2^j / 2^m on
/// cost qubit n+j controlled on the variable qubits in S (the constant uses
/// uncontrolled phase gates), and finally the inverse QFT on the cost
/// register. Applied to |0...0>, the cost register conditioned on variable
/// assignment x reads the two's complement of round(scale * f(x)) mod 2^m,
/// deterministically when the scaled costs are integers.
pub fn compile_state_prep(
    poly: &BinaryPolynomial,
    enc: &CostEncoding,
) -> Result<Circuit, PolyError> {
    check_range(poly, enc)?;
    let n = poly.num_vars();
    let m = enc.m;
    let mut circuit = Circuit::new(n + m);
    for q in 0..n + m {
        circuit.push(Gate::H { target: q }).expect("index in range");
    }
    append_phase_block(&mut circuit, poly, enc)?;
    circuit
        .push(Gate::Iqft { start: n, len: m })
        .expect("register in range");
    Ok(merge_phase_rotations(&circuit))
}

/// The phase gates alone (no H layer, no IQFT); used when the variable
/// register is prepared by other means than a uniform superposition.
pub fn append_phase_block(
    circuit: &mut Circuit,
    poly: &BinaryPolynomial,
    enc: &CostEncoding,
) -> Result<(), PolyError> {
    let n = poly.num_vars();
    let m = enc.m;
    let unit = TAU * enc.scale / (1u64 << m) as f64;
    for j in 0..m {
        let step = unit * (1u64 << j) as f64;
        if poly.constant() != 0.0 {
            circuit
                .push(Gate::Phase {
                    target: n + j,
                    angle: step * poly.constant(),
                })
                .expect("index in range");
        }
        for term in poly.terms() {
            circuit
                .push(Gate::ControlledPhase {
                    controls: term.variables.clone(),
                    target: n + j,
                    angle: step * term.coefficient,
                })
                .expect("index in range");
        }
    }
    Ok(())
}

/// Rejects polynomials whose scaled costs fall outside the register's
/// two's-complement range. Exact achievable bounds are used when the
/// variable count permits an exhaustive sweep, sound bounds otherwise.
fn check_range(poly: &BinaryPolynomial, enc: &CostEncoding) -> Result<(), PolyError> {
    let (lower, upper) = if poly.num_vars() <= EXHAUSTIVE_LIMIT {
        poly.exact_bounds().expect("within limit")
    } else {
        poly.cost_bounds()
    };
    if enc.fits(lower) && enc.fits(upper) {
        Ok(())
    } else {
        Err(PolyError::RegisterOverflow {
            lower,
            upper,
            m: enc.m,
            scale: enc.scale,
        })
    }
}

/// Merges consecutive phase rotations acting on the same target with the
/// same control set by summing their angles, and drops rotations whose net
/// angle vanishes. Other gates pass through unchanged.
pub fn merge_phase_rotations(circuit: &Circuit) -> Circuit {
    let mut gates: Vec<Gate> = Vec::with_capacity(circuit.gate_count());
    for gate in circuit.gates() {
        match phase_parts(gate) {
            Some((controls, target, angle)) => {
                let mergeable = gates
                    .last()
                    .and_then(phase_parts)
                    .map(|(lc, lt, _)| lc == controls && lt == target)
                    .unwrap_or(false);
                if mergeable {
                    let last = gates.pop().expect("checked above");
                    let (_, _, last_angle) = phase_parts(&last).expect("phase gate");
                    let total = last_angle + angle;
                    if total != 0.0 {
                        gates.push(with_angle(&last, total));
                    }
                } else if angle != 0.0 {
                    gates.push(gate.clone());
                }
            }
            None => gates.push(gate.clone()),
        }
    }
    let mut out = Circuit::new(circuit.num_qubits());
    for gate in gates {
        out.push(gate).expect("gates came from a valid circuit");
    }
    out
}

fn phase_parts(gate: &Gate) -> Option<(&[usize], usize, f64)> {
    match gate {
        Gate::Phase { target, angle } => Some((&[], *target, *angle)),
        Gate::ControlledPhase {
            controls,
            target,
            angle,
        } => Some((controls, *target, *angle)),
        _ => None,
    }
}

fn with_angle(gate: &Gate, angle: f64) -> Gate {
    match gate {
        Gate::Phase { target, .. } => Gate::Phase {
            target: *target,
            angle,
        },
        Gate::ControlledPhase {
            controls, target, ..
        } => Gate::ControlledPhase {
            controls: controls.clone(),
            target: *target,
            angle,
        },
        _ => unreachable!("merge only considers phase gates"),
    }
}
