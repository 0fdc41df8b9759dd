use crate::error::SimError;

/// A single circuit element. Qubit 0 is the least-significant qubit of the
/// register; basis-state index `i` assigns bit `(i >> q) & 1` to qubit `q`.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// Hadamard.
    H { target: usize },
    /// Pauli X (bit flip).
    X { target: usize },
    /// Pauli Y.
    Y { target: usize },
    /// Pauli Z (phase flip).
    Z { target: usize },
    /// S phase gate, diag(1, i).
    S { target: usize },
    /// Arbitrary phase, diag(1, e^{i*angle}).
    Phase { target: usize, angle: f64 },
    /// Controlled NOT.
    Cnot { control: usize, target: usize },
    /// Phase e^{i*angle} applied when every control qubit and the target
    /// qubit are all 1. An empty control set is an ordinary phase gate.
    ControlledPhase {
        controls: Vec<usize>,
        target: usize,
        angle: f64,
    },
    /// Inverse quantum Fourier transform on the contiguous qubit range
    /// [start, start+len), applied as a dense unitary on that subspace.
    Iqft { start: usize, len: usize },
    /// Quantum Fourier transform, the inverse of `Iqft`.
    Qft { start: usize, len: usize },
}

impl Gate {
    /// All qubit indices the gate touches.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H { target }
            | Gate::X { target }
            | Gate::Y { target }
            | Gate::Z { target }
            | Gate::S { target }
            | Gate::Phase { target, .. } => vec![*target],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::ControlledPhase {
                controls, target, ..
            } => {
                let mut qs = controls.clone();
                qs.push(*target);
                qs
            }
            Gate::Iqft { start, len } | Gate::Qft { start, len } => {
                (*start..*start + *len).collect()
            }
        }
    }

    /// The gate implementing the inverse unitary.
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::H { .. } | Gate::X { .. } | Gate::Y { .. } | Gate::Z { .. } => self.clone(),
            Gate::S { target } => Gate::Phase {
                target: *target,
                angle: -std::f64::consts::FRAC_PI_2,
            },
            Gate::Phase { target, angle } => Gate::Phase {
                target: *target,
                angle: -angle,
            },
            Gate::Cnot { .. } => self.clone(),
            Gate::ControlledPhase {
                controls,
                target,
                angle,
            } => Gate::ControlledPhase {
                controls: controls.clone(),
                target: *target,
                angle: -angle,
            },
            Gate::Iqft { start, len } => Gate::Qft {
                start: *start,
                len: *len,
            },
            Gate::Qft { start, len } => Gate::Iqft {
                start: *start,
                len: *len,
            },
        }
    }

    /// Checks index bounds and control/target disjointness against a register size.
    pub fn validate(&self, num_qubits: usize) -> Result<(), SimError> {
        match self {
            Gate::Cnot { control, target } if control == target => {
                return Err(SimError::ControlTargetOverlap { target: *target });
            }
            Gate::ControlledPhase {
                controls, target, ..
            } if controls.contains(target) => {
                return Err(SimError::ControlTargetOverlap { target: *target });
            }
            Gate::Iqft { start, len } | Gate::Qft { start, len } => {
                if *len == 0 || start + len > num_qubits {
                    return Err(SimError::BadRegisterSlice {
                        start: *start,
                        len: *len,
                    });
                }
                return Ok(());
            }
            _ => {}
        }
        for q in self.qubits() {
            if q >= num_qubits {
                return Err(SimError::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
        }
        Ok(())
    }
}
