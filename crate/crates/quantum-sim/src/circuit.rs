use crate::error::SimError;
use crate::gate::Gate;

/// An ordered list of gates over a fixed-size qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends a gate after validating its indices against this register.
    pub fn push(&mut self, gate: Gate) -> Result<(), SimError> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends all gates of `other`, which must act on the same register size.
    pub fn extend(&mut self, other: &Circuit) -> Result<(), SimError> {
        if other.num_qubits != self.num_qubits {
            return Err(SimError::QubitCountMismatch {
                circuit: other.num_qubits,
                state: self.num_qubits,
            });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    /// The circuit implementing the inverse unitary: inverted gates in
    /// reverse order.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Greedy layer count: gates sharing no qubit may occupy the same layer.
    pub fn depth(&self) -> usize {
        let mut busy_until = vec![0usize; self.num_qubits];
        let mut depth = 0;
        for gate in &self.gates {
            let qs = gate.qubits();
            let layer = qs.iter().map(|&q| busy_until[q]).max().unwrap_or(0) + 1;
            for q in qs {
                busy_until[q] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_rejects_out_of_range() {
        let mut c = Circuit::new(2);
        let err = c.push(Gate::H { target: 2 }).unwrap_err();
        assert_eq!(
            err,
            SimError::QubitOutOfRange {
                index: 2,
                num_qubits: 2
            }
        );
    }

    #[test]
    fn push_rejects_control_target_overlap() {
        let mut c = Circuit::new(3);
        assert!(c.push(Gate::Cnot { control: 1, target: 1 }).is_err());
        assert!(c
            .push(Gate::ControlledPhase {
                controls: vec![0, 2],
                target: 2,
                angle: 1.0
            })
            .is_err());
    }

    #[test]
    fn inverse_reverses_order_and_inverts_gates() {
        let mut c = Circuit::new(2);
        c.push(Gate::H { target: 0 }).unwrap();
        c.push(Gate::Phase {
            target: 1,
            angle: 0.5,
        })
        .unwrap();
        let inv = c.inverse();
        assert_eq!(
            inv.gates()[0],
            Gate::Phase {
                target: 1,
                angle: -0.5
            }
        );
        assert_eq!(inv.gates()[1], Gate::H { target: 0 });
    }

    #[test]
    fn depth_counts_parallel_gates_once() {
        let mut c = Circuit::new(2);
        c.push(Gate::H { target: 0 }).unwrap();
        c.push(Gate::H { target: 1 }).unwrap();
        assert_eq!(c.depth(), 1);
        c.push(Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        assert_eq!(c.depth(), 2);
    }
}
