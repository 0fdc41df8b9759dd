use thiserror::Error;

/// Errors raised by state construction and gate application.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("control qubits overlap the target qubit {target}")]
    ControlTargetOverlap { target: usize },

    #[error("circuit acts on {circuit} qubits but state has {state}")]
    QubitCountMismatch { circuit: usize, state: usize },

    #[error("register of {requested} qubits exceeds the simulator limit of {limit}")]
    TooManyQubits { requested: usize, limit: usize },

    #[error("register must contain at least one qubit")]
    EmptyRegister,

    #[error("amplitude vector of length {len} is not a power of two")]
    NotPowerOfTwo { len: usize },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("state norm {norm} is outside tolerance of 1")]
    NotNormalized { norm: f64 },

    #[error("bitstring length {len} does not match {num_qubits} qubits")]
    BitstringLength { len: usize, num_qubits: usize },

    #[error("Hamming weight {weight} exceeds register size {num_qubits}")]
    WeightTooLarge { weight: usize, num_qubits: usize },

    #[error("register slice [{start}, {start}+{len}) is empty or out of range")]
    BadRegisterSlice { start: usize, len: usize },
}
