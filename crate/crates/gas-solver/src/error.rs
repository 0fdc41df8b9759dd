use pseudo_boolean::PolyError;
use quantum_sim::SimError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GasError {
    #[error(transparent)]
    Sim(#[from] SimError),

    #[error(transparent)]
    Poly(#[from] PolyError),

    #[error("schedule growth factor must lie strictly between 1 and 4/3, got {lambda}")]
    BadLambda { lambda: f64 },

    #[error("oracle-query budget must be at least 1")]
    ZeroBudget,

    #[error("quantile must lie strictly inside (0, 1), got {q}")]
    BadQuantile { q: f64 },

    #[error("approximate assignment has {len} bits but the polynomial has {num_vars} variables")]
    WitnessLength { len: usize, num_vars: usize },

    #[error("approximate assignment has Hamming weight {got}, the feasible weight is {want}")]
    WitnessWeight { got: usize, want: usize },

    #[error("feasible Hamming weight {weight} exceeds {num_vars} variables")]
    BadFeasibleWeight { weight: usize, num_vars: usize },

    #[error("exhaustive search supports at most {limit} variables, got {num_vars}")]
    TooManyVariables { num_vars: usize, limit: usize },

    #[error("oracle needs a cost register of at least 1 qubit inside the circuit")]
    BadOracleWidth,
}
