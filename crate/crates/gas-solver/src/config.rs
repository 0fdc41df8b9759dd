use serde::{Deserialize, Serialize};

use crate::error::GasError;
use pseudo_boolean::BinaryPolynomial;

/// Default schedule growth factor for the randomized rotation-count schedule.
pub const DEFAULT_LAMBDA: f64 = 8.0 / 7.0;

/// Default cap on total Grover applications per run.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// How the first threshold is chosen before any amplification happens.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InitialThreshold {
    /// Cost of one uniformly random assignment.
    RandomSample,
    /// Empirical q-quantile of the costs of 64 random assignments.
    Quantile { q: f64 },
    /// Cost of a caller-supplied approximate solution.
    ClassicalApproximate { assignment: Vec<u8> },
    /// The lower of the quantile estimate and the supplied approximate
    /// solution's cost.
    Combined { q: f64, assignment: Vec<u8> },
}

/// Solver parameters. `m_bits: None` sizes the cost register automatically
/// from the polynomial's cost spread so that every threshold-shifted variant
/// fits in two's complement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GasConfig {
    pub m_bits: Option<usize>,
    pub lambda: f64,
    pub max_oracle_queries: u64,
    pub rng_seed: u64,
    pub initial_threshold: InitialThreshold,
    /// When set, the search runs over assignments of exactly this Hamming
    /// weight: the variable register starts in a Dicke state instead of the
    /// uniform superposition and diffusion reflects about that state.
    pub dicke_weight: Option<usize>,
}

impl Default for GasConfig {
    fn default() -> Self {
        GasConfig {
            m_bits: None,
            lambda: DEFAULT_LAMBDA,
            max_oracle_queries: DEFAULT_BUDGET,
            rng_seed: 0,
            initial_threshold: InitialThreshold::RandomSample,
            dicke_weight: None,
        }
    }
}

impl GasConfig {
    pub fn seeded(rng_seed: u64) -> Self {
        GasConfig {
            rng_seed,
            ..GasConfig::default()
        }
    }

    pub fn validate(&self, poly: &BinaryPolynomial) -> Result<(), GasError> {
        if !(self.lambda > 1.0 && self.lambda < 4.0 / 3.0) {
            return Err(GasError::BadLambda {
                lambda: self.lambda,
            });
        }
        if self.max_oracle_queries == 0 {
            return Err(GasError::ZeroBudget);
        }
        if let Some(weight) = self.dicke_weight {
            if weight > poly.num_vars() {
                return Err(GasError::BadFeasibleWeight {
                    weight,
                    num_vars: poly.num_vars(),
                });
            }
        }
        match &self.initial_threshold {
            InitialThreshold::Quantile { q } => check_quantile(*q)?,
            InitialThreshold::ClassicalApproximate { assignment } => {
                self.check_witness(poly, assignment)?
            }
            InitialThreshold::Combined { q, assignment } => {
                check_quantile(*q)?;
                self.check_witness(poly, assignment)?;
            }
            InitialThreshold::RandomSample => {}
        }
        Ok(())
    }

    fn check_witness(&self, poly: &BinaryPolynomial, assignment: &[u8]) -> Result<(), GasError> {
        if assignment.len() != poly.num_vars() {
            return Err(GasError::WitnessLength {
                len: assignment.len(),
                num_vars: poly.num_vars(),
            });
        }
        if let Some(weight) = self.dicke_weight {
            let got = assignment.iter().filter(|&&b| b != 0).count();
            if got != weight {
                return Err(GasError::WitnessWeight { got, want: weight });
            }
        }
        Ok(())
    }
}

fn check_quantile(q: f64) -> Result<(), GasError> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(GasError::BadQuantile { q })
    }
}
