use serde::{Deserialize, Serialize};

use crate::config::GasConfig;

/// One adaptive round: the threshold in force, the rotation count drawn from
/// the schedule, and the classically evaluated measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GasRound {
    pub threshold: f64,
    pub rotation_count: u64,
    pub measured_assignment: Vec<u8>,
    pub measured_cost: f64,
    pub accepted: bool,
}

/// Full record of a solver run. `total_oracle_queries` is the sum of the
/// per-round rotation counts; nothing else counts as a query. `converged`
/// is false when the run stopped on budget exhaustion rather than on the
/// stall heuristic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GasTrace {
    pub rounds: Vec<GasRound>,
    pub total_oracle_queries: u64,
    pub best_assignment: Vec<u8>,
    pub best_cost: f64,
    pub converged: bool,
    /// Resolved cost-register width.
    pub m_bits: usize,
    /// Resolved coefficient scale.
    pub scale: f64,
}

impl GasTrace {
    /// Oracle queries spent up to and including the first round whose
    /// measurement reached `target_cost`, or `None` if no round did.
    /// The initial threshold's witness counts as reaching it at zero queries.
    pub fn queries_to_reach(&self, target_cost: f64, tol: f64) -> Option<u64> {
        let initial = self
            .rounds
            .first()
            .map(|r| r.threshold)
            .unwrap_or(self.best_cost);
        if initial <= target_cost + tol {
            return Some(0);
        }
        let mut total = 0;
        for round in &self.rounds {
            total += round.rotation_count;
            if round.measured_cost <= target_cost + tol {
                return Some(total);
            }
        }
        None
    }
}

/// The serialized form of one run: configuration and trace together, so the
/// run can be reproduced from its own output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunDocument {
    pub config: GasConfig,
    pub trace: GasTrace,
}

impl RunDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
