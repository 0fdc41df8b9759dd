use rand::Rng;
use rand_chacha::ChaCha8Rng;

use pseudo_boolean::BinaryPolynomial;

use crate::config::InitialThreshold;
use crate::error::GasError;

/// Number of random assignments behind the quantile strategy's empirical
/// cost distribution.
pub const QUANTILE_SAMPLES: usize = 64;

/// An initial threshold together with the assignment that achieves it, so
/// the solver always starts from a witnessed cost.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdInit {
    pub threshold: f64,
    pub assignment: Vec<u8>,
}

/// Resolves the initial threshold for a run. The threshold is always the
/// cost of a concrete assignment: a random draw, the order statistic of 64
/// random draws nearest the requested quantile, a supplied approximate
/// solution, or the best of the latter two.
pub fn initial_threshold_with_witness(
    poly: &BinaryPolynomial,
    strategy: &InitialThreshold,
    rng: &mut ChaCha8Rng,
    dicke_weight: Option<usize>,
) -> Result<ThresholdInit, GasError> {
    match strategy {
        InitialThreshold::RandomSample => {
            let assignment = random_feasible(poly.num_vars(), dicke_weight, rng);
            let threshold = poly.evaluate(&assignment)?;
            Ok(ThresholdInit {
                threshold,
                assignment,
            })
        }
        InitialThreshold::Quantile { q } => {
            if !(*q > 0.0 && *q < 1.0) {
                return Err(GasError::BadQuantile { q: *q });
            }
            let mut samples: Vec<(f64, Vec<u8>)> = (0..QUANTILE_SAMPLES)
                .map(|_| {
                    let a = random_feasible(poly.num_vars(), dicke_weight, rng);
                    let cost = poly.evaluate(&a).expect("assignment length matches");
                    (cost, a)
                })
                .collect();
            samples.sort_by(|a, b| a.0.total_cmp(&b.0));
            let rank = ((q * QUANTILE_SAMPLES as f64).floor() as usize).min(QUANTILE_SAMPLES - 1);
            let (threshold, assignment) = samples.swap_remove(rank);
            Ok(ThresholdInit {
                threshold,
                assignment,
            })
        }
        InitialThreshold::ClassicalApproximate { assignment } => {
            let threshold = poly.evaluate(assignment)?;
            Ok(ThresholdInit {
                threshold,
                assignment: assignment.clone(),
            })
        }
        InitialThreshold::Combined { q, assignment } => {
            let quantile = initial_threshold_with_witness(
                poly,
                &InitialThreshold::Quantile { q: *q },
                rng,
                dicke_weight,
            )?;
            let classical = poly.evaluate(assignment)?;
            if classical <= quantile.threshold {
                Ok(ThresholdInit {
                    threshold: classical,
                    assignment: assignment.clone(),
                })
            } else {
                Ok(quantile)
            }
        }
    }
}

/// Public convenience matching the strategy contract: just the threshold.
pub fn initial_threshold(
    poly: &BinaryPolynomial,
    strategy: &InitialThreshold,
    seed: u64,
) -> Result<f64, GasError> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(initial_threshold_with_witness(poly, strategy, &mut rng, None)?.threshold)
}

/// Uniformly random assignment, restricted to a fixed Hamming weight when
/// the search is Dicke-constrained.
pub fn random_feasible(num_vars: usize, dicke_weight: Option<usize>, rng: &mut impl Rng) -> Vec<u8> {
    match dicke_weight {
        None => (0..num_vars).map(|_| rng.gen_range(0..2u8)).collect(),
        Some(k) => {
            let mut positions: Vec<usize> = (0..num_vars).collect();
            for i in 0..k {
                let j = rng.gen_range(i..num_vars);
                positions.swap(i, j);
            }
            let mut assignment = vec![0u8; num_vars];
            for &p in &positions[..k] {
                assignment[p] = 1;
            }
            assignment
        }
    }
}
