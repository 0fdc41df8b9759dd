use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudo_boolean::BinaryPolynomial;

use crate::config::GasConfig;
use crate::engine::{resolve_encoding, GasEngine};
use crate::error::GasError;
use crate::threshold::initial_threshold_with_witness;
use crate::trace::{GasRound, GasTrace};

/// Runs Grover adaptive search: starting from the strategy's initial
/// threshold, repeatedly amplify the states costing strictly less than the
/// threshold, measure, and lower the threshold to every improvement. The
/// rotation count of each round is drawn uniformly from a geometrically
/// growing range (growth factor lambda, capped at sqrt of the search-space
/// size); the range resets on success. The run ends when the query budget is
/// exhausted (`converged: false`) or after enough consecutive failures at the
/// fully grown range to conclude no improving state remains.
pub fn run_gas(poly: &BinaryPolynomial, config: &GasConfig) -> Result<GasTrace, GasError> {
    config.validate(poly)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);

    if poly.num_vars() == 0 {
        return Ok(GasTrace {
            rounds: Vec::new(),
            total_oracle_queries: 0,
            best_assignment: Vec::new(),
            best_cost: poly.constant(),
            converged: true,
            m_bits: 0,
            scale: 1.0,
        });
    }

    let enc = resolve_encoding(poly, config.m_bits, config.dicke_weight)?;
    let engine = GasEngine::new(poly.clone(), enc, config.dicke_weight)?;
    let init = initial_threshold_with_witness(
        poly,
        &config.initial_threshold,
        &mut rng,
        config.dicke_weight,
    )?;

    let mut best_assignment = init.assignment;
    let mut best_cost = init.threshold;

    let search_space = engine.search_space() as f64;
    let schedule_cap = search_space.sqrt().max(1.0);
    let stall_limit = (3.0 * search_space.log2().ceil()).max(6.0) as u32;

    let mut schedule: f64 = 1.0;
    let mut stalls: u32 = 0;
    let mut rounds: Vec<GasRound> = Vec::new();
    let mut total_queries: u64 = 0;
    let mut converged = false;

    // The prepared state only depends on the threshold; rebuild it lazily on
    // acceptance instead of every round.
    let mut psi = engine.prepare(best_cost)?;
    let mut psi_threshold = best_cost;

    while total_queries < config.max_oracle_queries {
        let bound = schedule.ceil().max(1.0) as u64;
        let drawn = rng.gen_range(0..bound);
        let rotation_count = drawn.min(config.max_oracle_queries - total_queries);

        if psi_threshold != best_cost {
            psi = engine.prepare(best_cost)?;
            psi_threshold = best_cost;
        }
        let mut state = psi.clone();
        for _ in 0..rotation_count {
            engine.grover_step(&mut state, &psi);
        }
        let index = state.sample_index(&mut rng);
        let measured_assignment = engine.assignment_of_index(index);
        let measured_cost = poly.evaluate(&measured_assignment)?;
        total_queries += rotation_count;

        let accepted = measured_cost < best_cost;
        rounds.push(GasRound {
            threshold: best_cost,
            rotation_count,
            measured_assignment: measured_assignment.clone(),
            measured_cost,
            accepted,
        });

        if accepted {
            best_cost = measured_cost;
            best_assignment = measured_assignment;
            schedule = 1.0;
            stalls = 0;
        } else {
            let at_cap = schedule >= schedule_cap;
            schedule = (schedule * config.lambda).min(schedule_cap);
            if at_cap {
                stalls += 1;
                if stalls >= stall_limit {
                    converged = true;
                    break;
                }
            }
        }
    }

    Ok(GasTrace {
        rounds,
        total_oracle_queries: total_queries,
        best_assignment,
        best_cost,
        converged,
        m_bits: enc.m,
        scale: enc.scale,
    })
}

/// One amplified measurement outside the adaptive loop.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplifiedMeasurement {
    pub assignment: Vec<u8>,
    pub cost: f64,
    pub queries_used: u64,
}

/// Prepares the state for `poly - threshold`, applies `rotation_count`
/// Grover rotations, measures once with a seeded generator, and evaluates
/// the measured assignment classically. Every rotation is one oracle query.
pub fn amplified_measure(
    poly: &BinaryPolynomial,
    threshold: f64,
    rotation_count: u64,
    seed: u64,
) -> Result<AmplifiedMeasurement, GasError> {
    let enc = resolve_encoding(poly, None, None)?;
    let engine = GasEngine::new(poly.clone(), enc, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (assignment, cost) = engine.measure_amplified(threshold, rotation_count, &mut rng)?;
    Ok(AmplifiedMeasurement {
        assignment,
        cost,
        queries_used: rotation_count,
    })
}

/// Cost function with a single negative state: f(x) = 2 * d_H(x, marked) - 1
/// evaluates to -1 exactly at the marked assignment and to positive odd
/// values elsewhere, so threshold 0 marks one item.
pub fn single_marked_polynomial(marked: &[u8]) -> BinaryPolynomial {
    let n = marked.len();
    let mut poly = BinaryPolynomial::new(n);
    let ones = marked.iter().filter(|&&b| b != 0).count() as f64;
    poly.set_constant(2.0 * ones - 1.0);
    for (v, &bit) in marked.iter().enumerate() {
        let coefficient = if bit != 0 { -2.0 } else { 2.0 };
        poly.add_term(coefficient, &[v]).expect("index in range");
    }
    poly
}
