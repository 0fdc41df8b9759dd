use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudo_boolean::{index_to_assignment, BinaryPolynomial};

use crate::error::GasError;

/// Largest register the exhaustive baseline will enumerate.
pub const CLASSICAL_EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct ExhaustiveResult {
    pub assignment: Vec<u8>,
    pub cost: f64,
    /// 1-based position in the shuffled evaluation order at which the global
    /// minimum was first evaluated: the classical query count.
    pub queries_used: u64,
}

/// Classical exhaustive search in a seeded random order. Always returns the
/// exact minimum; `queries_used` has mean (N+1)/2 for a unique minimum and
/// worst case N.
pub fn classical_exhaustive(
    poly: &BinaryPolynomial,
    seed: u64,
) -> Result<ExhaustiveResult, GasError> {
    let n = poly.num_vars();
    if n > CLASSICAL_EXHAUSTIVE_LIMIT {
        return Err(GasError::TooManyVariables {
            num_vars: n,
            limit: CLASSICAL_EXHAUSTIVE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(ExhaustiveResult {
            assignment: Vec::new(),
            cost: poly.constant(),
            queries_used: 1,
        });
    }
    let mut order: Vec<u32> = (0..1u32 << n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let mut best_cost = f64::INFINITY;
    let mut best_index = 0usize;
    let mut best_position = 0u64;
    for (position, &idx) in order.iter().enumerate() {
        let cost = poly.evaluate_index(idx as usize);
        // Strict improvement keeps the first position achieving the minimum.
        if cost < best_cost {
            best_cost = cost;
            best_index = idx as usize;
            best_position = position as u64;
        }
    }
    Ok(ExhaustiveResult {
        assignment: index_to_assignment(best_index, n),
        cost: best_cost,
        queries_used: best_position + 1,
    })
}

/// Greedy single-flip descent from a random start; a cheap classical
/// approximate solution for seeding the threshold.
pub fn greedy_descent(poly: &BinaryPolynomial, seed: u64) -> Result<(Vec<u8>, f64), GasError> {
    let n = poly.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2u8)).collect();
    let mut cost = poly.evaluate(&assignment)?;
    loop {
        let mut improved = false;
        for v in 0..n {
            assignment[v] ^= 1;
            let flipped = poly.evaluate(&assignment)?;
            if flipped < cost {
                cost = flipped;
                improved = true;
            } else {
                assignment[v] ^= 1;
            }
        }
        if !improved {
            return Ok((assignment, cost));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_poly() -> BinaryPolynomial {
        let mut p = BinaryPolynomial::new(2);
        p.add_term(-2.0, &[0]).unwrap();
        p.add_term(-1.0, &[1]).unwrap();
        p.add_term(3.0, &[0, 1]).unwrap();
        p
    }

    #[test]
    fn always_returns_the_true_minimum() {
        let p = example_poly();
        for seed in 0..50 {
            let result = classical_exhaustive(&p, seed).unwrap();
            assert_eq!(result.cost, -2.0);
            assert_eq!(result.assignment, vec![1, 0]);
            assert!(result.queries_used >= 1 && result.queries_used <= 4);
        }
    }

    #[test]
    fn mean_queries_match_sampling_without_replacement() {
        // Unique minimum among N = 4: the first hit is uniform over the four
        // positions, so the mean is (N+1)/2 = 2.5.
        let p = example_poly();
        let trials = 10_000u64;
        let total: u64 = (0..trials)
            .map(|seed| classical_exhaustive(&p, seed).unwrap().queries_used)
            .sum();
        let mean = total as f64 / trials as f64;
        assert!(
            (mean - 2.5).abs() / 2.5 < 0.05,
            "mean queries {mean}, expected about 2.5"
        );
    }

    #[test]
    fn some_seed_exhibits_the_worst_case() {
        let p = example_poly();
        let worst = (0..100)
            .map(|seed| classical_exhaustive(&p, seed).unwrap().queries_used)
            .max()
            .unwrap();
        assert_eq!(worst, 4, "no seed placed the minimum last");
    }

    #[test]
    fn rejects_oversized_registers() {
        let p = BinaryPolynomial::new(25);
        assert!(matches!(
            classical_exhaustive(&p, 0),
            Err(GasError::TooManyVariables { .. })
        ));
    }

    #[test]
    fn greedy_descent_never_worsens() {
        let p = example_poly();
        for seed in 0..20 {
            let (assignment, cost) = greedy_descent(&p, seed).unwrap();
            assert_eq!(p.evaluate(&assignment).unwrap(), cost);
            // Local minimum of this landscape is the global one.
            assert_eq!(cost, -2.0);
        }
    }
}
