use crate::error::PolyError;
use std::fmt;

/// Limit for exhaustive sweeps (exact bounds, brute-force minima).
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// One multilinear term: a real coefficient times a product of distinct
/// binary variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: f64,
    /// Sorted, duplicate-free variable indices.
    pub variables: Vec<usize>,
}

/// A real-coefficient multilinear polynomial over binary variables:
/// constant + sum of coefficient * product(x_i). Since x^2 = x for binary x,
/// no variable repeats within a term, and no two terms share a variable set.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryPolynomial {
    num_vars: usize,
    constant: f64,
    terms: Vec<Term>,
}

impl BinaryPolynomial {
    /// The zero polynomial over `num_vars` variables.
    pub fn new(num_vars: usize) -> Self {
        BinaryPolynomial {
            num_vars,
            constant: 0.0,
            terms: Vec::new(),
        }
    }

    pub fn constant_poly(num_vars: usize, constant: f64) -> Self {
        BinaryPolynomial {
            num_vars,
            constant,
            terms: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Largest term size, or 0 for a constant polynomial.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.variables.len()).max().unwrap_or(0)
    }

    pub fn set_constant(&mut self, constant: f64) {
        self.constant = constant;
    }

    /// Adds `coefficient * product(variables)`. Repeated indices collapse
    /// (x^2 = x), an empty product folds into the constant, and a term whose
    /// variable set already exists merges by coefficient addition. Terms with
    /// zero net coefficient are dropped.
    pub fn add_term(&mut self, coefficient: f64, variables: &[usize]) -> Result<(), PolyError> {
        for &v in variables {
            if v >= self.num_vars {
                return Err(PolyError::VariableOutOfRange {
                    index: v,
                    num_vars: self.num_vars,
                });
            }
        }
        let mut vars = variables.to_vec();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            self.constant += coefficient;
            return Ok(());
        }
        match self
            .terms
            .binary_search_by(|t| term_order(&t.variables, &vars))
        {
            Ok(pos) => {
                self.terms[pos].coefficient += coefficient;
                if self.terms[pos].coefficient == 0.0 {
                    self.terms.remove(pos);
                }
            }
            Err(pos) => {
                if coefficient != 0.0 {
                    self.terms.insert(
                        pos,
                        Term {
                            coefficient,
                            variables: vars,
                        },
                    );
                }
            }
        }
        Ok(())
    }

    /// Evaluates the polynomial at a 0/1 assignment indexed by variable.
    pub fn evaluate(&self, assignment: &[u8]) -> Result<f64, PolyError> {
        if assignment.len() != self.num_vars {
            return Err(PolyError::AssignmentLength {
                len: assignment.len(),
                num_vars: self.num_vars,
            });
        }
        let mut total = self.constant;
        for term in &self.terms {
            if term.variables.iter().all(|&v| assignment[v] != 0) {
                total += term.coefficient;
            }
        }
        Ok(total)
    }

    /// Evaluates at the assignment packed into an index: variable `v` takes
    /// bit `v` of `index`.
    pub fn evaluate_index(&self, index: usize) -> f64 {
        let mut total = self.constant;
        for term in &self.terms {
            if term.variables.iter().all(|&v| index >> v & 1 != 0) {
                total += term.coefficient;
            }
        }
        total
    }

    /// The same polynomial with `delta` added to the constant; every
    /// evaluation shifts by exactly `delta`.
    pub fn shifted(&self, delta: f64) -> Self {
        let mut out = self.clone();
        out.constant += delta;
        out
    }

    /// Sound cost bounds from coefficient signs:
    /// constant + sum(min(0, c)) <= f(x) <= constant + sum(max(0, c)).
    pub fn cost_bounds(&self) -> (f64, f64) {
        let mut lower = self.constant;
        let mut upper = self.constant;
        for term in &self.terms {
            if term.coefficient < 0.0 {
                lower += term.coefficient;
            } else {
                upper += term.coefficient;
            }
        }
        (lower, upper)
    }

    /// Exact achievable bounds by exhaustive evaluation; only for small
    /// variable counts.
    pub fn exact_bounds(&self) -> Result<(f64, f64), PolyError> {
        if self.num_vars > EXHAUSTIVE_LIMIT {
            return Err(PolyError::ExhaustiveTooLarge {
                num_vars: self.num_vars,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let mut lower = f64::INFINITY;
        let mut upper = f64::NEG_INFINITY;
        for idx in 0..1usize << self.num_vars {
            let value = self.evaluate_index(idx);
            lower = lower.min(value);
            upper = upper.max(value);
        }
        Ok((lower, upper))
    }

    /// Global minimum by exhaustive scan in index order; ties resolve to the
    /// smallest index. Only for small variable counts.
    pub fn brute_force_minimum(&self) -> Result<(Vec<u8>, f64), PolyError> {
        if self.num_vars > EXHAUSTIVE_LIMIT {
            return Err(PolyError::ExhaustiveTooLarge {
                num_vars: self.num_vars,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let mut best_idx = 0usize;
        let mut best = self.evaluate_index(0);
        for idx in 1..1usize << self.num_vars {
            let value = self.evaluate_index(idx);
            if value < best {
                best = value;
                best_idx = idx;
            }
        }
        Ok((index_to_assignment(best_idx, self.num_vars), best))
    }

    /// True when the constant and every coefficient are integers within `tol`.
    pub fn has_integer_coefficients(&self, tol: f64) -> bool {
        let is_int = |x: f64| (x - x.round()).abs() <= tol;
        is_int(self.constant) && self.terms.iter().all(|t| is_int(t.coefficient))
    }
}

/// Unpacks an index into a per-variable assignment: variable `v` takes bit `v`.
pub fn index_to_assignment(index: usize, num_vars: usize) -> Vec<u8> {
    (0..num_vars).map(|v| (index >> v & 1) as u8).collect()
}

/// Packs a per-variable assignment into an index.
pub fn assignment_to_index(assignment: &[u8]) -> usize {
    assignment
        .iter()
        .enumerate()
        .fold(0, |acc, (v, &b)| acc | ((b as usize & 1) << v))
}

fn term_order(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for BinaryPolynomial {
    /// Prints in the text-file format: one term per line, constant last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for term in &self.terms {
            write!(f, "{}", term.coefficient)?;
            for v in &term.variables {
                write!(f, " * x{v}")?;
            }
            writeln!(f)?;
        }
        if self.constant != 0.0 || self.terms.is_empty() {
            writeln!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// f = -2 x0 - x1 + 3 x0 x1, the worked example used across the crate.
    pub(crate) fn example_poly() -> BinaryPolynomial {
        let mut p = BinaryPolynomial::new(2);
        p.add_term(-2.0, &[0]).unwrap();
        p.add_term(-1.0, &[1]).unwrap();
        p.add_term(3.0, &[0, 1]).unwrap();
        p
    }

    #[test]
    fn evaluate_matches_hand_table() {
        let p = example_poly();
        // Brute-force table over all four assignments: (0, -2, -1, 0).
        assert_eq!(p.evaluate(&[0, 0]).unwrap(), 0.0);
        assert_eq!(p.evaluate(&[1, 0]).unwrap(), -2.0);
        assert_eq!(p.evaluate(&[0, 1]).unwrap(), -1.0);
        assert_eq!(p.evaluate(&[1, 1]).unwrap(), 0.0);
    }

    #[test]
    fn evaluate_rejects_wrong_length() {
        let p = example_poly();
        assert!(matches!(
            p.evaluate(&[0]),
            Err(PolyError::AssignmentLength { .. })
        ));
    }

    #[test]
    fn evaluate_index_agrees_with_evaluate() {
        let p = example_poly();
        for idx in 0..4 {
            let bits = index_to_assignment(idx, 2);
            assert_eq!(p.evaluate(&bits).unwrap(), p.evaluate_index(idx));
            assert_eq!(assignment_to_index(&bits), idx);
        }
    }

    #[test]
    fn add_term_merges_and_collapses() {
        let mut p = BinaryPolynomial::new(3);
        p.add_term(2.0, &[1, 0]).unwrap();
        p.add_term(1.5, &[0, 1]).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].coefficient, 3.5);
        assert_eq!(p.terms()[0].variables, vec![0, 1]);

        // x^2 = x: repeated index collapses to the single variable.
        p.add_term(1.0, &[2, 2]).unwrap();
        assert_eq!(p.terms()[0].variables, vec![2]);

        // An empty product is a constant contribution.
        p.add_term(4.0, &[]).unwrap();
        assert_eq!(p.constant(), 4.0);

        // Cancelling coefficients removes the term.
        p.add_term(-3.5, &[0, 1]).unwrap();
        assert!(p.terms().iter().all(|t| t.variables != vec![0, 1]));
    }

    #[test]
    fn add_term_rejects_out_of_range() {
        let mut p = BinaryPolynomial::new(2);
        assert!(matches!(
            p.add_term(1.0, &[2]),
            Err(PolyError::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn shift_examples() {
        let p = example_poly();
        let down = p.shifted(-3.0);
        for idx in 0..4 {
            assert_eq!(down.evaluate_index(idx), p.evaluate_index(idx) - 3.0);
        }
        assert_eq!(p.shifted(0.0), p);
        let up = p.shifted(2.0);
        let table: Vec<f64> = (0..4).map(|i| up.evaluate_index(i)).collect();
        assert_eq!(table, vec![2.0, 0.0, 1.0, 2.0]);
    }

    #[test]
    fn sound_bounds_from_coefficient_signs() {
        let p = example_poly();
        assert_eq!(p.cost_bounds(), (-3.0, 3.0));
        let c = BinaryPolynomial::constant_poly(2, 7.5);
        assert_eq!(c.cost_bounds(), (7.5, 7.5));
    }

    #[test]
    fn exact_bounds_tighten_sound_bounds() {
        let p = example_poly();
        assert_eq!(p.exact_bounds().unwrap(), (-2.0, 0.0));
    }

    #[test]
    fn exact_bounds_respect_limit() {
        let p = BinaryPolynomial::new(24);
        assert!(matches!(
            p.exact_bounds(),
            Err(PolyError::ExhaustiveTooLarge { .. })
        ));
    }

    #[test]
    fn brute_force_minimum_finds_global_minimum() {
        let p = example_poly();
        let (assignment, cost) = p.brute_force_minimum().unwrap();
        assert_eq!(assignment, vec![1, 0]);
        assert_eq!(cost, -2.0);
    }

    #[test]
    fn integer_coefficient_detection() {
        assert!(example_poly().has_integer_coefficients(1e-9));
        let mut p = BinaryPolynomial::new(1);
        p.add_term(0.5, &[0]).unwrap();
        assert!(!p.has_integer_coefficients(1e-9));
    }

    #[test]
    fn display_round_trips_through_parser() {
        let p = example_poly();
        let text = p.to_string();
        let parsed = crate::parse::parse_polynomial(&text).unwrap();
        for idx in 0..4 {
            assert_eq!(parsed.evaluate_index(idx), p.evaluate_index(idx));
        }
    }
}
