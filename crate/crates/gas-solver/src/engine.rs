use quantum_sim::{Circuit, Gate, StateVector};
use rand::Rng;

use pseudo_boolean::{
    append_phase_block, compile_state_prep, scale_for_range, width_for_integer_range,
    BinaryPolynomial, CostEncoding, DEFAULT_REAL_WIDTH, EXHAUSTIVE_LIMIT,
};

use crate::error::GasError;

/// Executes Grover rotations for one polynomial under one cost encoding.
///
/// The oracle is the single Z gate on the sign qubit of the cost register;
/// diffusion is implemented as inversion about the prepared state, which for
/// a Dicke-restricted variable register keeps all probability mass on the
/// feasible Hamming weight.
pub struct GasEngine {
    poly: BinaryPolynomial,
    enc: CostEncoding,
    dicke_weight: Option<usize>,
}

impl GasEngine {
    pub fn new(
        poly: BinaryPolynomial,
        enc: CostEncoding,
        dicke_weight: Option<usize>,
    ) -> Result<Self, GasError> {
        if let Some(weight) = dicke_weight {
            if weight > poly.num_vars() {
                return Err(GasError::BadFeasibleWeight {
                    weight,
                    num_vars: poly.num_vars(),
                });
            }
        }
        Ok(GasEngine {
            poly,
            enc,
            dicke_weight,
        })
    }

    pub fn poly(&self) -> &BinaryPolynomial {
        &self.poly
    }

    pub fn encoding(&self) -> CostEncoding {
        self.enc
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }

    /// Number of assignments the search ranges over.
    pub fn search_space(&self) -> u64 {
        match self.dicke_weight {
            None => 1u64 << self.poly.num_vars(),
            Some(k) => binomial(self.poly.num_vars(), k),
        }
    }

    /// Prepares A|0>: the state whose variable register is the uniform (or
    /// Dicke) superposition and whose cost register reads the two's-complement
    /// encoding of `f(x) - threshold` on each branch.
    pub fn prepare(&self, threshold: f64) -> Result<StateVector, GasError> {
        let shifted = self.poly.shifted(-threshold);
        let n = self.poly.num_vars();
        let m = self.enc.m;
        match self.dicke_weight {
            None => {
                let circuit = compile_state_prep(&shifted, &self.enc)?;
                let mut state = StateVector::zero(n + m)?;
                state.apply_circuit(&circuit)?;
                Ok(state)
            }
            Some(k) => {
                let mut state = dicke_with_uniform_cost(n, k, m)?;
                let mut circuit = Circuit::new(n + m);
                append_phase_block(&mut circuit, &shifted, &self.enc)?;
                circuit.push(Gate::Iqft { start: n, len: m })?;
                state.apply_circuit(&circuit)?;
                Ok(state)
            }
        }
    }

    /// One Grover rotation in place: sign flip on negative-cost branches,
    /// then reflection about the prepared state `psi`.
    pub fn grover_step(&self, state: &mut StateVector, psi: &StateVector) {
        let sign_qubit = self.poly.num_vars() + self.enc.m - 1;
        state
            .apply_gate(&Gate::Z { target: sign_qubit })
            .expect("sign qubit in range");
        state.reflect_about(psi).expect("same register size");
    }

    /// The prepared state after `rotation_count` Grover rotations against
    /// the given threshold.
    pub fn amplified_state(
        &self,
        threshold: f64,
        rotation_count: u64,
    ) -> Result<StateVector, GasError> {
        let psi = self.prepare(threshold)?;
        let mut state = psi.clone();
        for _ in 0..rotation_count {
            self.grover_step(&mut state, &psi);
        }
        Ok(state)
    }

    /// Extracts the variable assignment from a measured basis-state index.
    pub fn assignment_of_index(&self, index: usize) -> Vec<u8> {
        let n = self.poly.num_vars();
        pseudo_boolean::index_to_assignment(index & ((1 << n) - 1), n)
    }

    /// Amplifies, samples one measurement, and evaluates it classically on
    /// the unshifted polynomial.
    pub fn measure_amplified(
        &self,
        threshold: f64,
        rotation_count: u64,
        rng: &mut impl Rng,
    ) -> Result<(Vec<u8>, f64), GasError> {
        let state = self.amplified_state(threshold, rotation_count)?;
        let index = state.sample_index(rng);
        let assignment = self.assignment_of_index(index);
        let cost = self.poly.evaluate(&assignment)?;
        Ok((assignment, cost))
    }
}

/// Variable register in the Dicke state of the given weight, cost register
/// uniform, as one (n+m)-qubit product state.
fn dicke_with_uniform_cost(n: usize, k: usize, m: usize) -> Result<StateVector, GasError> {
    let dicke = StateVector::dicke(n, k)?;
    let var_dim = 1usize << n;
    let cost_dim = 1usize << m;
    let cost_amp = 1.0 / (cost_dim as f64).sqrt();
    let mut amps = vec![num_complex::Complex64::new(0.0, 0.0); var_dim * cost_dim];
    for x in 0..var_dim {
        let a = dicke.amplitude(x) * cost_amp;
        if a.norm_sqr() == 0.0 {
            continue;
        }
        for c in 0..cost_dim {
            amps[x | (c << n)] = a;
        }
    }
    Ok(StateVector::from_amplitudes(amps)?)
}

/// Sizes the cost register for a whole threshold-shifted family: every
/// threshold GAS can set is an achieved cost, so shifted costs stay within
/// +/- the feasible cost spread. Integer-coefficient polynomials keep scale
/// 1; real coefficients get a power-of-two scale into an `m`-bit register
/// (`DEFAULT_REAL_WIDTH` unless overridden).
pub fn resolve_encoding(
    poly: &BinaryPolynomial,
    m_bits: Option<usize>,
    dicke_weight: Option<usize>,
) -> Result<CostEncoding, GasError> {
    let (lower, upper) = feasible_bounds(poly, dicke_weight)?;
    let spread = (upper - lower).max(1.0);
    let integer = poly.has_integer_coefficients(1e-9);
    let enc = match (m_bits, integer) {
        (Some(m), true) => CostEncoding::new(m, 1.0)?,
        (Some(m), false) => CostEncoding::new(m, scale_for_range(-spread, spread, m))?,
        (None, true) => CostEncoding::new(width_for_integer_range(-spread, spread), 1.0)?,
        (None, false) => CostEncoding::new(
            DEFAULT_REAL_WIDTH,
            scale_for_range(-spread, spread, DEFAULT_REAL_WIDTH),
        )?,
    };
    Ok(enc)
}

/// Cost bounds over the feasible assignments: exact when the variable count
/// permits enumeration, sound coefficient bounds otherwise.
pub fn feasible_bounds(
    poly: &BinaryPolynomial,
    dicke_weight: Option<usize>,
) -> Result<(f64, f64), GasError> {
    if poly.num_vars() == 0 {
        return Ok((poly.constant(), poly.constant()));
    }
    if poly.num_vars() > EXHAUSTIVE_LIMIT {
        return Ok(poly.cost_bounds());
    }
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for idx in 0..1usize << poly.num_vars() {
        if let Some(k) = dicke_weight {
            if idx.count_ones() as usize != k {
                continue;
            }
        }
        let value = poly.evaluate_index(idx);
        lower = lower.min(value);
        upper = upper.max(value);
    }
    Ok((lower, upper))
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k.min(n));
    let mut result: u64 = 1;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}
