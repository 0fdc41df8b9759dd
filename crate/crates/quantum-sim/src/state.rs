use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::FftPlanner;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::circuit::Circuit;
use crate::error::SimError;
use crate::gate::Gate;

/// Default cap on register size: 2^26 amplitudes is about 1 GiB.
pub const DEFAULT_MAX_QUBITS: usize = 26;

static MAX_QUBITS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_QUBITS);

/// Current register-size cap for new states.
pub fn simulator_limit() -> usize {
    MAX_QUBITS.load(Ordering::Relaxed)
}

/// Overrides the register-size cap (per process).
pub fn set_simulator_limit(num_qubits: usize) {
    MAX_QUBITS.store(num_qubits, Ordering::Relaxed);
}

/// One sampled measurement of every qubit in the register.
///
/// `bitstring` is printed most-significant-first: `bitstring[0]` is the
/// highest-indexed qubit. `probability` is the squared amplitude magnitude
/// of the collapsed basis state at measurement time.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOutcome {
    pub bitstring: Vec<u8>,
    pub probability: f64,
}

impl MeasurementOutcome {
    /// Basis-state index of the outcome.
    pub fn index(&self) -> usize {
        bits_to_index(&self.bitstring)
    }
}

/// Converts a basis-state index to a most-significant-first bit array.
pub fn index_to_bits(index: usize, num_qubits: usize) -> Vec<u8> {
    (0..num_qubits)
        .rev()
        .map(|q| ((index >> q) & 1) as u8)
        .collect()
}

/// Converts a most-significant-first bit array to a basis-state index.
pub fn bits_to_index(bits: &[u8]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | (b as usize & 1))
}

/// Dense state of a qubit register: 2^n complex amplitudes over the
/// computational basis. Qubit 0 is the least-significant bit of the
/// basis-state index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    fn check_size(num_qubits: usize) -> Result<(), SimError> {
        if num_qubits == 0 {
            return Err(SimError::EmptyRegister);
        }
        let limit = simulator_limit();
        if num_qubits > limit {
            return Err(SimError::TooManyQubits {
                requested: num_qubits,
                limit,
            });
        }
        Ok(())
    }

    /// The all-zeros basis state |0...0>.
    pub fn zero(num_qubits: usize) -> Result<Self, SimError> {
        Self::check_size(num_qubits)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Builds a state from explicit amplitudes; the length must be a power of
    /// two and the vector must already be normalized.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(SimError::NotPowerOfTwo { len });
        }
        let num_qubits = len.trailing_zeros() as usize;
        Self::check_size(num_qubits)?;
        let state = StateVector { num_qubits, amps };
        let norm = state.norm_sqr().sqrt();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(SimError::NotNormalized { norm });
        }
        Ok(state)
    }

    /// Equal superposition of all 2^n basis states, amplitude 1/sqrt(2^n).
    pub fn uniform_superposition(num_qubits: usize) -> Result<Self, SimError> {
        Self::check_size(num_qubits)?;
        let dim = 1usize << num_qubits;
        let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Ok(StateVector {
            num_qubits,
            amps: vec![amp; dim],
        })
    }

    /// Uniform superposition over exactly the basis states of Hamming weight
    /// `k`: amplitude 1/sqrt(C(n,k)) on each, zero elsewhere.
    pub fn dicke(num_qubits: usize, weight: usize) -> Result<Self, SimError> {
        Self::check_size(num_qubits)?;
        if weight > num_qubits {
            return Err(SimError::WeightTooLarge {
                weight,
                num_qubits,
            });
        }
        let dim = 1usize << num_qubits;
        let count = binomial(num_qubits, weight);
        let amp = Complex64::new(1.0 / (count as f64).sqrt(), 0.0);
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        for (idx, slot) in amps.iter_mut().enumerate() {
            if idx.count_ones() as usize == weight {
                *slot = amp;
            }
        }
        Ok(StateVector { num_qubits, amps })
    }

    /// Normalizes a real data vector into probability amplitudes. The length
    /// must be a power of two and the data must not be all zeros.
    pub fn amplitude_embed(data: &[f64]) -> Result<Self, SimError> {
        let len = data.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(SimError::NotPowerOfTwo { len });
        }
        let num_qubits = len.trailing_zeros() as usize;
        Self::check_size(num_qubits)?;
        let norm: f64 = data.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(SimError::ZeroVector);
        }
        let amps = data
            .iter()
            .map(|&x| Complex64::new(x / norm, 0.0))
            .collect();
        Ok(StateVector { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Squared amplitude magnitude of one basis state, indexed by a
    /// most-significant-first bitstring.
    pub fn probability_of(&self, bits: &[u8]) -> Result<f64, SimError> {
        if bits.len() != self.num_qubits {
            return Err(SimError::BitstringLength {
                len: bits.len(),
                num_qubits: self.num_qubits,
            });
        }
        Ok(self.amps[bits_to_index(bits)].norm_sqr())
    }

    pub fn probability_of_index(&self, index: usize) -> f64 {
        self.amps[index].norm_sqr()
    }

    /// <self|other>.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64, SimError> {
        if self.num_qubits != other.num_qubits {
            return Err(SimError::QubitCountMismatch {
                circuit: other.num_qubits,
                state: self.num_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Reflects this state about `axis`: self <- 2<axis|self> axis - self.
    /// With a unit-norm axis this is the Grover diffusion step expressed as
    /// inversion about the prepared state.
    pub fn reflect_about(&mut self, axis: &StateVector) -> Result<(), SimError> {
        let overlap = axis.inner_product(self)?;
        let two_overlap = 2.0 * overlap;
        for (amp, ax) in self.amps.iter_mut().zip(&axis.amps) {
            *amp = two_overlap * ax - *amp;
        }
        Ok(())
    }

    /// True when the states differ by at most a global phase, compared
    /// after aligning on this state's largest-magnitude amplitude.
    pub fn approx_eq_up_to_phase(&self, other: &StateVector, tol: f64) -> bool {
        if self.num_qubits != other.num_qubits {
            return false;
        }
        let pivot = self
            .amps
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.norm_sqr().total_cmp(&b.norm_sqr()))
            .map(|(i, _)| i)
            .unwrap();
        let u = other.amps[pivot] / self.amps[pivot];
        let mag = u.norm();
        if mag == 0.0 || !mag.is_finite() {
            return false;
        }
        let phase = u / mag;
        self.amps
            .iter()
            .zip(&other.amps)
            .all(|(a, b)| (b - phase * a).norm() <= tol)
    }

    /// Applies one gate in place. Unitarity keeps the norm within 1e-10.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<(), SimError> {
        gate.validate(self.num_qubits)?;
        match gate {
            Gate::H { target } => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                self.apply_single(*target, |a0, a1| (s * (a0 + a1), s * (a0 - a1)));
            }
            Gate::X { target } => self.apply_single(*target, |a0, a1| (a1, a0)),
            Gate::Y { target } => {
                let i = Complex64::new(0.0, 1.0);
                self.apply_single(*target, move |a0, a1| (-i * a1, i * a0));
            }
            Gate::Z { target } => self.scale_masked(1 << target, Complex64::new(-1.0, 0.0)),
            Gate::S { target } => self.scale_masked(1 << target, Complex64::new(0.0, 1.0)),
            Gate::Phase { target, angle } => {
                self.scale_masked(1 << target, Complex64::from_polar(1.0, *angle))
            }
            Gate::Cnot { control, target } => self.apply_cnot(*control, *target),
            Gate::ControlledPhase {
                controls,
                target,
                angle,
            } => {
                let mut mask = 1usize << target;
                for c in controls {
                    mask |= 1 << c;
                }
                self.scale_masked(mask, Complex64::from_polar(1.0, *angle));
            }
            Gate::Iqft { start, len } => self.fourier(*start, *len, FourierDirection::Inverse),
            Gate::Qft { start, len } => self.fourier(*start, *len, FourierDirection::Forward),
        }
        Ok(())
    }

    /// Applies the circuit's gates in list order.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<(), SimError> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(SimError::QubitCountMismatch {
                circuit: circuit.num_qubits(),
                state: self.num_qubits,
            });
        }
        for gate in circuit.gates() {
            self.apply_gate(gate)?;
        }
        Ok(())
    }

    /// Inverse quantum Fourier transform on the contiguous qubit range
    /// [start, start+len), applied as a dense unitary on that subspace.
    pub fn apply_iqft(&mut self, start: usize, len: usize) -> Result<(), SimError> {
        self.apply_gate(&Gate::Iqft { start, len })
    }

    /// Quantum Fourier transform on [start, start+len); inverse of `apply_iqft`.
    pub fn apply_qft(&mut self, start: usize, len: usize) -> Result<(), SimError> {
        self.apply_gate(&Gate::Qft { start, len })
    }

    /// Samples one basis state from the |amplitude|^2 distribution.
    pub fn sample_index(&self, rng: &mut impl Rng) -> usize {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            acc += a.norm_sqr();
            if u < acc {
                return i;
            }
        }
        self.amps.len() - 1
    }

    /// Measures every qubit once with a generator seeded by `rng_seed`.
    /// Identical seeds yield identical outcomes.
    pub fn measure_all(&self, rng_seed: u64) -> Result<MeasurementOutcome, SimError> {
        self.check_normalized()?;
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        Ok(self.measure_with(&mut rng))
    }

    /// Measures every qubit once, drawing from the caller's generator.
    pub fn measure_with(&self, rng: &mut impl Rng) -> MeasurementOutcome {
        let index = self.sample_index(rng);
        MeasurementOutcome {
            bitstring: index_to_bits(index, self.num_qubits),
            probability: self.amps[index].norm_sqr(),
        }
    }

    /// Draws `shots` seeded measurements and tallies outcome counts by
    /// basis-state index.
    pub fn sample_counts(&self, shots: usize, rng_seed: u64) -> Result<HashMap<usize, u64>, SimError> {
        self.check_normalized()?;
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let cumulative: Vec<f64> = self
            .amps
            .iter()
            .scan(0.0, |acc, a| {
                *acc += a.norm_sqr();
                Some(*acc)
            })
            .collect();
        let mut counts = HashMap::new();
        for _ in 0..shots {
            let u: f64 = rng.gen();
            let idx = cumulative.partition_point(|&c| c <= u).min(self.amps.len() - 1);
            *counts.entry(idx).or_insert(0) += 1;
        }
        Ok(counts)
    }

    fn check_normalized(&self) -> Result<(), SimError> {
        let norm = self.norm_sqr().sqrt();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(SimError::NotNormalized { norm });
        }
        Ok(())
    }

    /// Applies a 2x2 map to every (target=0, target=1) amplitude pair.
    fn apply_single<F>(&mut self, target: usize, f: F)
    where
        F: Fn(Complex64, Complex64) -> (Complex64, Complex64),
    {
        let bit = 1usize << target;
        let low_mask = bit - 1;
        for k in 0..self.amps.len() / 2 {
            let i0 = ((k & !low_mask) << 1) | (k & low_mask);
            let i1 = i0 | bit;
            let (a0, a1) = (self.amps[i0], self.amps[i1]);
            let (b0, b1) = f(a0, a1);
            self.amps[i0] = b0;
            self.amps[i1] = b1;
        }
    }

    /// Multiplies every amplitude whose index contains all bits of `mask`
    /// by `factor`. Enumerates only the affected indices.
    fn scale_masked(&mut self, mask: usize, factor: Complex64) {
        let free = !mask & (self.amps.len() - 1);
        let mut sub = 0usize;
        loop {
            self.amps[sub | mask] *= factor;
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
    }

    fn apply_cnot(&mut self, control: usize, target: usize) {
        let cbit = 1usize << control;
        let tbit = 1usize << target;
        let free = !(cbit | tbit) & (self.amps.len() - 1);
        let mut sub = 0usize;
        loop {
            let i0 = sub | cbit;
            self.amps.swap(i0, i0 | tbit);
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
    }

    fn fourier(&mut self, start: usize, len: usize, direction: FourierDirection) {
        let reg_dim = 1usize << len;
        let mut planner = FftPlanner::<f64>::new();
        // IQFT is the conjugate of the QFT's phase convention, which matches
        // the forward DFT up to the 1/sqrt(M) normalization.
        let fft = match direction {
            FourierDirection::Inverse => planner.plan_fft_forward(reg_dim),
            FourierDirection::Forward => planner.plan_fft_inverse(reg_dim),
        };
        let scale = 1.0 / (reg_dim as f64).sqrt();
        let low_dim = 1usize << start;
        let high_dim = self.amps.len() >> (start + len);
        let mut buf = vec![Complex64::new(0.0, 0.0); reg_dim];
        for hi in 0..high_dim {
            for lo in 0..low_dim {
                let base = (hi << (start + len)) | lo;
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = self.amps[base | (k << start)];
                }
                fft.process(&mut buf);
                for (k, value) in buf.iter().enumerate() {
                    self.amps[base | (k << start)] = value * scale;
                }
            }
        }
    }
}

#[derive(Clone, Copy)]
enum FourierDirection {
    Forward,
    Inverse,
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k.min(n));
    let mut result: u64 = 1;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}
