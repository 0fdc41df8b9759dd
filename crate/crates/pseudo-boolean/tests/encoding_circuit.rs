use pseudo_boolean::{
    choose_register_width, compile_state_prep, merge_phase_rotations, twos_complement_decode,
    twos_complement_encode, BinaryPolynomial, CostEncoding, PolyError,
};
use quantum_sim::{Circuit, Gate, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Runs the compiled state preparation and checks that, conditioned on each
/// variable assignment x, the cost register is a point mass on the
/// two's-complement pattern of round(scale * f(x)).
fn assert_exact_readout(poly: &BinaryPolynomial, enc: &CostEncoding, tol: f64) {
    let circuit = compile_state_prep(poly, enc).unwrap();
    let n = poly.num_vars();
    let mut state = StateVector::zero(n + enc.m).unwrap();
    state.apply_circuit(&circuit).unwrap();
    let var_dim = 1usize << n;
    let branch_prob = 1.0 / var_dim as f64;
    for x in 0..var_dim {
        let scaled = poly.evaluate_index(x) * enc.scale;
        let pattern = twos_complement_encode(scaled.round() as i64, enc.m);
        for c in 0..1usize << enc.m {
            let p = state.probability_of_index(x | (c << n));
            if c == pattern {
                assert!(
                    (p - branch_prob).abs() < tol,
                    "branch {x}: register {c:0m$b} has probability {p}, expected {branch_prob}",
                    m = enc.m
                );
            } else {
                assert!(
                    p < tol,
                    "branch {x}: stray probability {p} on register {c:0m$b}",
                    m = enc.m
                );
            }
        }
    }
}

fn example_poly() -> BinaryPolynomial {
    let mut p = BinaryPolynomial::new(2);
    p.add_term(-2.0, &[0]).unwrap();
    p.add_term(-1.0, &[1]).unwrap();
    p.add_term(3.0, &[0, 1]).unwrap();
    p
}

#[test]
fn single_variable_cost_reads_binary_one() {
    let mut p = BinaryPolynomial::new(1);
    p.add_term(1.0, &[0]).unwrap();
    let enc = CostEncoding::new(2, 1.0).unwrap();
    assert_exact_readout(&p, &enc, 1e-9);

    // Spot-check the x0 = 1 branch directly: register reads 01 (value 1).
    let circuit = compile_state_prep(&p, &enc).unwrap();
    let mut state = StateVector::zero(3).unwrap();
    state.apply_circuit(&circuit).unwrap();
    let idx = 1 | (0b01 << 1);
    assert!((state.probability_of_index(idx) - 0.5).abs() < 1e-9);
}

#[test]
fn constant_minus_one_reads_all_ones() {
    let p = BinaryPolynomial::constant_poly(1, -1.0);
    let enc = CostEncoding::new(2, 1.0).unwrap();
    let circuit = compile_state_prep(&p, &enc).unwrap();
    let mut state = StateVector::zero(3).unwrap();
    state.apply_circuit(&circuit).unwrap();
    // Two's complement of -1 on 2 bits is 11, on every variable branch.
    for x in 0..2 {
        let idx = x | (0b11 << 1);
        assert!((state.probability_of_index(idx) - 0.5).abs() < 1e-9);
    }
    assert_exact_readout(&p, &enc, 1e-9);
}

#[test]
fn worked_example_reads_its_cost_table() {
    let p = example_poly();
    let enc = CostEncoding::new(3, 1.0).unwrap();
    assert_exact_readout(&p, &enc, 1e-9);
}

#[test]
fn minimal_width_from_chooser_is_exact() {
    let p = example_poly();
    let enc = choose_register_width(&p);
    assert_exact_readout(&p, &enc, 1e-9);
}

fn random_integer_poly(rng: &mut ChaCha8Rng, num_vars: usize, max_degree: usize) -> BinaryPolynomial {
    let mut p = BinaryPolynomial::new(num_vars);
    p.set_constant(rng.gen_range(-2i32..=2) as f64);
    for _ in 0..rng.gen_range(1..=2 * num_vars) {
        let size = rng.gen_range(1..=max_degree.min(num_vars));
        let mut vars: Vec<usize> = (0..num_vars).collect();
        for i in 0..size {
            let j = rng.gen_range(i..num_vars);
            vars.swap(i, j);
        }
        let coeff = rng.gen_range(-3i32..=3) as f64;
        p.add_term(coeff, &vars[..size]).unwrap();
    }
    p
}

#[test]
fn encoding_soundness_over_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 60 {
        let n = rng.gen_range(1..=4);
        let poly = random_integer_poly(&mut rng, n, 3);
        let enc = choose_register_width(&poly);
        if enc.m > 5 {
            continue;
        }
        assert_exact_readout(&poly, &enc, 1e-9);
        checked += 1;
    }
}

#[test]
fn sign_qubit_reads_one_exactly_on_negative_costs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let poly = random_integer_poly(&mut rng, n, 2);
        let enc = choose_register_width(&poly);
        let circuit = compile_state_prep(&poly, &enc).unwrap();
        let mut state = StateVector::zero(n + enc.m).unwrap();
        state.apply_circuit(&circuit).unwrap();
        let sign_bit = 1usize << (n + enc.m - 1);
        for idx in 0..state.dim() {
            if state.probability_of_index(idx) < 1e-12 {
                continue;
            }
            let x = idx & ((1 << n) - 1);
            let negative = poly.evaluate_index(x) < 0.0;
            assert_eq!(
                idx & sign_bit != 0,
                negative,
                "sign bit mismatch at branch {x}"
            );
        }
    }
}

#[test]
fn real_coefficients_leak_at_most_one_unit() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for trial in 0..100 {
        let n = rng.gen_range(1..=3);
        let mut poly = BinaryPolynomial::new(n);
        poly.set_constant(rng.gen_range(-2.0..2.0));
        for v in 0..n {
            poly.add_term(rng.gen_range(-2.0..2.0), &[v]).unwrap();
        }
        if n >= 2 {
            poly.add_term(rng.gen_range(-2.0..2.0), &[0, 1]).unwrap();
        }
        let enc = choose_register_width(&poly);
        let circuit = compile_state_prep(&poly, &enc).unwrap();
        let mut state = StateVector::zero(n + enc.m).unwrap();
        state.apply_circuit(&circuit).unwrap();
        let reg_dim = 1usize << enc.m;
        for x in 0..1usize << n {
            let expected = (poly.evaluate_index(x) * enc.scale).round() as i64;
            let best = (0..reg_dim)
                .max_by(|&a, &b| {
                    state
                        .probability_of_index(x | (a << n))
                        .total_cmp(&state.probability_of_index(x | (b << n)))
                })
                .unwrap();
            let got = twos_complement_decode(best, enc.m);
            // Leakage is cyclic on the register, so compare modulo 2^m.
            let diff = (got - expected).rem_euclid(reg_dim as i64);
            let cyclic = diff.min(reg_dim as i64 - diff);
            assert!(
                cyclic <= 1,
                "trial {trial}, branch {x}: most likely readout {got} vs expected {expected}"
            );
        }
    }
}

#[test]
fn register_overflow_is_a_compile_error() {
    let mut p = BinaryPolynomial::new(2);
    p.add_term(9.0, &[0]).unwrap();
    let enc = CostEncoding::new(2, 1.0).unwrap();
    assert!(matches!(
        compile_state_prep(&p, &enc),
        Err(PolyError::RegisterOverflow { .. })
    ));
}

#[test]
fn merge_pass_sums_angles_and_drops_cancelled_gates() {
    let mut circuit = Circuit::new(3);
    circuit
        .push(Gate::ControlledPhase {
            controls: vec![0],
            target: 2,
            angle: 0.3,
        })
        .unwrap();
    circuit
        .push(Gate::ControlledPhase {
            controls: vec![0],
            target: 2,
            angle: 0.4,
        })
        .unwrap();
    let merged = merge_phase_rotations(&circuit);
    assert_eq!(merged.gate_count(), 1);
    assert_eq!(
        merged.gates()[0],
        Gate::ControlledPhase {
            controls: vec![0],
            target: 2,
            angle: 0.7,
        }
    );

    circuit
        .push(Gate::ControlledPhase {
            controls: vec![0],
            target: 2,
            angle: -0.7,
        })
        .unwrap();
    assert_eq!(merge_phase_rotations(&circuit).gate_count(), 0);
}

#[test]
fn merge_pass_preserves_the_prepared_state() {
    let mut circuit = Circuit::new(2);
    circuit.push(Gate::H { target: 0 }).unwrap();
    circuit.push(Gate::H { target: 1 }).unwrap();
    circuit
        .push(Gate::Phase {
            target: 1,
            angle: 0.25,
        })
        .unwrap();
    circuit
        .push(Gate::Phase {
            target: 1,
            angle: 0.5,
        })
        .unwrap();
    circuit
        .push(Gate::ControlledPhase {
            controls: vec![0],
            target: 1,
            angle: 1.1,
        })
        .unwrap();
    let merged = merge_phase_rotations(&circuit);
    assert!(merged.gate_count() < circuit.gate_count());
    assert!(merged.depth() <= circuit.depth());

    let mut full = StateVector::zero(2).unwrap();
    full.apply_circuit(&circuit).unwrap();
    let mut compact = StateVector::zero(2).unwrap();
    compact.apply_circuit(&merged).unwrap();
    for i in 0..4 {
        assert!((full.amplitude(i) - compact.amplitude(i)).norm() < 1e-12);
    }
}
