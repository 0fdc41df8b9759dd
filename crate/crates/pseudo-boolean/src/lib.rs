//! QUBO/HUBO cost functions as multilinear real-coefficient polynomials over
//! binary variables, with classical evaluation and bounding, two's-complement
//! cost-register sizing, and compilation into the phase-encoding circuit that
//! prepares cost values on a qubit register.

mod compile;
mod encoding;
mod error;
mod gray;
mod parse;
mod poly;
mod power_mean;

pub use compile::{append_phase_block, compile_state_prep, merge_phase_rotations};
pub use encoding::{
    choose_register_width, scale_for_range, twos_complement_decode, twos_complement_encode,
    width_for_integer_range, CostEncoding, DEFAULT_REAL_WIDTH,
};
pub use error::{ParseError, PolyError};
pub use gray::{gray_decode, gray_encode};
pub use parse::parse_polynomial;
pub use poly::{
    assignment_to_index, index_to_assignment, BinaryPolynomial, Term, EXHAUSTIVE_LIMIT,
};
pub use power_mean::power_mean_min;
