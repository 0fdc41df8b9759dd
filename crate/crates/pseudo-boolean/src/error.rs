use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("assignment length {len} does not match {num_vars} variables")]
    AssignmentLength { len: usize, num_vars: usize },

    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("exhaustive evaluation over {num_vars} variables exceeds the limit of {limit}")]
    ExhaustiveTooLarge { num_vars: usize, limit: usize },

    #[error("cost range [{lower}, {upper}] does not fit {m} two's-complement bits at scale {scale}")]
    RegisterOverflow {
        lower: f64,
        upper: f64,
        m: usize,
        scale: f64,
    },

    #[error("cost register width must be at least 2, got {m}")]
    WidthTooSmall { m: usize },

    #[error("scale must be positive and finite, got {scale}")]
    BadScale { scale: f64 },

    #[error("value {value} does not fit in {bits} bits")]
    GrayRange { value: usize, bits: usize },

    #[error("power mean requires at least one value")]
    EmptyValues,

    #[error("power mean requires positive values, got {value}")]
    NonPositiveValue { value: f64 },

    #[error("power mean exponent must be negative, got {p}")]
    BadExponent { p: f64 },
}

/// Parse failure for the polynomial text format, with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}
