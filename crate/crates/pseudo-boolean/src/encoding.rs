use crate::error::PolyError;
use crate::poly::BinaryPolynomial;

/// Default cost-register width for polynomials with non-integer coefficients.
pub const DEFAULT_REAL_WIDTH: usize = 8;

/// How a polynomial's costs map onto the cost register: costs are multiplied
/// by `scale` and stored as `m`-bit two's-complement integers, sign in the
/// most-significant qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostEncoding {
    pub m: usize,
    pub scale: f64,
}

impl CostEncoding {
    pub fn new(m: usize, scale: f64) -> Result<Self, PolyError> {
        if m < 2 {
            return Err(PolyError::WidthTooSmall { m });
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(PolyError::BadScale { scale });
        }
        Ok(CostEncoding { m, scale })
    }

    /// Representable scaled-cost range [-2^(m-1), 2^(m-1) - 1].
    pub fn range(&self) -> (f64, f64) {
        let half = (1u64 << (self.m - 1)) as f64;
        (-half, half - 1.0)
    }

    /// True when `cost` (unscaled) lands inside the representable range.
    pub fn fits(&self, cost: f64) -> bool {
        let (lo, hi) = self.range();
        let scaled = cost * self.scale;
        scaled >= lo && scaled <= hi
    }
}

/// Smallest encoding whose two's-complement range covers the polynomial's
/// sound cost bounds. Integer-coefficient polynomials use scale 1; otherwise
/// a power-of-two scale is chosen so the scaled bounds use at least a quarter
/// of the `DEFAULT_REAL_WIDTH`-bit range.
pub fn choose_register_width(poly: &BinaryPolynomial) -> CostEncoding {
    let (lower, upper) = poly.cost_bounds();
    if poly.has_integer_coefficients(1e-9) {
        CostEncoding {
            m: width_for_integer_range(lower, upper),
            scale: 1.0,
        }
    } else {
        let m = DEFAULT_REAL_WIDTH;
        CostEncoding {
            m,
            scale: scale_for_range(lower, upper, m),
        }
    }
}

/// Smallest m >= 2 with -2^(m-1) <= lower and upper <= 2^(m-1) - 1.
pub fn width_for_integer_range(lower: f64, upper: f64) -> usize {
    let mut m = 2;
    loop {
        let half = (1u64 << (m - 1)) as f64;
        if lower >= -half && upper <= half - 1.0 {
            return m;
        }
        m += 1;
    }
}

/// Largest power-of-two scale keeping [lower, upper] inside the m-bit
/// two's-complement range; at least a quarter of the range is used.
pub fn scale_for_range(lower: f64, upper: f64, m: usize) -> f64 {
    let half = (1u64 << (m - 1)) as f64;
    let magnitude = lower.abs().max(upper.abs());
    if magnitude == 0.0 {
        return 1.0;
    }
    let limit = (half - 1.0) / magnitude;
    2f64.powi(limit.log2().floor() as i32)
}

/// `value` reduced into [0, 2^m) as an m-bit two's-complement pattern.
pub fn twos_complement_encode(value: i64, m: usize) -> usize {
    (value.rem_euclid(1 << m)) as usize
}

/// Signed integer from an m-bit two's-complement register pattern.
pub fn twos_complement_decode(pattern: usize, m: usize) -> i64 {
    let half = 1usize << (m - 1);
    if pattern & half != 0 {
        pattern as i64 - (1i64 << m)
    } else {
        pattern as i64
    }
}
