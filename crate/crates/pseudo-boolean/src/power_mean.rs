use crate::error::PolyError;

/// Power mean ((1/k) * sum(v_i^p))^(1/p) for a negative exponent p. As
/// p -> -infinity this approaches min(values) from above, giving a smooth
/// polynomial-friendly stand-in for a max-min objective.
pub fn power_mean_min(values: &[f64], p: f64) -> Result<f64, PolyError> {
    if values.is_empty() {
        return Err(PolyError::EmptyValues);
    }
    if !(p.is_finite() && p < 0.0) {
        return Err(PolyError::BadExponent { p });
    }
    let mut sum = 0.0;
    for &v in values {
        if !(v.is_finite() && v > 0.0) {
            return Err(PolyError::NonPositiveValue { value: v });
        }
        sum += v.powf(p);
    }
    Ok((sum / values.len() as f64).powf(1.0 / p))
}
