use crate::error::PolyError;

/// Reflected binary Gray code of `value` as a most-significant-first bit
/// array of the given width. Adjacent values differ in exactly one bit.
pub fn gray_encode(value: usize, bits: usize) -> Result<Vec<u8>, PolyError> {
    if bits < usize::BITS as usize && value >= 1 << bits {
        return Err(PolyError::GrayRange { value, bits });
    }
    let g = value ^ (value >> 1);
    Ok((0..bits).rev().map(|i| (g >> i & 1) as u8).collect())
}

/// Inverse of `gray_encode`: recovers the value from its Gray-coded bits.
pub fn gray_decode(bits: &[u8]) -> usize {
    let g = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
    let mut value = g;
    let mut shift = 1;
    while shift < usize::BITS as usize {
        value ^= value >> shift;
        shift <<= 1;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_bit_code_is_the_standard_reflected_sequence() {
        let codes: Vec<Vec<u8>> = (0..4).map(|v| gray_encode(v, 2).unwrap()).collect();
        assert_eq!(
            codes,
            vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 0]]
        );
    }

    #[test]
    fn adjacent_values_differ_in_one_bit() {
        let bits = 10;
        for v in 0..(1usize << bits) - 1 {
            let a = gray_encode(v, bits).unwrap();
            let b = gray_encode(v + 1, bits).unwrap();
            let distance: usize = a.iter().zip(&b).filter(|(x, y)| x != y).count();
            assert_eq!(distance, 1, "values {v} and {} differ in {distance} bits", v + 1);
        }
    }

    #[test]
    fn decode_inverts_encode() {
        for v in 0..1usize << 10 {
            assert_eq!(gray_decode(&gray_encode(v, 10).unwrap()), v);
        }
    }

    #[test]
    fn out_of_range_value_is_rejected() {
        assert!(matches!(
            gray_encode(4, 2),
            Err(PolyError::GrayRange { value: 4, bits: 2 })
        ));
    }
}
