//! Exact argument parsing and deterministic output formatting.

use num_bigint::BigInt;
use num_traits::{pow::Pow, Zero};
use racosc::Rational;

/// Parses a rational from `7/3`, `2`, `0.5`, `1e-6` or `1.5e2` with no
/// float round-trip, so the exact backend sees precisely the requested
/// value.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = || format!("`{text}` is not an exact rational");
    let s = text.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let negative = int_part.starts_with('-');
    let digits: String = int_part
        .trim_start_matches(['+', '-'])
        .chars()
        .chain(frac_part.chars())
        .collect();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let mut value = Rational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    if negative {
        value = -value;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    if shift >= 0 {
        value *= Rational::from_integer(ten.pow(shift as u32));
    } else {
        value /= Rational::from_integer(ten.pow((-shift) as u32));
    }
    Ok(value)
}

/// Twelve significant digits, plain decimal in the human range and
/// scientific outside it; fixed rules so identical inputs give identical
/// bytes.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs();
    if (1e-4..1e12).contains(&magnitude) {
        let decimals = 11 - magnitude.log10().floor() as i32;
        format!("{:.*}", decimals.max(0) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}
