use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// An exact half-integer, stored as twice its value.
///
/// Representation labels `j`, grid points `q` and parameter shifts such as
/// `-1/2` are all half-integers; keeping them in doubled-integer form means
/// they convert to either scalar backend without rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// Value `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    /// Whole integer `n`.
    pub const fn from_int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub const ZERO: Self = Self { twice: 0 };
    pub const ONE_HALF: Self = Self { twice: 1 };

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, when there is one.
    pub const fn as_integer(self) -> Option<i64> {
        if self.twice % 2 == 0 {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub const fn abs(self) -> Self {
        Self { twice: self.twice.abs() }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl Add for HalfInteger {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInteger {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self { twice: -self.twice }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            // -33/2 prints as -16.5
            let sign = if self.twice < 0 { "-" } else { "" };
            let mag = self.twice.unsigned_abs();
            write!(f, "{}{}.5", sign, mag / 2)
        }
    }
}

/// Accepts `7/2`, `3.5`, `-16.5`, `4` and `4.0`.
impl FromStr for HalfInteger {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("`{s}` is not an integer or half-integer");
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            return match den {
                1 => Ok(Self::from_int(num)),
                2 => Ok(Self::from_twice(num)),
                _ => Err(bad()),
            };
        }
        if let Some((int, frac)) = s.split_once('.') {
            let negative = int.trim_start().starts_with('-');
            let whole: i64 = if int == "-" { 0 } else { int.trim().parse().map_err(|_| bad())? };
            let twice = match frac {
                "0" | "" => 2 * whole,
                "5" => 2 * whole + if negative { -1 } else { 1 },
                _ => return Err(bad()),
            };
            return Ok(Self::from_twice(twice));
        }
        let whole: i64 = s.trim().parse().map_err(|_| bad())?;
        Ok(Self::from_int(whole))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_closed_and_exact() {
        let a = HalfInteger::from_twice(3); // 3/2
        let b = HalfInteger::from_twice(-1); // -1/2
        assert_eq!(a + b, HalfInteger::from_int(1));
        assert_eq!(a - b, HalfInteger::from_twice(4));
        assert_eq!(-a, HalfInteger::from_twice(-3));
        assert!(!a.is_integer());
        assert!((a + b).is_integer());
        assert_eq!((a + b).as_integer(), Some(1));
        assert_eq!(a.as_integer(), None);
    }

    #[test]
    fn display_matches_decimal_convention() {
        assert_eq!(HalfInteger::from_twice(-33).to_string(), "-16.5");
        assert_eq!(HalfInteger::from_twice(33).to_string(), "16.5");
        assert_eq!(HalfInteger::from_int(-4).to_string(), "-4");
        assert_eq!(HalfInteger::from_twice(1).to_string(), "0.5");
        assert_eq!(HalfInteger::from_twice(-1).to_string(), "-0.5");
        assert_eq!(HalfInteger::ZERO.to_string(), "0");
    }

    #[test]
    fn parses_all_accepted_spellings() {
        for (text, twice) in [
            ("33/2", 33),
            ("-33/2", -33),
            ("16.5", 33),
            ("-16.5", -33),
            ("3", 6),
            ("4.0", 8),
            ("0.5", 1),
            ("-0.5", -1),
            ("4/1", 8),
        ] {
            assert_eq!(text.parse::<HalfInteger>().unwrap().twice(), twice, "{text}");
        }
        assert!("1/3".parse::<HalfInteger>().is_err());
        assert!("1.25".parse::<HalfInteger>().is_err());
        assert!("x".parse::<HalfInteger>().is_err());
    }
}
