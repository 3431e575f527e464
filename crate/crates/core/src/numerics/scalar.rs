use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::fmt;

use super::HalfInteger;

/// Arbitrary-precision rational, the exact scalar backend.
pub type Rational = BigRational;

/// Scalar backend contract shared by binary floats and exact rationals.
///
/// Everything except square roots is expressed against this trait, so the
/// same series, weight and matrix-entry code runs on `f64` and on
/// [`Rational`]. The rational backend is exact: it is used to certify
/// squared quantities (matrix entries, characteristic polynomials) that the
/// float backend can only check to a tolerance.
pub trait Scalar:
    Signed + Clone + PartialOrd + fmt::Debug + fmt::Display + 'static
{
    fn from_int(n: i64) -> Self;

    /// Exact ratio of small integers. `den` must be nonzero; for the float
    /// backend the single IEEE division keeps halves exact.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Conversion from an arbitrary rational; exact on the rational
    /// backend, correctly rounded on floats.
    fn from_rational(q: &Rational) -> Self;

    /// `Some(n)` when the value is exactly the integer `n`.
    fn as_integer(&self) -> Option<i64>;

    fn to_f64_lossy(&self) -> f64;

    fn from_half(h: HalfInteger) -> Self {
        Self::from_ratio(h.twice(), 2)
    }
}

macro_rules! impl_scalar_for_float {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_int(n: i64) -> Self {
                n as $t
            }

            fn from_ratio(num: i64, den: i64) -> Self {
                debug_assert!(den != 0);
                num as $t / den as $t
            }

            fn from_rational(q: &Rational) -> Self {
                q.to_f64().unwrap_or(<$t>::NAN as f64) as $t
            }

            fn as_integer(&self) -> Option<i64> {
                if self.fract() == 0.0 && self.abs() < 2e15 {
                    Some(*self as i64)
                } else {
                    None
                }
            }

            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }
        }
    };
}

impl_scalar_for_float!(f32);
impl_scalar_for_float!(f64);

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Scalar backends with square roots: the binary floats.
///
/// The rational backend deliberately has no square root; orthonormal
/// functions, eigenvector matrices and wavefunctions exist on this trait
/// only, while the rational side works on squared quantities.
pub trait FloatScalar: Scalar + num_traits::Float {
    fn sqrt_checked(self, context: &'static str) -> crate::error::Result<Self> {
        if self < Self::zero() {
            Err(crate::error::Error::OutsideWindow(format!(
                "negative value under square root in {context}"
            )))
        } else {
            Ok(self.sqrt())
        }
    }
}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn half_integer_conversion_is_exact_on_both_backends() {
        let h = HalfInteger::from_twice(-33);
        assert_eq!(f64::from_half(h), -16.5);
        assert_eq!(
            Rational::from_half(h),
            Rational::new(BigInt::from(-33), BigInt::from(2))
        );
    }

    #[test]
    fn integer_detection() {
        assert_eq!(3.0f64.as_integer(), Some(3));
        assert_eq!((-0.0f64).as_integer(), Some(0));
        assert_eq!(2.5f64.as_integer(), None);
        assert_eq!(Rational::from_ratio(6, 3).as_integer(), Some(2));
        assert_eq!(Rational::from_ratio(7, 3).as_integer(), None);
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        // 1/3 + 1/6 = 1/2 with no rounding
        let sum = Rational::from_ratio(1, 3) + Rational::from_ratio(1, 6);
        assert_eq!(sum, Rational::from_ratio(1, 2));
        let one: Rational = sum.clone() + sum;
        assert!(one.is_one());
    }
}
