//! Computational substrate: exact half-integers, the dual scalar backends
//! (binary64 float and exact rational), Pochhammer symbols and terminating
//! generalized hypergeometric series.

mod half_integer;
mod scalar;
mod series;

pub use half_integer::HalfInteger;
pub use scalar::{FloatScalar, Rational, Scalar};
pub use series::{hyp_terminating, pochhammer, pochhammer_ratio_with_limit, HypSeries};
