use crate::error::{Error, Result};

use super::Scalar;

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer<S: Scalar>(a: &S, k: usize) -> S {
    let mut acc = S::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc = acc * factor.clone();
        factor = factor + S::one();
    }
    acc
}

/// Ratio `(a)_k / (b)_k`, with the removable `0/0` resolved analytically.
///
/// The only limit this crate needs is `(2e)_k / (e)_k` as `e -> 0`, which
/// appears as the weight-function pair with `a = gamma+delta+1 = 0` and
/// `b = a/2 = 0`; its value is 1 for `k = 0` and 2 for `k >= 1`. Any other
/// vanishing denominator factor has no finite limit and is rejected.
pub fn pochhammer_ratio_with_limit<S: Scalar>(a: &S, b: &S, k: usize) -> Result<S> {
    let mut acc = S::one();
    for i in 0..k {
        let shift = S::from_int(i as i64);
        let num = a.clone() + shift.clone();
        let den = b.clone() + shift;
        if den.is_zero() {
            let doubled = b.clone() + b.clone();
            if num.is_zero() && *a == doubled {
                // lim (2e+i)/(e+i) at e -> 0; the matched zero only occurs
                // at i = 0, where the ratio tends to 2
                acc = acc * S::from_int(2);
            } else {
                return Err(Error::UnmatchedZeroFactor { offset: i });
            }
        } else {
            acc = acc * num / den;
        }
    }
    Ok(acc)
}

/// A terminating generalized hypergeometric series
/// `pFq(a_1..a_p; b_1..b_q; z)` truncated at a stated degree.
///
/// Construction checks the two structural requirements: some numerator
/// parameter must equal minus the truncation degree, and no denominator
/// parameter may be a nonpositive integer whose Pochhammer vanishes inside
/// the summed range. Parameters are sorted on construction so evaluation is
/// exactly symmetric under permutation of the inputs.
#[derive(Debug, Clone)]
pub struct HypSeries<S> {
    numerator: Vec<S>,
    denominator: Vec<S>,
    argument: S,
    degree: usize,
}

impl<S: Scalar> HypSeries<S> {
    pub fn new(
        mut numerator: Vec<S>,
        mut denominator: Vec<S>,
        argument: S,
        degree: usize,
    ) -> Result<Self> {
        let terminator = S::from_int(-(degree as i64));
        if !numerator.contains(&terminator) {
            return Err(Error::NonTerminatingSeries);
        }
        for b in &denominator {
            if let Some(n) = b.as_integer() {
                if n <= 0 && degree as i64 >= 1 - n {
                    return Err(Error::ZeroDenominatorFactor { offset: (-n) as usize });
                }
            }
        }
        let order = |a: &S, b: &S| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal);
        numerator.sort_by(order);
        denominator.sort_by(order);
        Ok(Self { numerator, denominator, argument, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Forward term recurrence: `t_{k+1} = t_k z prod(a_i+k) / (prod(b_j+k) (k+1))`.
    ///
    /// Keeps intermediate magnitudes near the partial sums instead of
    /// forming the huge Pochhammer products term by term.
    fn sum(&self) -> S {
        let mut total = S::one();
        let mut term = S::one();
        for k in 0..self.degree {
            let shift = S::from_int(k as i64);
            term = term * self.argument.clone();
            for a in &self.numerator {
                term = term * (a.clone() + shift.clone());
            }
            for b in &self.denominator {
                term = term / (b.clone() + shift.clone());
            }
            term = term / S::from_int(k as i64 + 1);
            if term.is_zero() {
                // another numerator parameter terminated the series early
                break;
            }
            total = total + term.clone();
        }
        total
    }
}

/// Evaluate a terminating hypergeometric series.
pub fn hyp_terminating<S: Scalar>(series: &HypSeries<S>) -> S {
    series.sum()
}
