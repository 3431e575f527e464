//! Independent spectral oracle for two-diagonal matrices: characteristic
//! polynomials by the principal-minor recurrence, eigenvalues by Sturm
//! bisection, eigenvectors by inverse iteration.
//!
//! Nothing here touches the Racah machinery, so agreement between this
//! solver and the analytic constructions is a genuine cross-check.

use crate::doubles::{EigenvectorMatrixU, Provenance, SpectrumD, TwoDiagonalMatrix};
use crate::error::{Error, Result};
use crate::numerics::{FloatScalar, Scalar};

/// Leading-principal-minor sequence of `lambda I - T` at a probe value:
/// `p_0 = 1`, `p_1 = lambda`, `p_k = lambda p_{k-1} - M_{k-2}^2 p_{k-2}`.
///
/// Exact on the rational backend, since only the squared entries appear.
pub fn charpoly_sequence<S: Scalar>(t: &TwoDiagonalMatrix<S>, lambda: &S) -> Vec<S> {
    let dim = t.dim();
    let mut seq = Vec::with_capacity(dim + 1);
    seq.push(S::one());
    seq.push(lambda.clone());
    for k in 2..=dim {
        let value = lambda.clone() * seq[k - 1].clone()
            - t.offdiag_squares()[k - 2].clone() * seq[k - 2].clone();
        seq.push(value);
    }
    seq
}

/// `det(lambda I - T)`.
pub fn charpoly_eval<S: Scalar>(t: &TwoDiagonalMatrix<S>, lambda: &S) -> S {
    charpoly_sequence(t, lambda).pop().expect("sequence is never empty")
}

/// Number of eigenvalues strictly below `lambda`, by counting negative
/// LDLT pivots. A tiny pivot is nudged away from zero; this only happens
/// when `lambda` is (numerically) an eigenvalue of a leading block.
fn count_below<S: FloatScalar>(offdiag_sq: &[S], lambda: S) -> usize {
    let guard = S::min_positive_value().sqrt();
    let mut count = 0;
    let mut pivot = -lambda;
    if pivot < S::zero() {
        count += 1;
    }
    for sq in offdiag_sq {
        let safe = if pivot.abs() < guard {
            if pivot < S::zero() {
                -guard
            } else {
                guard
            }
        } else {
            pivot
        };
        pivot = -lambda - *sq / safe;
        if pivot < S::zero() {
            count += 1;
        }
    }
    count
}

/// All eigenvalues, ascending, each bracketed by bisection on the Sturm
/// count until the interval is narrower than `tol`.
pub fn eigenvalues_bisection<S: FloatScalar>(t: &TwoDiagonalMatrix<S>, tol: S) -> Vec<S> {
    let dim = t.dim();
    if dim == 1 {
        return vec![S::zero()];
    }
    let offdiag_sq = t.offdiag_squares().to_vec();
    // Gershgorin bound for the zero-diagonal matrix
    let two = S::one() + S::one();
    let bound = t
        .offdiag()
        .into_iter()
        .fold(S::zero(), |a, b| a.max(b))
        * two
        + S::one();
    let mut out = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut lo = -bound;
        let mut hi = bound;
        for _ in 0..4096 {
            if hi - lo < tol {
                break;
            }
            let mid = (lo + hi) / two;
            if mid <= lo || mid >= hi {
                break;
            }
            if count_below(&offdiag_sq, mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push((lo + hi) / two);
    }
    out
}

/// Solves `(T - lambda I) x = b` for a two-diagonal `T` by banded Gaussian
/// elimination with partial pivoting. Near-singular pivots are nudged, so
/// solving at an eigenvalue amplifies the eigen-direction, which is what
/// inverse iteration wants.
fn shifted_solve<S: FloatScalar>(offdiag: &[S], lambda: S, b: &[S]) -> Vec<S> {
    let n = b.len();
    let eps = S::epsilon() * (S::one() + lambda.abs());
    let nudge = |p: S| {
        if p.abs() < eps {
            if p < S::zero() {
                -eps
            } else {
                eps
            }
        } else {
            p
        }
    };
    // row i holds (d, u1, u2) at columns (i, i+1, i+2); u2 is pivot fill-in
    let mut d = vec![-lambda; n];
    let mut u1 = vec![S::zero(); n];
    let mut u2 = vec![S::zero(); n];
    u1[..n - 1].copy_from_slice(offdiag);
    let mut rhs = b.to_vec();
    let mut sub = offdiag.to_vec(); // entries (i+1, i)
    for i in 0..n - 1 {
        if sub[i].abs() > d[i].abs() {
            let (old_d, old_u1, old_u2) = (d[i], u1[i], u2[i]);
            d[i] = sub[i];
            u1[i] = d[i + 1];
            u2[i] = u1[i + 1];
            sub[i] = old_d;
            d[i + 1] = old_u1;
            u1[i + 1] = old_u2;
            rhs.swap(i, i + 1);
        }
        d[i] = nudge(d[i]);
        let factor = sub[i] / d[i];
        d[i + 1] = d[i + 1] - factor * u1[i];
        u1[i + 1] = u1[i + 1] - factor * u2[i];
        rhs[i + 1] = rhs[i + 1] - factor * rhs[i];
    }
    d[n - 1] = nudge(d[n - 1]);
    let mut x = vec![S::zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        if i + 1 < n {
            acc = acc - u1[i] * x[i + 1];
        }
        if i + 2 < n {
            acc = acc - u2[i] * x[i + 2];
        }
        x[i] = acc / d[i];
    }
    x
}

fn normalize_with_sign<S: FloatScalar>(v: &mut [S]) {
    let norm = v.iter().fold(S::zero(), |a, x| a + *x * *x).sqrt();
    for x in v.iter_mut() {
        *x = *x / norm;
    }
    let first_nonzero = v.iter().find(|x| x.abs() > S::epsilon());
    if let Some(&lead) = first_nonzero {
        if lead < S::zero() {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}

/// Unit eigenvector for an isolated eigenvalue near `lambda`, sign fixed
/// by making the first nonzero component positive.
pub fn eigenvector_inverse_iteration<S: FloatScalar>(
    t: &TwoDiagonalMatrix<S>,
    lambda: S,
) -> Result<Vec<S>> {
    let dim = t.dim();
    if dim == 1 {
        return Ok(vec![S::one()]);
    }
    let offdiag = t.offdiag();
    let norm_t = t.norm_inf();
    let tol = S::from_rational(&crate::numerics::Rational::from_ratio(1, 10_000_000_000))
        * norm_t;
    // deterministic start with no accidental symmetry
    let mut v: Vec<S> = (0..dim)
        .map(|i| S::one() + S::from_int(i as i64 % 7) / S::from_int(10))
        .collect();
    normalize_with_sign(&mut v);
    for _ in 0..60 {
        let mut next = shifted_solve(&offdiag, lambda, &v);
        normalize_with_sign(&mut next);
        v = next;
        let tv = t.apply(&v)?;
        let residual = tv
            .iter()
            .zip(&v)
            .fold(S::zero(), |acc, (tvi, vi)| acc.max((*tvi - lambda * *vi).abs()));
        if residual <= tol {
            return Ok(v);
        }
    }
    Err(Error::NoConvergence("inverse iteration"))
}

/// Full decomposition by the oracle path: bisection eigenvalues plus
/// inverse-iteration eigenvectors, packaged with the per-pair residual
/// guarantee already verified.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<S> {
    pub eigenvalues: SpectrumD<S>,
    pub eigenvectors: EigenvectorMatrixU<S>,
}

pub fn eigen_decomposition<S: FloatScalar>(
    t: &TwoDiagonalMatrix<S>,
    tol: S,
) -> Result<EigenDecomposition<S>> {
    let dim = t.dim();
    let eigenvalues = eigenvalues_bisection(t, tol);
    let mut columns = Vec::with_capacity(dim);
    for lambda in &eigenvalues {
        columns.push(eigenvector_inverse_iteration(t, *lambda)?);
    }
    let rows: Vec<Vec<S>> = (0..dim)
        .map(|r| (0..dim).map(|c| columns[c][r]).collect())
        .collect();
    let eigenvectors = EigenvectorMatrixU::from_rows(rows, Provenance::Solver)?;
    Ok(EigenDecomposition { eigenvalues: SpectrumD::new(eigenvalues), eigenvectors })
}

/// `max |U^T U - I|` for any square array of columns.
pub fn orthogonality_residual<S: FloatScalar>(u: &EigenvectorMatrixU<S>) -> S {
    u.orthogonality_residual()
}
