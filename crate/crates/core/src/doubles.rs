//! Two-diagonal matrices whose spectra are known exactly, the orthogonal
//! eigenvector matrices built from pairs of Racah families, and the
//! residual checks for `M U = U D`.

use crate::error::{Error, Result};
use crate::numerics::{FloatScalar, Rational, Scalar};
use crate::racah::{racah_orthonormal_table, RacahParams};

/// Symmetric tridiagonal matrix with zero main diagonal.
///
/// Only the squares of the off-diagonal entries are stored; they are exact
/// rationals of the input parameters, so the same value works on both
/// scalar backends. The entries themselves, `M_k = sqrt(M_k^2)`, exist on
/// float backends via [`TwoDiagonalMatrix::offdiag`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoDiagonalMatrix<S> {
    offdiag_sq: Vec<S>,
}

impl<S: Scalar> TwoDiagonalMatrix<S> {
    /// Wraps squared off-diagonal entries, all of which must be positive
    /// so the matrix is an irreducible Jacobi matrix.
    pub fn from_offdiag_squares(offdiag_sq: Vec<S>) -> Result<Self> {
        for (index, value) in offdiag_sq.iter().enumerate() {
            if *value <= S::zero() {
                return Err(Error::NegativeRadicand { index });
            }
        }
        Ok(Self { offdiag_sq })
    }

    pub fn dim(&self) -> usize {
        self.offdiag_sq.len() + 1
    }

    pub fn offdiag_squares(&self) -> &[S] {
        &self.offdiag_sq
    }

    /// Same matrix with every entry halved, as for the position operator.
    pub fn scaled_by_half(&self) -> Self {
        let quarter = S::from_ratio(1, 4);
        Self {
            offdiag_sq: self.offdiag_sq.iter().map(|m| m.clone() * quarter.clone()).collect(),
        }
    }
}

impl<S: FloatScalar> TwoDiagonalMatrix<S> {
    /// Off-diagonal entries `M_0 .. M_{dim-2}`.
    pub fn offdiag(&self) -> Vec<S> {
        self.offdiag_sq.iter().map(|m| m.sqrt()).collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.dim() {
            return Err(Error::ShapeMismatch { expected: self.dim(), got: v.len() });
        }
        let m = self.offdiag();
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            let mut acc = S::zero();
            if i > 0 {
                acc = acc + m[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                acc = acc + m[i] * v[i + 1];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Infinity norm (largest absolute row sum).
    pub fn norm_inf(&self) -> S {
        let m = self.offdiag();
        let n = self.dim();
        let mut best = S::zero();
        for i in 0..n {
            let mut row = S::zero();
            if i > 0 {
                row = row + m[i - 1].abs();
            }
            if i + 1 < n {
                row = row + m[i].abs();
            }
            if row > best {
                best = row;
            }
        }
        best
    }
}

/// Sorted eigenvalue list paired with a [`TwoDiagonalMatrix`].
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumD<S> {
    eigenvalues: Vec<S>,
}

impl<S: Scalar> SpectrumD<S> {
    pub fn new(mut eigenvalues: Vec<S>) -> Self {
        eigenvalues.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        Self { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[S] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// The exact spectrum `-d, -d+2, ..., d-2, d` shared by every
/// [`build_m_racah_special`] matrix regardless of the parameter c.
pub fn spectrum_exact<S: Scalar>(d: usize) -> SpectrumD<S> {
    let eigenvalues = (0..=d)
        .map(|k| S::from_int(2 * k as i64 - d as i64))
        .collect();
    SpectrumD { eigenvalues }
}

/// Eigenvalues `2 sqrt((k+gamma+1)(k+delta+1))`, negated and mirrored, of
/// the even-dimensional double: `(-e_N .. -e_0, e_0 .. e_N)`.
pub fn spectrum_even_dim<S: FloatScalar>(n_cap: usize, gamma: S, delta: S) -> SpectrumD<S> {
    let two = S::from_int(2);
    let eps: Vec<S> = (0..=n_cap as i64)
        .map(|k| {
            let ks = S::from_int(k);
            two * ((ks + gamma + S::one()) * (ks + delta + S::one())).sqrt()
        })
        .collect();
    let mut eigenvalues: Vec<S> = eps.iter().rev().map(|e| -*e).collect();
    eigenvalues.extend(eps);
    SpectrumD { eigenvalues }
}

/// Eigenvalues `2 sqrt(k(k+gamma+delta+1))` of the odd-dimensional double:
/// `(-e_N .. -e_1, 0, e_1 .. e_N)`.
pub fn spectrum_odd_dim<S: FloatScalar>(n_cap: usize, gamma: S, delta: S) -> SpectrumD<S> {
    let two = S::from_int(2);
    let eps: Vec<S> = (1..=n_cap as i64)
        .map(|k| {
            let ks = S::from_int(k);
            two * (ks * (ks + gamma + delta + S::one())).sqrt()
        })
        .collect();
    let mut eigenvalues: Vec<S> = eps.iter().rev().map(|e| -*e).collect();
    eigenvalues.push(S::zero());
    eigenvalues.extend(eps);
    SpectrumD { eigenvalues }
}

fn checked_div<S: Scalar>(num: S, den: S, index: usize) -> Result<S> {
    if den.is_zero() {
        Err(Error::OutsideWindow(format!(
            "vanishing denominator for matrix entry {index}"
        )))
    } else {
        Ok(num / den)
    }
}

fn window_even_dim<S: Scalar>(n_cap: usize, beta: &S, gamma: &S, delta: &S) -> Result<()> {
    let ns = S::from_int(n_cap as i64);
    let neg_one = S::from_int(-1);
    if *gamma <= neg_one || *delta <= neg_one {
        return Err(Error::OutsideWindow(format!(
            "need gamma, delta > -1, got gamma = {gamma}, delta = {delta}"
        )));
    }
    let upper = ns.clone() + gamma.clone();
    let lower = ns.neg() - delta.clone() - S::one();
    if *beta <= upper && *beta >= lower {
        return Err(Error::OutsideWindow(format!(
            "beta = {beta} is inside [{lower}, {upper}]"
        )));
    }
    Ok(())
}

fn window_odd_dim<S: Scalar>(n_cap: usize, beta: &S, gamma: &S, delta: &S) -> Result<()> {
    let ns = S::from_int(n_cap as i64);
    let neg_one = S::from_int(-1);
    if *gamma <= neg_one || *delta <= neg_one {
        return Err(Error::OutsideWindow(format!(
            "need gamma, delta > -1, got gamma = {gamma}, delta = {delta}"
        )));
    }
    let upper = ns.clone() + gamma.clone();
    let lower = ns.neg() - delta.clone();
    if *beta <= upper && *beta >= lower {
        return Err(Error::OutsideWindow(format!(
            "beta = {beta} is inside [{lower}, {upper}]"
        )));
    }
    Ok(())
}

/// Two-diagonal matrix of the even-dimensional double, size `2N + 2`.
///
/// The even-index entry at `k = 0` shares the factor `N - beta` between
/// numerator and denominator; it is cancelled analytically so the entry is
/// well defined on the whole window (the naive quotient is 0/0 where
/// `beta = N`).
pub fn build_m_even_dim<S: Scalar>(
    n_cap: usize,
    beta: &S,
    gamma: &S,
    delta: &S,
) -> Result<TwoDiagonalMatrix<S>> {
    window_even_dim(n_cap, beta, gamma, delta)?;
    let one = S::one();
    let four = S::from_int(4);
    let ns = S::from_int(n_cap as i64);
    let mut squares = Vec::with_capacity(2 * n_cap + 1);
    for index in 0..=(2 * n_cap) {
        let k = S::from_int((index / 2) as i64);
        let sq = if index % 2 == 0 {
            if index == 0 {
                // cancelled form of the k = 0 entry
                let num = four.clone()
                    * (gamma.clone() + one.clone())
                    * (ns.clone() + delta.clone() + one.clone())
                    * (beta.clone() + one.clone());
                checked_div(num, beta.clone() - ns.clone() + one.clone(), index)?
            } else {
                let num = four.clone()
                    * (ns.clone() - beta.clone() - k.clone())
                    * (gamma.clone() + one.clone() + k.clone())
                    * (ns.clone() + delta.clone() + one.clone() - k.clone())
                    * (k.clone() + beta.clone() + one.clone());
                let den = (ns.clone() - beta.clone() - k.clone() - k.clone())
                    * (k.clone() + k.clone() - ns.clone() + one.clone() + beta.clone());
                checked_div(num, den, index)?
            }
        } else {
            let num = four.clone()
                * (gamma.clone() + ns.clone() - beta.clone() - k.clone())
                * (k.clone() + one.clone())
                * (ns.clone() - k.clone())
                * (k.clone() + delta.clone() + beta.clone() + S::from_int(2));
            let den = (ns.clone() - beta.clone() - k.clone() - k.clone() - S::from_int(2))
                * (k.clone() + k.clone() - ns.clone() + one.clone() + beta.clone());
            checked_div(num, den, index)?
        };
        squares.push(sq);
    }
    TwoDiagonalMatrix::from_offdiag_squares(squares)
}

/// Two-diagonal matrix of the odd-dimensional double, size `2N + 1`, with
/// the same `k = 0` cancellation as [`build_m_even_dim`].
pub fn build_m_odd_dim<S: Scalar>(
    n_cap: usize,
    beta: &S,
    gamma: &S,
    delta: &S,
) -> Result<TwoDiagonalMatrix<S>> {
    window_odd_dim(n_cap, beta, gamma, delta)?;
    if n_cap == 0 {
        return TwoDiagonalMatrix::from_offdiag_squares(Vec::new());
    }
    let one = S::one();
    let four = S::from_int(4);
    let ns = S::from_int(n_cap as i64);
    let mut squares = Vec::with_capacity(2 * n_cap);
    for index in 0..(2 * n_cap) {
        let k = S::from_int((index / 2) as i64);
        let sq = if index % 2 == 0 {
            if index == 0 {
                let num = four.clone()
                    * (gamma.clone() + one.clone())
                    * ns.clone()
                    * (delta.clone() + beta.clone() + one.clone());
                checked_div(num, beta.clone() - ns.clone() + one.clone(), index)?
            } else {
                let num = four.clone()
                    * (gamma.clone() + k.clone() + one.clone())
                    * (beta.clone() - ns.clone() + k.clone())
                    * (ns.clone() - k.clone())
                    * (k.clone() + delta.clone() + beta.clone() + one.clone());
                let den = (ns.clone() - beta.clone() - k.clone() - k.clone())
                    * (ns.clone() - beta.clone() - k.clone() - k.clone() - one.clone());
                checked_div(num, den, index)?
            }
        } else {
            let num = four.clone()
                * (gamma.clone() + ns.clone() - beta.clone() - k.clone())
                * (k.clone() + one.clone())
                * (k.clone() + beta.clone() + one.clone())
                * (k.clone() - delta.clone() - ns.clone());
            let den = (ns.clone() - beta.clone() - k.clone() - k.clone() - S::from_int(2))
                * (ns.clone() - beta.clone() - k.clone() - k.clone() - one.clone());
            checked_div(num, den, index)?
        };
        squares.push(sq);
    }
    TwoDiagonalMatrix::from_offdiag_squares(squares)
}

/// The unified one-parameter matrix: size `d + 1`, entries
/// `M_k^2 = (k+1)(d-k)(k-1+c)(k+d+c) / ((2k-1+c)(2k+1+c))`.
///
/// At `k = 0` the factor `c - 1` is shared between numerator and
/// denominator and is cancelled first, `M_0^2 = d(d+c)/(c+1)`, keeping the
/// entry positive and finite on all of `c > 0` including `c = 1`.
pub fn build_m_racah_special<S: Scalar>(d: usize, c: &S) -> Result<TwoDiagonalMatrix<S>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be >= 1".into()));
    }
    if *c <= S::zero() {
        return Err(Error::InvalidArgument("c must be > 0".into()));
    }
    let one = S::one();
    let ds = S::from_int(d as i64);
    let mut squares = Vec::with_capacity(d);
    for index in 0..d {
        let k = S::from_int(index as i64);
        let sq = if index == 0 {
            ds.clone() * (ds.clone() + c.clone()) / (c.clone() + one.clone())
        } else {
            let num = (k.clone() + one.clone())
                * (ds.clone() - k.clone())
                * (k.clone() - one.clone() + c.clone())
                * (k.clone() + ds.clone() + c.clone());
            let den = (k.clone() + k.clone() - one.clone() + c.clone())
                * (k.clone() + k.clone() + one.clone() + c.clone());
            num / den
        };
        squares.push(sq);
    }
    TwoDiagonalMatrix::from_offdiag_squares(squares)
}

/// Where the entries of an eigenvector matrix came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    AnalyticEvenDim,
    AnalyticOddDim,
    Solver,
}

/// Dense square matrix whose columns are eigenvectors, rows indexed by
/// energy level and columns by position.
#[derive(Debug, Clone)]
pub struct EigenvectorMatrixU<S> {
    dim: usize,
    data: Vec<S>, // row-major
    provenance: Provenance,
}

impl<S: FloatScalar> EigenvectorMatrixU<S> {
    pub fn from_rows(rows: Vec<Vec<S>>, provenance: Provenance) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::ShapeMismatch { expected: dim, got: row.len() });
            }
            data.extend(row);
        }
        let u = Self { dim, data, provenance };
        u.check_orthogonality()?;
        Ok(u)
    }

    /// Orthogonality is part of the type's contract; it is enforced at
    /// construction for the dimensions the guarantee covers.
    fn check_orthogonality(&self) -> Result<()> {
        if self.dim > 80 {
            return Ok(());
        }
        let tol = S::from_rational(&Rational::from_ratio(1, 10_000_000_000));
        let residual = self.orthogonality_residual();
        if residual > tol {
            return Err(Error::OutsideWindow(format!(
                "U^T U deviates from I by {residual}"
            )));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.data[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<S> {
        (0..self.dim).map(|row| self.get(row, col)).collect()
    }

    pub fn row(&self, row: usize) -> &[S] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    /// `max |U^T U - I|`.
    pub fn orthogonality_residual(&self) -> S {
        let mut worst = S::zero();
        for a in 0..self.dim {
            for b in a..self.dim {
                let mut dot = S::zero();
                for r in 0..self.dim {
                    dot = dot + self.get(r, a) * self.get(r, b);
                }
                let target = if a == b { S::one() } else { S::zero() };
                let dev = (dot - target).abs();
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }
}

/// Eigenvector matrix of the even-dimensional double: rows `2n` from the
/// family `(alpha, beta, gamma, delta+1)`, rows `2n+1` from
/// `(alpha, beta+1, gamma+1, delta)`, columns mirrored with signs.
///
/// Parameters are exact rationals; every entry is assembled from exactly
/// computed weights, norms and recurrence coefficients, so the result
/// stays accurate arbitrarily close to the window edge.
pub fn build_u_even_dim<S: FloatScalar>(
    n_cap: usize,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> Result<EigenvectorMatrixU<S>> {
    window_even_dim(n_cap, beta, gamma, delta)?;
    let one = Rational::from_int(1);
    let alpha = Rational::from_int(-(n_cap as i64 + 1));
    let even = RacahParams::new(
        alpha.clone(),
        beta.clone(),
        gamma.clone(),
        delta.clone() + one.clone(),
        n_cap,
    )?;
    let odd = RacahParams::new(
        alpha,
        beta.clone() + one.clone(),
        gamma.clone() + one.clone(),
        delta.clone(),
        n_cap,
    )?;
    let even_table = racah_orthonormal_table::<S>(&even)?;
    let odd_table = racah_orthonormal_table::<S>(&odd)?;

    let dim = 2 * n_cap + 2;
    let inv_sqrt2 = (S::one() + S::one()).sqrt().recip();
    let mut rows = vec![vec![S::zero(); dim]; dim];
    for n in 0..=n_cap {
        let sign = if n % 2 == 0 { S::one() } else { S::from_int(-1) };
        for x in 0..=n_cap {
            let re = sign * inv_sqrt2 * even_table[n][x];
            let ro = sign * inv_sqrt2 * odd_table[n][x];
            rows[2 * n][n_cap - x] = re;
            rows[2 * n][n_cap + x + 1] = re;
            rows[2 * n + 1][n_cap - x] = -ro;
            rows[2 * n + 1][n_cap + x + 1] = ro;
        }
    }
    EigenvectorMatrixU::from_rows(rows, Provenance::AnalyticEvenDim)
}

/// Eigenvector matrix of the odd-dimensional double: rows `2n` from the
/// family `(alpha, beta, gamma, delta)` with an unhalved middle column,
/// rows `2n+1` from `(alpha+1, beta, gamma+1, delta+1)` with a zero middle
/// entry.
pub fn build_u_odd_dim<S: FloatScalar>(
    n_cap: usize,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> Result<EigenvectorMatrixU<S>> {
    window_odd_dim(n_cap, beta, gamma, delta)?;
    let one = Rational::from_int(1);
    let even = RacahParams::new(
        Rational::from_int(-(n_cap as i64 + 1)),
        beta.clone(),
        gamma.clone(),
        delta.clone(),
        n_cap,
    )?;
    let even_table = racah_orthonormal_table::<S>(&even)?;

    let dim = 2 * n_cap + 1;
    let inv_sqrt2 = (S::one() + S::one()).sqrt().recip();
    let mut rows = vec![vec![S::zero(); dim]; dim];
    for n in 0..=n_cap {
        let sign = if n % 2 == 0 { S::one() } else { S::from_int(-1) };
        rows[2 * n][n_cap] = sign * even_table[n][0];
        for x in 1..=n_cap {
            let re = sign * inv_sqrt2 * even_table[n][x];
            rows[2 * n][n_cap - x] = re;
            rows[2 * n][n_cap + x] = re;
        }
    }
    if n_cap > 0 {
        let odd = RacahParams::new(
            Rational::from_int(-(n_cap as i64)),
            beta.clone(),
            gamma.clone() + one.clone(),
            delta.clone() + one.clone(),
            n_cap - 1,
        )?;
        let odd_table = racah_orthonormal_table::<S>(&odd)?;
        for n in 0..n_cap {
            let sign = if n % 2 == 0 { S::one() } else { S::from_int(-1) };
            for x in 0..n_cap {
                let ro = sign * inv_sqrt2 * odd_table[n][x];
                rows[2 * n + 1][n_cap - x - 1] = -ro;
                rows[2 * n + 1][n_cap + x + 1] = ro;
            }
        }
    }
    EigenvectorMatrixU::from_rows(rows, Provenance::AnalyticOddDim)
}

/// Eigenvector matrix for half-integer `j = N + 1/2`: the even-dimensional
/// double at `beta = N - 1/2 + c/2`, `gamma = delta = -1/2`.
pub fn build_u_halfinteger_j<S: FloatScalar>(
    n_cap: usize,
    c: &Rational,
) -> Result<EigenvectorMatrixU<S>> {
    let beta = Rational::from_ratio(2 * n_cap as i64 - 1, 2) + c / Rational::from_int(2);
    let half = Rational::from_ratio(-1, 2);
    build_u_even_dim(n_cap, &beta, &half, &half)
}

/// Eigenvector matrix for integer `j`: the odd-dimensional double at
/// `beta = j - 1/2 + c/2`, `gamma = delta = -1/2`.
pub fn build_u_integer_j<S: FloatScalar>(j: usize, c: &Rational) -> Result<EigenvectorMatrixU<S>> {
    let beta = Rational::from_ratio(2 * j as i64 - 1, 2) + c / Rational::from_int(2);
    let half = Rational::from_ratio(-1, 2);
    build_u_odd_dim(j, &beta, &half, &half)
}

/// Residuals of the eigenvector equation and of orthogonality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleResiduals<S> {
    pub eigen_equation: S,
    pub orthogonality: S,
}

/// `(max |M U - U D|, max |U^T U - I|)`.
pub fn verify_double<S: FloatScalar>(
    m: &TwoDiagonalMatrix<S>,
    u: &EigenvectorMatrixU<S>,
    d: &SpectrumD<S>,
) -> Result<DoubleResiduals<S>> {
    let dim = m.dim();
    if u.dim() != dim {
        return Err(Error::ShapeMismatch { expected: dim, got: u.dim() });
    }
    if d.dim() != dim {
        return Err(Error::ShapeMismatch { expected: dim, got: d.dim() });
    }
    let mut worst = S::zero();
    for col in 0..dim {
        let v = u.column(col);
        let mv = m.apply(&v)?;
        let lambda = d.eigenvalues()[col];
        for row in 0..dim {
            let dev = (mv[row] - lambda * v[row]).abs();
            if dev > worst {
                worst = dev;
            }
        }
    }
    Ok(DoubleResiduals { eigen_equation: worst, orthogonality: u.orthogonality_residual() })
}
