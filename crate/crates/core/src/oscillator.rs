//! The finite oscillator model: Hamiltonian with spectrum `n + 1/2`,
//! position and momentum operators built from the one-parameter
//! two-diagonal matrix, and the discrete position wavefunctions.

use std::sync::OnceLock;

use crate::doubles::{
    build_m_racah_special, build_u_halfinteger_j, build_u_integer_j, spectrum_exact,
    EigenvectorMatrixU, SpectrumD, TwoDiagonalMatrix,
};
use crate::error::{Error, Result};
use crate::numerics::{
    hyp_terminating, FloatScalar, HalfInteger, HypSeries, Rational, Scalar,
};
use crate::racah::{krawtchouk_orthonormal, norm_h, weight, RacahParams};

/// The model for a representation label `j >= 1/2` and deformation
/// parameter `c > 0` on the `2j + 1`-dimensional space.
///
/// The Hamiltonian is `diag(1/2, 3/2, ..., 2j + 1/2)`; the position
/// operator is half the two-diagonal matrix `M`; the momentum operator is
/// `i/2` times the real antisymmetric matrix with the same magnitudes
/// (stored real: every verifiable quantity of the model is real).
///
/// The eigenvector matrix and the closed-form family data are built on
/// first use and then shared; operator-level checks never pay for them.
#[derive(Debug)]
pub struct OscillatorModel<S> {
    j: HalfInteger,
    c: Rational,
    matrix: TwoDiagonalMatrix<S>,
    u: OnceLock<EigenvectorMatrixU<S>>,
    closed_family: OnceLock<ClosedFormFamily>,
}

/// Exact weights and norms of the even-row family, shared by every
/// closed-form evaluation on one model.
#[derive(Debug)]
struct ClosedFormFamily {
    weights: Vec<Rational>,
    norms: Vec<Rational>,
}

impl<S: FloatScalar> OscillatorModel<S> {
    /// Builds the operators for `(j, c)`.
    pub fn build(j: HalfInteger, c: Rational) -> Result<Self> {
        if j.twice() < 1 {
            return Err(Error::InvalidArgument(format!("j must be >= 1/2, got {j}")));
        }
        if c <= Rational::from_int(0) {
            return Err(Error::InvalidArgument("c must be > 0".into()));
        }
        let d = j.twice() as usize; // dim - 1 = 2j
        let matrix = build_m_racah_special(d, &S::from_rational(&c))?;
        Ok(Self { j, c, matrix, u: OnceLock::new(), closed_family: OnceLock::new() })
    }

    pub fn j(&self) -> HalfInteger {
        self.j
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn dim(&self) -> usize {
        self.j.twice() as usize + 1
    }

    /// The full two-diagonal matrix `M = 2 q`.
    pub fn matrix(&self) -> &TwoDiagonalMatrix<S> {
        &self.matrix
    }

    /// Position operator `q = M / 2`.
    pub fn position_matrix(&self) -> TwoDiagonalMatrix<S> {
        self.matrix.scaled_by_half()
    }

    /// Eigenvector matrix: rows indexed by level `n`, columns by `j + q`.
    pub fn u_matrix(&self) -> Result<&EigenvectorMatrixU<S>> {
        if self.u.get().is_none() {
            let built = if self.j.is_integer() {
                build_u_integer_j((self.j.twice() / 2) as usize, &self.c)?
            } else {
                build_u_halfinteger_j(((self.j.twice() - 1) / 2) as usize, &self.c)?
            };
            let _ = self.u.set(built);
        }
        Ok(self.u.get().expect("just initialized"))
    }

    /// Hamiltonian diagonal `n + 1/2`.
    pub fn hamiltonian_diag(&self) -> Vec<S> {
        (0..self.dim())
            .map(|n| S::from_int(n as i64) + S::from_ratio(1, 2))
            .collect()
    }

    /// The exact position spectrum `-j, -j+1, ..., j`, independent of c.
    pub fn position_spectrum(&self) -> Vec<HalfInteger> {
        let twice_j = self.j.twice();
        (0..=twice_j as usize)
            .map(|k| HalfInteger::from_twice(2 * k as i64 - twice_j))
            .collect()
    }

    /// Same spectrum as scalars, for comparisons against the solver.
    pub fn position_spectrum_scalars(&self) -> SpectrumD<S> {
        let d = self.j.twice() as usize;
        let half = S::from_ratio(1, 2);
        SpectrumD::new(
            spectrum_exact::<S>(d)
                .eigenvalues()
                .iter()
                .map(|e| *e * half)
                .collect(),
        )
    }

    fn grid_index(&self, q: HalfInteger) -> Result<usize> {
        let column = self.j + q;
        if column.twice() % 2 != 0 || column < HalfInteger::ZERO || q > self.j {
            return Err(Error::OffGrid { twice_q: q.twice(), twice_j: self.j.twice() });
        }
        Ok((column.twice() / 2) as usize)
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level >= self.dim() {
            return Err(Error::InvalidArgument(format!(
                "level {level} exceeds 2j = {}",
                self.dim() - 1
            )));
        }
        Ok(())
    }

    /// Unit eigenvector `|q)` of the position operator, as the column
    /// `j + q` of U expressed in the Hamiltonian eigenbasis.
    pub fn position_eigenvector(&self, q: HalfInteger) -> Result<Vec<S>> {
        let index = self.grid_index(q)?;
        Ok(self.u_matrix()?.column(index))
    }

    /// Wavefunction value `Phi_n(q)` read from the eigenvector matrix.
    pub fn wavefunction(&self, n: usize, q: HalfInteger) -> Result<S> {
        self.check_level(n)?;
        let index = self.grid_index(q)?;
        Ok(self.u_matrix()?.get(n, index))
    }

    /// Closed-form wavefunction for half-integer j.
    ///
    /// Even levels come from the terminating series with numerator
    /// parameters `(-q+1/2, q+1/2, -n, n+(c-1)/2)`, odd levels carry the
    /// extra prefactor and the factor q. Every parameter is an exact
    /// rational, so the series, the weight ratio and the prefactor are all
    /// evaluated on the exact backend and rounded once at the end; this
    /// keeps the route independent of, and comparable to, the eigenvector
    /// matrix at full precision. At `n = 0` the odd prefactor shares the
    /// factor `c - 1` between numerator and denominator; it is cancelled
    /// first so the expression also covers `c = 1`. The value at `q = 0`
    /// is defined by the eigenvector matrix instead (half-integer grids
    /// never contain it, integer grids use the other construction).
    pub fn wavefunction_closed(&self, level: usize, q: HalfInteger) -> Result<S> {
        if self.j.is_integer() {
            return Err(Error::InvalidArgument(
                "closed-form wavefunctions exist for half-integer j only".into(),
            ));
        }
        self.check_level(level)?;
        self.grid_index(q)?;
        let n = level / 2;
        let n_cap = ((self.j.twice() - 1) / 2) as usize;
        let x = (q.abs().twice() as usize - 1) / 2; // |q| - 1/2
        let c = self.c.clone();
        let j = Rational::from_half(self.j);
        let one = Rational::from_int(1);
        let two = Rational::from_int(2);
        let half = Rational::from_ratio(1, 2);

        // W(n, q; c, j) from the even-row family
        if self.closed_family.get().is_none() {
            let family = RacahParams::new(
                Rational::from_int(-(n_cap as i64 + 1)),
                j.clone() - one.clone() + c.clone() / two.clone(),
                -half.clone(),
                half.clone(),
                n_cap,
            )?;
            let weights = (0..=n_cap)
                .map(|x| weight(&family, x))
                .collect::<Result<Vec<_>>>()?;
            let norms = (0..=n_cap)
                .map(|n| norm_h(&family, n))
                .collect::<Result<Vec<_>>>()?;
            let _ = self.closed_family.set(ClosedFormFamily { weights, norms });
        }
        let family = self.closed_family.get().expect("just initialized");
        let w_over_h = family.weights[x].clone() / family.norms[n].clone();
        if w_over_h <= Rational::from_int(0) {
            return Err(Error::OutsideWindow(format!("W({n}, {q}) = {w_over_h}")));
        }

        let qs = Rational::from_half(q);
        let series_shift = if level % 2 == 0 { -one.clone() } else { one.clone() };
        let first_denominator =
            if level % 2 == 0 { half.clone() } else { Rational::from_ratio(3, 2) };
        let numerator = vec![
            half.clone() - qs.clone(),
            qs.clone() + half.clone(),
            Rational::from_int(-(n as i64)),
            Rational::from_int(n as i64) + (c.clone() + series_shift) / two.clone(),
        ];
        let denominator = vec![
            first_denominator,
            j.clone() + (c.clone() + one.clone()) / two.clone(),
            half.clone() - j.clone(),
        ];
        let series = HypSeries::new(numerator, denominator, one.clone(), n.min(x))?;
        let series_value = S::from_rational(&hyp_terminating(&series));

        let sign = if n % 2 == 0 { S::one() } else { -S::one() };
        let sqrt_w_over_h = S::from_rational(&w_over_h).sqrt();
        if level % 2 == 0 {
            let inv_sqrt2 = (S::one() + S::one()).sqrt().recip();
            Ok(sign * inv_sqrt2 * sqrt_w_over_h * series_value)
        } else {
            let ns = Rational::from_int(n as i64);
            let four = Rational::from_int(4);
            let prefactor_sq = if n == 0 {
                (c.clone() + one) / ((c + two * j.clone()) * j)
            } else {
                (four.clone() * ns.clone() + c.clone() + one.clone())
                    * (two.clone() * ns.clone() + c.clone() - one.clone())
                    * (two.clone() * ns.clone() + one.clone())
                    / ((four * ns.clone() + c.clone() - one)
                        * (two.clone() * ns.clone() + c + two * j.clone())
                        * (j - ns))
            };
            if prefactor_sq <= Rational::from_int(0) {
                return Err(Error::OutsideWindow(format!(
                    "odd prefactor squared = {prefactor_sq}"
                )));
            }
            Ok(sign
                * S::from_rational(&prefactor_sq).sqrt()
                * sqrt_w_over_h
                * S::from_half(q)
                * series_value)
        }
    }

    /// Residuals of the two Hamilton-Lie identities, computed entrywise on
    /// the real matrices: `[H, Q] = P/2` and `[H, P] = 2 Q`, where `P` is
    /// the real antisymmetric part of the momentum operator.
    pub fn hamilton_lie_residuals(&self) -> (S, S) {
        let dim = self.dim();
        let h = self.hamiltonian_diag();
        let m = self.matrix.offdiag();
        let mut worst_q = S::zero();
        let mut worst_p = S::zero();
        // all three operators are tridiagonal with zero diagonal, so the
        // commutators live on the off-diagonals only
        for k in 0..dim - 1 {
            let q_entry = m[k] / (S::one() + S::one());
            let p_upper = -m[k]; // P_{k,k+1}
            let p_lower = m[k]; // P_{k+1,k}
            // ([H, Q])_{k,k+1} = (h_k - h_{k+1}) Q_{k,k+1} must equal (P/2)_{k,k+1}
            let hq_upper = (h[k] - h[k + 1]) * q_entry;
            let hq_lower = (h[k + 1] - h[k]) * q_entry;
            worst_q = worst_q
                .max((hq_upper - p_upper / (S::one() + S::one())).abs())
                .max((hq_lower - p_lower / (S::one() + S::one())).abs());
            // ([H, P])_{k,k+1} = (h_k - h_{k+1}) P_{k,k+1} must equal 2 Q_{k,k+1}
            let hp_upper = (h[k] - h[k + 1]) * p_upper;
            let hp_lower = (h[k + 1] - h[k]) * p_lower;
            let two = S::one() + S::one();
            worst_p = worst_p
                .max((hp_upper - two * q_entry).abs())
                .max((hp_lower - two * q_entry).abs());
        }
        (worst_q, worst_p)
    }

    /// Largest pointwise gap between the wavefunction at level `n` and the
    /// orthonormal symmetric Krawtchouk function, minimized over the free
    /// per-level sign.
    pub fn su2_limit_deviation(&self, n: usize) -> Result<S> {
        let d = self.j.twice() as usize;
        let mut dev_plus = S::zero();
        let mut dev_minus = S::zero();
        for (col, q) in self.position_spectrum().into_iter().enumerate() {
            let phi = self.wavefunction(n, q)?;
            let k = krawtchouk_orthonormal::<S>(n, col, d)?;
            dev_plus = dev_plus.max((phi - k).abs());
            dev_minus = dev_minus.max((phi + k).abs());
        }
        Ok(dev_plus.min(dev_minus))
    }

    /// Tabulates the requested levels over the whole grid.
    pub fn wavefunction_table(&self, levels: &[usize]) -> Result<WavefunctionTable<S>> {
        let dim = self.dim();
        for &level in levels {
            self.check_level(level)?;
        }
        let grid = self.position_spectrum();
        let u = self.u_matrix()?;
        let mut values = Vec::with_capacity(levels.len());
        for &level in levels {
            let row: Vec<S> = (0..dim).map(|col| u.get(level, col)).collect();
            // parity is structural: even levels mirror, odd levels flip
            for col in 0..dim {
                let mirrored = row[dim - 1 - col];
                let expect = if level % 2 == 0 { mirrored } else { -mirrored };
                debug_assert!(row[col] == expect, "parity broken at level {level}");
            }
            values.push(row);
        }
        Ok(WavefunctionTable { j: self.j, levels: levels.to_vec(), grid, values })
    }
}

/// Wavefunction values `Phi_n(q)` for a set of levels over the grid
/// `q = -j .. j`.
#[derive(Debug, Clone)]
pub struct WavefunctionTable<S> {
    j: HalfInteger,
    levels: Vec<usize>,
    grid: Vec<HalfInteger>,
    values: Vec<Vec<S>>,
}

impl<S: FloatScalar> WavefunctionTable<S> {
    pub fn j(&self) -> HalfInteger {
        self.j
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn grid(&self) -> &[HalfInteger] {
        &self.grid
    }

    /// Row of values for the i-th requested level.
    pub fn row(&self, level_index: usize) -> &[S] {
        &self.values[level_index]
    }

    /// `max |sum_q Phi_n Phi_m - delta_nm|` over the tabulated levels.
    pub fn row_orthonormality_residual(&self) -> S {
        let mut worst = S::zero();
        for (a, row_a) in self.values.iter().enumerate() {
            for (b, row_b) in self.values.iter().enumerate() {
                let dot = row_a
                    .iter()
                    .zip(row_b)
                    .fold(S::zero(), |acc, (x, y)| acc + *x * *y);
                let target = if self.levels[a] == self.levels[b] { S::one() } else { S::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max |sum_n Phi_n(q) Phi_n(q') - delta_qq'|`; meaningful when every
    /// level is tabulated.
    pub fn completeness_residual(&self) -> S {
        let dim = self.grid.len();
        let mut worst = S::zero();
        for a in 0..dim {
            for b in 0..dim {
                let mut dot = S::zero();
                for row in &self.values {
                    dot = dot + row[a] * row[b];
                }
                let target = if a == b { S::one() } else { S::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}
