//! Cross-module checks through the public API: the independent spectral
//! oracle against the analytic constructions, on both scalar backends.

use racosc::doubles::{
    build_m_racah_special, build_u_halfinteger_j, build_u_integer_j, spectrum_exact,
    verify_double,
};
use racosc::numerics::{HalfInteger, Scalar};
use racosc::oscillator::OscillatorModel;
use racosc::spectral::{charpoly_eval, eigen_decomposition, eigenvalues_bisection};
use racosc::{Rational, RationalMatrix, RealMatrix};

fn rat(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn float_matrix(d: usize, c: &Rational) -> RealMatrix {
    let exact: RationalMatrix = build_m_racah_special(d, c).unwrap();
    RealMatrix::from_offdiag_squares(
        exact.offdiag_squares().iter().map(Scalar::to_f64_lossy).collect(),
    )
    .unwrap()
}

#[test]
fn analytic_and_solver_eigenvectors_agree_columnwise() {
    for (d, c) in [(7usize, rat(1, 2)), (10, rat(2, 1)), (15, rat(8, 1))] {
        let m = float_matrix(d, &c);
        let analytic = if d % 2 == 1 {
            build_u_halfinteger_j::<f64>((d - 1) / 2, &c).unwrap()
        } else {
            build_u_integer_j::<f64>(d / 2, &c).unwrap()
        };
        let solved = eigen_decomposition(&m, 1e-13).unwrap();
        for col in 0..=d {
            let a = analytic.column(col);
            let s = solved.eigenvectors.column(col);
            // solver fixes signs by first nonzero component; compare up to
            // one recorded flip per column
            let flip = if a[0] * s[0] < 0.0 { -1.0 } else { 1.0 };
            for (x, y) in a.iter().zip(&s) {
                assert!((x - flip * y).abs() <= 1e-9, "d={d} c={c} col={col}");
            }
        }
    }
}

#[test]
fn residuals_small_across_deformation_range() {
    for d in [1usize, 4, 9, 20, 40] {
        for c in [rat(1, 1_000_000), rat(1, 2), rat(3, 2), rat(2, 1), rat(32, 1)] {
            let m = float_matrix(d, &c);
            let u = if d % 2 == 1 {
                build_u_halfinteger_j::<f64>((d - 1) / 2, &c).unwrap()
            } else {
                build_u_integer_j::<f64>(d / 2, &c).unwrap()
            };
            let res = verify_double(&m, &u, &spectrum_exact(d)).unwrap();
            assert!(res.eigen_equation <= 1e-9, "d={d} c={c}: {res:?}");
            assert!(res.orthogonality <= 1e-10, "d={d} c={c}: {res:?}");
        }
    }
}

#[test]
fn exact_certificate_and_float_oracle_tell_the_same_story() {
    let d = 9usize;
    let c = rat(7, 3);
    let exact: RationalMatrix = build_m_racah_special(d, &c).unwrap();
    for lambda in spectrum_exact::<Rational>(d).eigenvalues() {
        assert_eq!(charpoly_eval(&exact, lambda), rat(0, 1));
    }
    let numeric = eigenvalues_bisection(&float_matrix(d, &c), 1e-12);
    for (got, want) in numeric.iter().zip(spectrum_exact::<f64>(d).eigenvalues()) {
        assert!((got - want).abs() <= 1e-10);
    }
}

#[test]
fn oscillator_wavefunctions_are_position_eigenvector_overlaps() {
    let model = OscillatorModel::<f64>::build(HalfInteger::from_twice(9), rat(3, 2)).unwrap();
    let q_matrix = model.position_matrix();
    for q in model.position_spectrum() {
        let v = model.position_eigenvector(q).unwrap();
        let qv = q_matrix.apply(&v).unwrap();
        for (a, b) in qv.iter().zip(&v) {
            assert!((a - q.to_f64() * b).abs() <= 1e-11);
        }
        for (n, component) in v.iter().enumerate() {
            assert_eq!(*component, model.wavefunction(n, q).unwrap());
        }
    }
}
