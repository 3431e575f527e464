//! The five subcommands: matrix entries, spectra, verification, wavefunction
//! tables and the seven-panel figure reproduction.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_traits::Zero;
use racosc::doubles::{
    build_m_racah_special, build_u_halfinteger_j, build_u_integer_j, spectrum_exact,
    verify_double, TwoDiagonalMatrix,
};
use racosc::numerics::{HalfInteger, Rational, Scalar};
use racosc::oscillator::OscillatorModel;
use racosc::spectral::{charpoly_eval, eigenvalues_bisection};
use serde_json::json;

use crate::fmt::sig12;
use crate::svg::{render_grid, Panel};

/// Failures split by exit code: usage problems exit 1, verification
/// failures exit 2.
pub enum CliError {
    Usage(String),
    Verification(String),
}

impl From<racosc::Error> for CliError {
    fn from(e: racosc::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CmdResult = Result<(), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub enum Format {
    Csv,
    Json,
}

fn emit(output: Option<&Path>, content: &str) -> CmdResult {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn require_positive_c(c: &Rational) -> Result<(), CliError> {
    if *c <= Rational::from_int(0) {
        Err(usage("c must be > 0"))
    } else {
        Ok(())
    }
}

/// Off-diagonal entries from exactly computed squares.
fn matrix_entries(d: usize, c: &Rational) -> Result<Vec<f64>, CliError> {
    let m: TwoDiagonalMatrix<Rational> = build_m_racah_special(d, c)?;
    Ok(m.offdiag_squares()
        .iter()
        .map(|sq| sq.to_f64_lossy().sqrt())
        .collect())
}

pub fn cmd_matrix(
    d: usize,
    c: &Rational,
    format: Format,
    output: Option<&Path>,
) -> CmdResult {
    require_positive_c(c)?;
    if d == 0 {
        return Err(usage("d must be >= 1"));
    }
    let entries = matrix_entries(d, c)?;
    let content = match format {
        Format::Csv => {
            let mut out = String::from("k,m_k\n");
            for (k, entry) in entries.iter().enumerate() {
                let _ = writeln!(out, "{k},{}", sig12(*entry));
            }
            out
        }
        Format::Json => {
            let value = json!({
                "params": {"d": d, "c": c.to_string()},
                "data": {"offdiag": entries},
                "residuals": {},
            });
            format!("{value:#}\n")
        }
    };
    emit(output, &content)
}

pub fn cmd_spectrum(
    d: Option<usize>,
    j: Option<HalfInteger>,
    c: &Rational,
    format: Format,
    output: Option<&Path>,
) -> CmdResult {
    require_positive_c(c)?;
    let (exact, numeric): (Vec<f64>, Vec<f64>) = match (d, j) {
        (Some(d), None) => {
            if d == 0 {
                return Err(usage("d must be >= 1"));
            }
            let m: TwoDiagonalMatrix<Rational> = build_m_racah_special(d, c)?;
            let m_float = TwoDiagonalMatrix::from_offdiag_squares(
                m.offdiag_squares().iter().map(Scalar::to_f64_lossy).collect(),
            )?;
            (
                spectrum_exact::<f64>(d).eigenvalues().to_vec(),
                eigenvalues_bisection(&m_float, 1e-12),
            )
        }
        (None, Some(j)) => {
            let model = OscillatorModel::<f64>::build(j, c.clone())?;
            (
                model.position_spectrum().iter().map(|q| q.to_f64()).collect(),
                eigenvalues_bisection(&model.position_matrix(), 1e-12),
            )
        }
        _ => return Err(usage("provide exactly one of --d or --j")),
    };
    let deviation = exact
        .iter()
        .zip(&numeric)
        .map(|(e, n)| (e - n).abs())
        .fold(0.0f64, f64::max);
    let content = match format {
        Format::Csv => {
            let mut out = String::from("exact,numeric,abs_error\n");
            for (e, n) in exact.iter().zip(&numeric) {
                let _ = writeln!(out, "{},{},{}", sig12(*e), sig12(*n), sig12((e - n).abs()));
            }
            let _ = writeln!(out, "max_deviation,{},", sig12(deviation));
            out
        }
        Format::Json => {
            let value = json!({
                "params": {"d": d, "j": j.map(|j| j.to_string()), "c": c.to_string()},
                "data": {"exact": exact, "numeric": numeric},
                "residuals": {"max_deviation": deviation},
            });
            format!("{value:#}\n")
        }
    };
    emit(output, &content)
}

pub fn cmd_verify(
    d: usize,
    c: &Rational,
    tol: f64,
    rational_backend: bool,
    output: Option<&Path>,
) -> CmdResult {
    require_positive_c(c)?;
    if d == 0 {
        return Err(usage("d must be >= 1"));
    }
    if tol <= 0.0 {
        return Err(usage("tol must be > 0"));
    }
    let m_exact: TwoDiagonalMatrix<Rational> = build_m_racah_special(d, c)?;
    let m = TwoDiagonalMatrix::from_offdiag_squares(
        m_exact.offdiag_squares().iter().map(Scalar::to_f64_lossy).collect::<Vec<f64>>(),
    )?;
    let u = if d % 2 == 1 {
        build_u_halfinteger_j::<f64>((d - 1) / 2, c)?
    } else {
        build_u_integer_j::<f64>(d / 2, c)?
    };
    let residuals = verify_double(&m, &u, &spectrum_exact(d))?;
    let numeric = eigenvalues_bisection(&m, (tol * 1e-3).max(1e-14));
    let spectrum_deviation = spectrum_exact::<f64>(d)
        .eigenvalues()
        .iter()
        .zip(&numeric)
        .map(|(e, n)| (e - n).abs())
        .fold(0.0f64, f64::max);

    let mut report = String::new();
    let _ = writeln!(report, "residual mu_ud: {}", sig12(residuals.eigen_equation));
    let _ = writeln!(report, "residual utu_i: {}", sig12(residuals.orthogonality));
    let _ = writeln!(report, "spectrum deviation: {}", sig12(spectrum_deviation));
    let mut ok = residuals.eigen_equation <= tol
        && residuals.orthogonality <= tol
        && spectrum_deviation <= tol;

    if rational_backend {
        let nonzero: Vec<String> = spectrum_exact::<Rational>(d)
            .eigenvalues()
            .iter()
            .filter(|lambda| !charpoly_eval(&m_exact, lambda).is_zero())
            .map(|lambda| lambda.to_string())
            .collect();
        if nonzero.is_empty() {
            let _ = writeln!(
                report,
                "charpoly certificate: exact zero at all {} eigenvalues",
                d + 1
            );
        } else {
            ok = false;
            let _ = writeln!(
                report,
                "charpoly certificate FAILED at lambda in {{{}}}",
                nonzero.join(", ")
            );
        }
    }
    let _ = writeln!(report, "{} (tol {tol:e})", if ok { "PASS" } else { "FAIL" });
    emit(output, &report)?;
    if ok {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "residuals exceed tolerance {tol:e}"
        )))
    }
}

fn wavefunction_csv(grid: &[HalfInteger], levels: &[usize], rows: &[&[f64]]) -> String {
    let mut out = String::from("q");
    for level in levels {
        let _ = write!(out, ",phi{level}");
    }
    out.push('\n');
    for (col, q) in grid.iter().enumerate() {
        let _ = write!(out, "{q}");
        for row in rows {
            let _ = write!(out, ",{}", sig12(row[col]));
        }
        out.push('\n');
    }
    out
}

pub fn cmd_wavefunction(
    j: HalfInteger,
    c: &Rational,
    levels: Option<Vec<usize>>,
    format: Format,
    output: Option<&Path>,
) -> CmdResult {
    require_positive_c(c)?;
    let model = OscillatorModel::<f64>::build(j, c.clone())?;
    let levels = levels.unwrap_or_else(|| (0..model.dim()).collect());
    let table = model
        .wavefunction_table(&levels)
        .map_err(|e| usage(e.to_string()))?;
    let rows: Vec<&[f64]> = (0..levels.len()).map(|i| table.row(i)).collect();
    let content = match format {
        Format::Csv => wavefunction_csv(table.grid(), &levels, &rows),
        Format::Json => {
            let phi: serde_json::Map<String, serde_json::Value> = levels
                .iter()
                .enumerate()
                .map(|(i, level)| (level.to_string(), json!(table.row(i))))
                .collect();
            let value = json!({
                "params": {"j": j.to_string(), "c": c.to_string(), "levels": levels},
                "data": {
                    "q": table.grid().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                    "phi": phi,
                },
                "residuals": {
                    "row_orthonormality": table.row_orthonormality_residual(),
                },
            });
            format!("{value:#}\n")
        }
    };
    emit(output, &content)
}

/// File-name fragment for a deformation value: the exact value printed as
/// `num` or `num_den`.
fn c_label(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}_{}", c.numer(), c.denom())
    }
}

pub fn cmd_figure1(
    j: HalfInteger,
    levels: &[usize],
    c_values: &[Rational],
    out_dir: &Path,
) -> CmdResult {
    if levels.is_empty() || c_values.is_empty() {
        return Err(usage("levels and c values must be nonempty"));
    }
    for c in c_values {
        require_positive_c(c)?;
    }
    fs::create_dir_all(out_dir)
        .map_err(|e| usage(format!("cannot create {}: {e}", out_dir.display())))?;

    let mut panel_rows = Vec::with_capacity(c_values.len());
    for c in c_values {
        let model = OscillatorModel::<f64>::build(j, c.clone())?;
        let table = model
            .wavefunction_table(levels)
            .map_err(|e| usage(e.to_string()))?;
        let rows: Vec<&[f64]> = (0..levels.len()).map(|i| table.row(i)).collect();
        let csv = wavefunction_csv(table.grid(), levels, &rows);
        let path = out_dir.join(format!("wavefunctions_c{}.csv", c_label(c)));
        emit(Some(&path), &csv)?;

        let grid: Vec<f64> = table.grid().iter().map(|q| q.to_f64()).collect();
        let panels: Vec<Panel> = levels
            .iter()
            .enumerate()
            .map(|(i, level)| Panel {
                row_label: format!("c = {c}"),
                column_label: format!("n = {level}"),
                points: grid.iter().copied().zip(rows[i].iter().copied()).collect(),
            })
            .collect();
        panel_rows.push(panels);
    }
    emit(Some(&out_dir.join("figure1.svg")), &render_grid(&panel_rows))
}

/// The seven deformation values of the default figure, smallest first.
pub fn default_figure_c_values() -> Vec<Rational> {
    [
        Rational::from_ratio(1, 1_000_000),
        Rational::from_ratio(1, 2),
        Rational::from_ratio(3, 2),
        Rational::from_int(2),
        Rational::from_int(4),
        Rational::from_int(8),
        Rational::from_int(32),
    ]
    .to_vec()
}
