use serde::Serialize;

use crate::error::{Error, Result};
use crate::mesh::GridField;

use super::config::ResolvedRun;
use super::reference::ReferenceSolution;
use super::simulate::simulate_1d;

/// `(L1, Linf)` of `numeric - exact` with `L1 = (1/N) sum |e_j|`.
pub fn norms(numeric: &[f64], exact: &[f64]) -> Result<(f64, f64)> {
    if numeric.len() != exact.len() || numeric.is_empty() {
        return Err(Error::GridMismatch(format!(
            "{} numeric values against {} reference values",
            numeric.len(),
            exact.len()
        )));
    }
    let (sum, max) = numeric
        .iter()
        .zip(exact)
        .map(|(a, b)| (a - b).abs())
        .fold((0.0, 0.0f64), |(s, m), e| (s + e, m.max(e)));
    Ok((sum / numeric.len() as f64, max))
}

/// Norms of the first variable (scalar `u` or density) over interior cells.
pub fn error_norms(numeric: &GridField, exact: &GridField) -> Result<(f64, f64)> {
    if numeric.n_cells() != exact.n_cells() {
        return Err(Error::GridMismatch(format!(
            "{} cells against {} cells",
            numeric.n_cells(),
            exact.n_cells()
        )));
    }
    norms(numeric.interior(0), exact.interior(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub l1_err: f64,
    pub l1_order: Option<f64>,
    pub linf_err: f64,
    pub linf_order: Option<f64>,
}

/// Observed order between two grids, `log(e_coarse / e_fine) / log(n_fine / n_coarse)`.
pub fn observed_order(n_coarse: usize, e_coarse: f64, n_fine: usize, e_fine: f64) -> f64 {
    (e_coarse / e_fine).ln() / (n_fine as f64 / n_coarse as f64).ln()
}

/// Build rows with orders from `(n, l1, linf)` triples in sweep order.
pub fn convergence_rows(errors: &[(usize, f64, f64)]) -> Vec<ConvergenceRow> {
    errors
        .iter()
        .enumerate()
        .map(|(i, &(n, l1, linf))| {
            let prev = i.checked_sub(1).map(|p| errors[p]);
            ConvergenceRow {
                n,
                l1_err: l1,
                l1_order: prev.map(|(pn, pl1, _)| observed_order(pn, pl1, n, l1)),
                linf_err: linf,
                linf_order: prev.map(|(pn, _, pli)| observed_order(pn, pli, n, linf)),
            }
        })
        .collect()
}

/// Run `run` on each grid of `n_list` and measure errors against the
/// problem's reference (built once).
pub fn convergence_study(run: &ResolvedRun, n_list: &[usize]) -> Result<Vec<ConvergenceRow>> {
    if run.spec.is_2d() {
        return Err(Error::Config("convergence studies are 1D only".into()));
    }
    let n_max = n_list.iter().copied().max().unwrap_or(run.n);
    let reference = ReferenceSolution::build(run, n_max)?
        .ok_or_else(|| Error::Config(format!("`{}` has no reference solution", run.spec.name)))?;
    let mut errors = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let (grid, field, _) = simulate_1d(&run.with_n(n))?;
        let exact = reference.sample_grid(&grid)?;
        let (l1, linf) = norms(field.interior(0), &exact[0])?;
        errors.push((n, l1, linf));
    }
    Ok(convergence_rows(&errors))
}

pub const CONVERGENCE_HEADER: &str = "N,L1_error,L1_order,Linf_error,Linf_order";

pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let opt = |o: Option<f64>| o.map(super::output::fmt_f64).unwrap_or_default();
    let mut out = String::from(CONVERGENCE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            super::output::fmt_f64(r.l1_err),
            opt(r.l1_order),
            super::output::fmt_f64(r.linf_err),
            opt(r.linf_order)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_examples() {
        let a = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(norms(&a, &a).unwrap(), (0.0, 0.0));
        assert_eq!(norms(&[1.0, -1.0, 0.0, 0.0], &[0.0; 4]).unwrap(), (0.5, 1.0));
        assert!(matches!(norms(&a, &a[..3]), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn rows_have_orders_after_the_first() {
        let rows = convergence_rows(&[(10, 1.0, 2.0), (20, 0.25, 1.0)]);
        assert_eq!(rows[0].l1_order, None);
        assert_eq!(rows[1].l1_order, Some(2.0));
        assert_eq!(rows[1].linf_order, Some(1.0));
        let csv = convergence_csv(&rows);
        assert_eq!(csv.lines().next(), Some(CONVERGENCE_HEADER));
        assert_eq!(csv.lines().nth(1), Some("10,1,,2,"));
    }
}
