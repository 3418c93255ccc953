use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;

use crate::discretization::{primitive_from_conserved_2d, Discretization, FluxModel};
use crate::error::{Error, Result};
use crate::mesh::{Grid1D, Grid2D, GridField, GridField2D};
use crate::weno::Scheme;

use super::config::{Emit, ResolvedRun, RunConfig};
use super::norms::norms;
use super::reference::{output_columns, output_names, ReferenceSolution};
use super::simulate::{boundary_for, grid_1d, initial_field_1d, simulate, RunStats, Solution};

/// Shortest round-trip decimal; exponent notation outside `[1e-5, 1e16)`.
pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn push_row(out: &mut String, values: impl IntoIterator<Item = f64>) {
    let mut first = true;
    for v in values {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&fmt_f64(v));
    }
    out.push('\n');
}

/// `x,<vars>[,<vars>_ref]` for a 1D solution.
pub fn solution_csv_1d(
    grid: &Grid1D,
    field: &GridField,
    model: &FluxModel,
    reference: Option<&ReferenceSolution>,
) -> Result<String> {
    let names = output_names(model);
    let cols = output_columns(field, model)?;
    let ref_cols = reference.map(|r| r.sample_grid(grid)).transpose()?;
    let mut header = vec!["x".to_string()];
    header.extend(names.iter().map(|s| s.to_string()));
    if ref_cols.is_some() {
        header.extend(names.iter().map(|s| format!("{s}_ref")));
    }
    let mut out = header.join(",");
    out.push('\n');
    for (j, x) in grid.cell_centers().into_iter().enumerate() {
        let row = std::iter::once(x)
            .chain(cols.iter().map(|c| c[j]))
            .chain(ref_cols.iter().flat_map(|rc| rc.iter().map(move |c| c[j])));
        push_row(&mut out, row);
    }
    Ok(out)
}

/// `x,y,rho` (or `x,y,u` for scalar data), x varying fastest.
pub fn solution_csv_2d(grid: &Grid2D, field: &GridField2D) -> String {
    let mut out = String::from(if field.n_vars() == 1 { "x,y,u\n" } else { "x,y,rho\n" });
    for iy in 0..field.ny() as isize {
        let y = grid.y.center(iy);
        for ix in 0..field.nx() as isize {
            push_row(&mut out, [grid.x.center(ix), y, field.get(0, ix, iy)]);
        }
    }
    out
}

fn discretization(run: &ResolvedRun) -> Discretization {
    Discretization {
        model: run.spec.model,
        scheme: run.scheme,
        alpha_factor: run.alpha_factor,
    }
}

fn global_indicator_name(scheme: Scheme) -> Option<&'static str> {
    match scheme {
        Scheme::Ns7 => Some("zeta"),
        Scheme::Z7 => Some("tau"),
        Scheme::Bs7 => None,
    }
}

/// Per-interface `x,beta0..beta3[,zeta|tau]` of the positive-flux
/// reconstruction of the first variable. Ghosts of `field` must be filled.
pub fn indicators_csv(run: &ResolvedRun, grid: &Grid1D, field: &GridField) -> Result<String> {
    let sets = discretization(run).interface_weights_1d(field, grid, 0)?;
    let global = global_indicator_name(run.scheme.scheme);
    let mut out = String::from("x,beta0,beta1,beta2,beta3");
    if let Some(g) = global {
        write!(out, ",{g}").unwrap();
    }
    out.push('\n');
    for (x, w) in sets {
        let g = global.and(w.global_indicator);
        push_row(&mut out, std::iter::once(x).chain(w.beta).chain(g));
    }
    Ok(out)
}

/// Per-interface `x,omega0..omega3` of the positive-flux reconstruction of
/// the first variable.
pub fn weights_csv(run: &ResolvedRun, grid: &Grid1D, field: &GridField) -> Result<String> {
    let sets = discretization(run).interface_weights_1d(field, grid, 0)?;
    let mut out = String::from("x,omega0,omega1,omega2,omega3\n");
    for (x, w) in sets {
        push_row(&mut out, std::iter::once(x).chain(w.omega));
    }
    Ok(out)
}

/// Every resolved parameter of a run.
pub fn manifest(run: &ResolvedRun, stats: Option<&RunStats>, failure: Option<&Error>) -> serde_json::Value {
    let mut m = json!({
        "problem": run.spec.name,
        "scheme": run.scheme.scheme.name(),
        "n": run.n,
        "cfl": run.control.cfl,
        "dt_mode": run.control.dt_mode,
        "integrator": run.integrator,
        "epsilon": run.scheme.epsilon,
        "xi1": run.scheme.xi1,
        "xi2": run.scheme.xi2,
        "s_exp": run.scheme.s_exp,
        "p_exp": run.scheme.p_exp,
        "tau": run.scheme.tau,
        "alpha_factor": run.alpha_factor,
        "t_final": run.control.t_final,
        "boundary": run.spec.bc,
        "steps": stats.map(|s| s.steps),
        "wall_seconds": stats.map(|s| s.wall_seconds),
        "version": env!("CARGO_PKG_VERSION"),
    });
    if run.spec.is_2d() {
        m["nx"] = json!(run.nx);
        m["ny"] = json!(run.ny);
    }
    if let Some(e) = failure {
        let (t, step) = match e {
            Error::RunFailed { t, step, .. } => (Some(*t), Some(*step)),
            _ => (None, None),
        };
        m["failure"] = json!({ "t": t, "step": step, "message": e.to_string() });
    }
    m
}

/// Outcome of [`run`].
#[derive(Debug, Clone)]
pub struct RunReport {
    pub run: ResolvedRun,
    pub solution: Solution,
    pub stats: RunStats,
    /// `(L1, Linf)` of the first variable against the reference, when one exists.
    pub errors: Option<(f64, f64)>,
    pub files: Vec<PathBuf>,
}

fn write(dir: &Path, name: &str, contents: &str, files: &mut Vec<PathBuf>) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents)?;
    files.push(path);
    Ok(())
}

fn write_json(dir: &Path, name: &str, value: &serde_json::Value, files: &mut Vec<PathBuf>) -> Result<()> {
    write(dir, name, &(serde_json::to_string_pretty(value)? + "\n"), files)
}

/// Resolve, simulate and write artifacts into `config.output_dir`. The
/// manifest is written even when the run fails.
pub fn run(config: &RunConfig) -> Result<RunReport> {
    let resolved = config.resolve()?;
    let dir = resolved.output_dir.clone();
    fs::create_dir_all(&dir)?;
    let mut files = Vec::new();
    let emits = |e: Emit| resolved.emit.contains(&e);

    if emits(Emit::Indicators) && !resolved.spec.is_2d() {
        let grid = grid_1d(&resolved.spec, resolved.n);
        let mut field = initial_field_1d(&resolved.spec, &grid);
        boundary_for(resolved.spec.bc, &field).fill_1d(&mut field);
        write(&dir, "indicators.csv", &indicators_csv(&resolved, &grid, &field)?, &mut files)?;
    }

    let (solution, stats) = match simulate(&resolved) {
        Ok(ok) => ok,
        Err(e) => {
            write_json(&dir, "manifest.json", &manifest(&resolved, None, Some(&e)), &mut files)?;
            return Err(e);
        }
    };

    let mut errors = None;
    match &solution {
        Solution::OneD { grid, field } => {
            let reference = ReferenceSolution::build(&resolved, resolved.n)?;
            if let Some(r) = &reference {
                let exact = r.sample_grid(grid)?;
                let numeric = output_columns(field, &resolved.spec.model)?;
                errors = Some(norms(&numeric[0], &exact[0])?);
            }
            if emits(Emit::Solution) {
                let csv = solution_csv_1d(grid, field, &resolved.spec.model, reference.as_ref())?;
                write(&dir, "solution.csv", &csv, &mut files)?;
            }
            if emits(Emit::Weights) {
                write(&dir, "weights.csv", &weights_csv(&resolved, grid, field)?, &mut files)?;
            }
        }
        Solution::TwoD { grid, field } => {
            if emits(Emit::Solution) {
                write(&dir, "solution.csv", &solution_csv_2d(grid, field), &mut files)?;
            }
        }
    }
    if emits(Emit::Errors) {
        let value = match errors {
            Some((l1, linf)) => json!({ "l1": l1, "linf": linf, "variable": output_names(&resolved.spec.model)[0] }),
            None => json!({ "l1": null, "linf": null }),
        };
        write_json(&dir, "errors.json", &value, &mut files)?;
    }
    write_json(&dir, "manifest.json", &manifest(&resolved, Some(&stats), None), &mut files)?;
    Ok(RunReport {
        run: resolved,
        solution,
        stats,
        errors,
        files,
    })
}

/// Run every config and merge runs sharing `(problem, n)` into
/// `compare_<problem>_n<N>.csv` under `out_dir`, one column per variable and
/// scheme plus reference columns.
pub fn compare(configs: &[RunConfig], out_dir: &Path) -> Result<Vec<PathBuf>> {
    let mut groups: BTreeMap<(String, usize, usize), Vec<ResolvedRun>> = BTreeMap::new();
    for c in configs {
        let r = c.resolve()?;
        groups.entry((r.spec.name.clone(), r.nx, r.ny)).or_default().push(r);
    }
    fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    for ((problem, nx, ny), runs) in groups {
        let t_final = runs[0].control.t_final;
        if runs.iter().any(|r| r.control.t_final != t_final) {
            return Err(Error::GridMismatch(format!("runs of `{problem}` end at different times")));
        }
        let mut labels: Vec<String> = Vec::new();
        for r in &runs {
            let base = r.scheme.scheme.name().to_string();
            let count = labels.iter().filter(|l| l.split('_').next() == Some(&base)).count();
            labels.push(if count == 0 { base } else { format!("{base}_{}", count + 1) });
        }
        let solutions = runs.iter().map(|r| simulate(r).map(|s| s.0)).collect::<Result<Vec<_>>>()?;
        let csv = if runs[0].spec.is_2d() {
            merge_2d(&solutions, &labels)
        } else {
            let reference = ReferenceSolution::build(&runs[0], nx)?;
            merge_1d(&solutions, &labels, &runs[0].spec.model, reference.as_ref())?
        };
        let name = if runs[0].spec.is_2d() && nx != ny {
            format!("compare_{problem}_n{nx}x{ny}.csv")
        } else {
            format!("compare_{problem}_n{nx}.csv")
        };
        write(out_dir, &name, &csv, &mut files)?;
    }
    Ok(files)
}

fn merge_1d(
    solutions: &[Solution],
    labels: &[String],
    model: &FluxModel,
    reference: Option<&ReferenceSolution>,
) -> Result<String> {
    let names = output_names(model);
    let mut grid = None;
    let mut all_cols = Vec::new();
    for s in solutions {
        let Solution::OneD { grid: g, field } = s else {
            return Err(Error::GridMismatch("mixed 1D and 2D runs".into()));
        };
        grid = Some(*g);
        all_cols.push(output_columns(field, model)?);
    }
    let grid = grid.expect("at least one run");
    let ref_cols = reference.map(|r| r.sample_grid(&grid)).transpose()?;
    let mut header = vec!["x".to_string()];
    for name in names {
        header.extend(labels.iter().map(|l| format!("{name}_{l}")));
        if ref_cols.is_some() {
            header.push(format!("{name}_ref"));
        }
    }
    let mut out = header.join(",");
    out.push('\n');
    for (j, x) in grid.cell_centers().into_iter().enumerate() {
        let mut row = vec![x];
        for v in 0..names.len() {
            row.extend(all_cols.iter().map(|c| c[v][j]));
            if let Some(rc) = &ref_cols {
                row.push(rc[v][j]);
            }
        }
        push_row(&mut out, row);
    }
    Ok(out)
}

fn merge_2d(solutions: &[Solution], labels: &[String]) -> String {
    let fields: Vec<(&Grid2D, &GridField2D)> = solutions
        .iter()
        .filter_map(|s| match s {
            Solution::TwoD { grid, field } => Some((grid, field)),
            _ => None,
        })
        .collect();
    let (grid, first) = fields[0];
    let var = if first.n_vars() == 1 { "u" } else { "rho" };
    let mut out = String::from("x,y");
    for l in labels {
        write!(out, ",{var}_{l}").unwrap();
    }
    out.push('\n');
    for iy in 0..first.ny() as isize {
        for ix in 0..first.nx() as isize {
            let row = [grid.x.center(ix), grid.y.center(iy)]
                .into_iter()
                .chain(fields.iter().map(|(_, f)| f.get(0, ix, iy)));
            push_row(&mut out, row);
        }
    }
    out
}

/// Smallest density and pressure over the interior of a 2D Euler field.
pub fn min_density_pressure_2d(field: &GridField2D, gamma: f64) -> Result<(f64, f64)> {
    let mut mins = (f64::INFINITY, f64::INFINITY);
    for iy in 0..field.ny() as isize {
        for ix in 0..field.nx() as isize {
            let cons = [field.get(0, ix, iy), field.get(1, ix, iy), field.get(2, ix, iy), field.get(3, ix, iy)];
            let prim = primitive_from_conserved_2d(cons, gamma)?;
            mins = (mins.0.min(prim[0]), mins.1.min(prim[3]));
        }
    }
    Ok(mins)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for v in [0.0, 1.0, -2.5, 0.1, 1e-12, 2.0637e-12, 123456.789, 1e300, -3e-7] {
            let s = fmt_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(fmt_f64(1e-12), "1e-12");
        assert_eq!(fmt_f64(0.5), "0.5");
    }
}
