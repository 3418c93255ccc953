use crate::discretization::{primitive_from_conserved, FluxModel};
use crate::error::{Error, Result};
use crate::mesh::{BoundaryKind, Grid1D, GridField};
use crate::problems::{burgers_breaking_time, burgers_characteristics, exact_advection, ProblemSpec, Reference};
use crate::riemann::RiemannSolution;
use crate::time::DtMode;
use crate::weno::SchemeConfig;

use super::config::ResolvedRun;
use super::simulate::simulate_1d;

/// Cells of the fine self-reference per cell of the coarsest grid it serves.
pub const SELF_REFERENCE_FACTOR: usize = 16;

/// Names of the per-point output variables of a 1D model.
pub fn output_names(model: &FluxModel) -> &'static [&'static str] {
    match model {
        FluxModel::Euler1D { .. } => &["rho", "u", "p"],
        FluxModel::Euler2D { .. } => &["rho", "u", "v", "p"],
        _ => &["u"],
    }
}

/// Interior values of a 1D field in output variables (primitive for Euler),
/// variable-major.
pub fn output_columns(field: &GridField, model: &FluxModel) -> Result<Vec<Vec<f64>>> {
    let n = field.n_cells();
    match *model {
        FluxModel::Euler1D { gamma } => {
            let mut cols: Vec<Vec<f64>> = (0..3).map(|_| Vec::with_capacity(n)).collect();
            for j in 0..n as isize {
                let cons = [field.get(0, j), field.get(1, j), field.get(2, j)];
                let prim = primitive_from_conserved(cons, gamma).map_err(|e| match e {
                    Error::NonPhysicalState { rho, p, .. } => Error::NonPhysicalState { cell: j as usize, rho, p },
                    other => other,
                })?;
                for (c, v) in cols.iter_mut().zip(prim) {
                    c.push(v);
                }
            }
            Ok(cols)
        }
        _ => Ok((0..field.n_vars()).map(|v| field.interior(v).to_vec()).collect()),
    }
}

/// Reference solution of a 1D problem at the run's final time.
#[derive(Debug, Clone)]
pub enum ReferenceSolution {
    Advection { spec: ProblemSpec, t: f64, speed: f64 },
    BurgersSmooth { spec: ProblemSpec, t: f64 },
    Riemann { solution: RiemannSolution, x_split: f64, t: f64 },
    /// Point values of a fine-grid run, linearly interpolated.
    Tabulated { grid: Grid1D, columns: Vec<Vec<f64>>, periodic: bool },
}

impl ReferenceSolution {
    /// Build the reference for `run`. `n_max` is the finest grid the
    /// reference will be compared against; self-references that scale with
    /// the grid use it. Returns `None` for problems without a reference.
    pub fn build(run: &ResolvedRun, n_max: usize) -> Result<Option<Self>> {
        let spec = &run.spec;
        let t = run.control.t_final;
        Ok(Some(match spec.reference {
            Reference::None => return Ok(None),
            Reference::ExactShift => {
                let FluxModel::LinearAdvection { speed } = spec.model else {
                    return Err(Error::Config("exact shift needs linear advection".into()));
                };
                Self::Advection {
                    spec: spec.clone(),
                    t,
                    speed,
                }
            }
            Reference::BurgersCharacteristics => {
                let ic = spec.scalar_ic().expect("Burgers problems are scalar");
                if t < burgers_breaking_time(ic, spec.domain.interval()) {
                    Self::BurgersSmooth { spec: spec.clone(), t }
                } else {
                    Self::fine_grid(run, run.scheme, SELF_REFERENCE_FACTOR * n_max)?
                }
            }
            Reference::ExactRiemann1D(rs) => Self::Riemann {
                solution: RiemannSolution::solve(rs.left, rs.right, spec.gamma())?,
                x_split: rs.x_split,
                t,
            },
            Reference::FineGridSelf { n_ref } => {
                let cfg = SchemeConfig::ns7().with_xi(spec.default_xi.0, spec.default_xi.1);
                Self::fine_grid(run, cfg, n_ref)?
            }
        }))
    }

    /// Run the solver itself on `n_ref` cells with plain CFL steps.
    pub fn fine_grid(run: &ResolvedRun, scheme: SchemeConfig, n_ref: usize) -> Result<Self> {
        let mut fine = run.with_n(n_ref).with_scheme(scheme);
        fine.control.dt_mode = DtMode::CflBased;
        let (grid, field, _) = simulate_1d(&fine)?;
        Ok(Self::Tabulated {
            columns: output_columns(&field, &run.spec.model)?,
            grid,
            periodic: run.spec.bc == BoundaryKind::Periodic,
        })
    }

    /// Output variables at `x`.
    pub fn sample(&self, x: f64) -> Result<Vec<f64>> {
        match self {
            Self::Advection { spec, t, speed } => {
                let ic = spec.scalar_ic().expect("advection problems are scalar");
                Ok(vec![exact_advection(ic, x, *t, *speed, spec.domain.interval())])
            }
            Self::BurgersSmooth { spec, t } => {
                let ic = spec.scalar_ic().expect("Burgers problems are scalar");
                Ok(vec![burgers_characteristics(ic, x, *t, spec.domain.interval())?])
            }
            Self::Riemann { solution, x_split, t } => Ok(solution.sample((x - x_split) / t).to_vec()),
            Self::Tabulated { grid, columns, periodic } => Ok(interpolate(grid, columns, *periodic, x)),
        }
    }

    /// Output variables at every cell center of `grid`, variable-major.
    pub fn sample_grid(&self, grid: &Grid1D) -> Result<Vec<Vec<f64>>> {
        let mut cols: Vec<Vec<f64>> = Vec::new();
        for x in grid.cell_centers() {
            let v = self.sample(x)?;
            if cols.is_empty() {
                cols = vec![Vec::with_capacity(grid.n_cells); v.len()];
            }
            for (c, value) in cols.iter_mut().zip(v) {
                c.push(value);
            }
        }
        Ok(cols)
    }
}

fn interpolate(grid: &Grid1D, columns: &[Vec<f64>], periodic: bool, x: f64) -> Vec<f64> {
    let n = grid.n_cells;
    let s = (x - grid.x_min) / grid.dx - 0.5;
    let (i0, i1, w) = if periodic {
        let s = s.rem_euclid(n as f64);
        let i0 = (s.floor() as usize).min(n - 1);
        (i0, (i0 + 1) % n, s - i0 as f64)
    } else if s <= 0.0 {
        (0, 0, 0.0)
    } else if s >= (n - 1) as f64 {
        (n - 1, n - 1, 0.0)
    } else {
        let i0 = s.floor() as usize;
        (i0, i0 + 1, s - i0 as f64)
    };
    columns.iter().map(|c| (1.0 - w) * c[i0] + w * c[i1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_hits_nodes_and_midpoints() {
        let grid = Grid1D::new(0.0, 1.0, 4);
        let cols = vec![vec![0.0, 1.0, 2.0, 3.0]];
        assert_eq!(interpolate(&grid, &cols, false, 0.375), vec![1.0]);
        assert_eq!(interpolate(&grid, &cols, false, 0.5), vec![1.5]);
        assert_eq!(interpolate(&grid, &cols, false, -3.0), vec![0.0]);
        assert_eq!(interpolate(&grid, &cols, false, 0.99), vec![3.0]);
        // between the last and first cell through the periodic seam
        assert_eq!(interpolate(&grid, &cols, true, 0.0), vec![1.5]);
    }
}
