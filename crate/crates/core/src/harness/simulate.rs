use std::time::Instant;

use crate::discretization::{max_wave_speed, max_wave_speed_2d, Discretization};
use crate::error::{Error, Result};
use crate::mesh::{BoundaryCondition, BoundaryKind, Field, Grid1D, Grid2D, GridField, GridField2D};
use crate::problems::{evaluate_ic_2d, evaluate_ic_pointwise, Domain, ProblemSpec};

use super::config::ResolvedRun;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunStats {
    pub steps: usize,
    pub t: f64,
    pub wall_seconds: f64,
}

/// Final state of a run.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    OneD { grid: Grid1D, field: GridField },
    TwoD { grid: Grid2D, field: GridField2D },
}

pub fn grid_1d(spec: &ProblemSpec, n: usize) -> Grid1D {
    let (lo, hi) = spec.domain.interval();
    Grid1D::new(lo, hi, n)
}

pub fn grid_2d(spec: &ProblemSpec, nx: usize, ny: usize) -> Grid2D {
    match spec.domain {
        Domain::Rectangle { x, y } => Grid2D::new(Grid1D::new(x.0, x.1, nx), Grid1D::new(y.0, y.1, ny)),
        Domain::Interval { min, max } => Grid2D::new(Grid1D::new(min, max, nx), Grid1D::new(min, max, ny)),
    }
}

/// Initial data on the interior and the ghost layer.
pub fn initial_field_1d(spec: &ProblemSpec, grid: &Grid1D) -> GridField {
    GridField::from_fn_with_ghosts(spec.n_vars(), grid, |x| evaluate_ic_pointwise(spec, x))
}

pub fn initial_field_2d(spec: &ProblemSpec, grid: &Grid2D) -> GridField2D {
    GridField2D::from_fn_with_ghosts(spec.n_vars(), grid, |x, y| evaluate_ic_2d(spec, x, y))
}

/// Boundary condition of `kind`; frozen data is taken from `initial`.
pub fn boundary_for<F: Field>(kind: BoundaryKind, initial: &F) -> BoundaryCondition {
    match kind {
        BoundaryKind::Periodic => BoundaryCondition::periodic(),
        BoundaryKind::Transmissive => BoundaryCondition::transmissive(),
        BoundaryKind::DirichletFrozen => BoundaryCondition::frozen_from(initial),
    }
}

fn failed(t: f64, step: usize) -> impl FnOnce(Error) -> Error {
    move |e| Error::RunFailed {
        t,
        step,
        source: Box::new(e),
    }
}

fn discretization(run: &ResolvedRun) -> Discretization {
    Discretization {
        model: run.spec.model,
        scheme: run.scheme,
        alpha_factor: run.alpha_factor,
    }
}

/// Advance a 1D field from `t = 0` to the configured final time.
pub fn evolve_1d(run: &ResolvedRun, grid: &Grid1D, field: &mut GridField) -> Result<RunStats> {
    let start = Instant::now();
    let disc = discretization(run);
    let bc = boundary_for(run.spec.bc, field);
    let control = run.control;
    let (mut t, mut steps) = (0.0, 0);
    while t < control.t_final {
        bc.fill_1d(field);
        let speed = max_wave_speed(field, &disc.model).map_err(failed(t, steps))?;
        let dt = control.dt_1d(t, grid.dx, speed);
        run.integrator
            .step(field, dt, |u| disc.residual_1d(u, grid, &bc))
            .map_err(failed(t, steps))?;
        steps += 1;
        t = if dt >= control.t_final - t { control.t_final } else { t + dt };
        if let Some(cell) = field.first_non_finite() {
            return Err(failed(t, steps)(Error::NonFinite { cell }));
        }
    }
    bc.fill_1d(field);
    Ok(RunStats {
        steps,
        t,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn evolve_2d(run: &ResolvedRun, grid: &Grid2D, field: &mut GridField2D) -> Result<RunStats> {
    let start = Instant::now();
    let disc = discretization(run);
    let bc = boundary_for(run.spec.bc, field);
    let control = run.control;
    let (mut t, mut steps) = (0.0, 0);
    while t < control.t_final {
        bc.fill_2d(field);
        let (sx, sy) = max_wave_speed_2d(field, &disc.model).map_err(failed(t, steps))?;
        let dt = control.dt_2d(t, grid.x.dx, grid.y.dx, sx, sy);
        run.integrator
            .step(field, dt, |u| disc.residual_2d(u, grid, &bc))
            .map_err(failed(t, steps))?;
        steps += 1;
        t = if dt >= control.t_final - t { control.t_final } else { t + dt };
        if let Some((ix, iy)) = field.first_non_finite() {
            return Err(failed(t, steps)(Error::NonFinite { cell: iy * field.nx() + ix }));
        }
    }
    bc.fill_2d(field);
    Ok(RunStats {
        steps,
        t,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Set up the initial data of `run` and evolve it.
pub fn simulate(run: &ResolvedRun) -> Result<(Solution, RunStats)> {
    if run.spec.is_2d() {
        let grid = grid_2d(&run.spec, run.nx, run.ny);
        let mut field = initial_field_2d(&run.spec, &grid);
        let stats = evolve_2d(run, &grid, &mut field)?;
        Ok((Solution::TwoD { grid, field }, stats))
    } else {
        let grid = grid_1d(&run.spec, run.n);
        let mut field = initial_field_1d(&run.spec, &grid);
        let stats = evolve_1d(run, &grid, &mut field)?;
        Ok((Solution::OneD { grid, field }, stats))
    }
}

pub fn simulate_1d(run: &ResolvedRun) -> Result<(Grid1D, GridField, RunStats)> {
    match simulate(run)? {
        (Solution::OneD { grid, field }, stats) => Ok((grid, field, stats)),
        _ => Err(Error::Config(format!("`{}` is not a 1D problem", run.spec.name))),
    }
}

pub fn simulate_2d(run: &ResolvedRun) -> Result<(Grid2D, GridField2D, RunStats)> {
    match simulate(run)? {
        (Solution::TwoD { grid, field }, stats) => Ok((grid, field, stats)),
        _ => Err(Error::Config(format!("`{}` is not a 2D problem", run.spec.name))),
    }
}
