//! Flux models, global Lax-Friedrichs splitting and the semi-discrete
//! operator `L(u) = -(fhat[j+1/2] - fhat[j-1/2]) / dx`.
//!
//! Systems are reconstructed component by component. In 2D the operator is
//! the sum of independent 1D sweeps along rows (flux `F`) and columns
//! (flux `G`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mesh::{BoundaryCondition, Grid1D, Grid2D, GridField, GridField2D, N_GHOST};
use crate::weno::{self, SchemeConfig, StencilWindow, WeightSet};

pub const GAMMA_AIR: f64 = 1.4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FluxModel {
    LinearAdvection { speed: f64 },
    Burgers,
    Euler1D { gamma: f64 },
    Euler2D { gamma: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

impl FluxModel {
    pub fn n_vars(&self) -> usize {
        match self {
            FluxModel::LinearAdvection { .. } | FluxModel::Burgers => 1,
            FluxModel::Euler1D { .. } => 3,
            FluxModel::Euler2D { .. } => 4,
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, FluxModel::LinearAdvection { .. })
    }

    pub fn is_euler(&self) -> bool {
        matches!(self, FluxModel::Euler1D { .. } | FluxModel::Euler2D { .. })
    }

    /// Physical flux along `axis`. `Axis::Y` is only meaningful for 2D Euler.
    #[inline]
    pub fn flux(&self, axis: Axis, u: &[f64], out: &mut [f64]) {
        match *self {
            FluxModel::LinearAdvection { speed } => out[0] = speed * u[0],
            FluxModel::Burgers => out[0] = 0.5 * u[0] * u[0],
            FluxModel::Euler1D { gamma } => {
                let [rho, m, e] = [u[0], u[1], u[2]];
                let vel = m / rho;
                let p = (gamma - 1.0) * (e - 0.5 * m * vel);
                out[0] = m;
                out[1] = m * vel + p;
                out[2] = vel * (e + p);
            }
            FluxModel::Euler2D { gamma } => {
                // G is F with the two momentum components exchanged.
                let (n, t) = match axis {
                    Axis::X => (1, 2),
                    Axis::Y => (2, 1),
                };
                let [rho, mn, mt, e] = [u[0], u[n], u[t], u[3]];
                let p = (gamma - 1.0) * (e - 0.5 * (mn * mn + mt * mt) / rho);
                let vn = mn / rho;
                out[0] = mn;
                out[n] = mn * vn + p;
                out[t] = mt * vn;
                out[3] = vn * (e + p);
            }
        }
    }

    /// Largest characteristic speed of state `u` along `axis`, with the
    /// positivity check for Euler states.
    #[inline]
    pub fn wave_speed(&self, axis: Axis, u: &[f64]) -> std::result::Result<f64, (f64, f64)> {
        match *self {
            FluxModel::LinearAdvection { speed } => Ok(speed.abs()),
            FluxModel::Burgers => Ok(u[0].abs()),
            FluxModel::Euler1D { gamma } => {
                let [rho, m, e] = [u[0], u[1], u[2]];
                let p = (gamma - 1.0) * (e - 0.5 * m * m / rho);
                if !(rho > 0.0 && p > 0.0) {
                    return Err((rho, p));
                }
                Ok((m / rho).abs() + (gamma * p / rho).sqrt())
            }
            FluxModel::Euler2D { gamma } => {
                let n = if axis == Axis::X { 1 } else { 2 };
                let rho = u[0];
                let p = (gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / rho);
                if !(rho > 0.0 && p > 0.0) {
                    return Err((rho, p));
                }
                Ok((u[n] / rho).abs() + (gamma * p / rho).sqrt())
            }
        }
    }
}

/// `(rho, u, p) -> (rho, rho u, E)` with `E = p / (gamma - 1) + rho u^2 / 2`.
pub fn conserved_from_primitive(prim: [f64; 3], gamma: f64) -> [f64; 3] {
    let [rho, u, p] = prim;
    [rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u]
}

pub fn primitive_from_conserved(cons: [f64; 3], gamma: f64) -> Result<[f64; 3]> {
    let [rho, m, e] = cons;
    if !(rho > 0.0) {
        return Err(Error::NonPhysicalState { cell: 0, rho, p: f64::NAN });
    }
    let u = m / rho;
    Ok([rho, u, (gamma - 1.0) * (e - 0.5 * m * u)])
}

/// `(rho, u, v, p) -> (rho, rho u, rho v, E)`.
pub fn conserved_from_primitive_2d(prim: [f64; 4], gamma: f64) -> [f64; 4] {
    let [rho, u, v, p] = prim;
    [rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)]
}

pub fn primitive_from_conserved_2d(cons: [f64; 4], gamma: f64) -> Result<[f64; 4]> {
    let [rho, mx, my, e] = cons;
    if !(rho > 0.0) {
        return Err(Error::NonPhysicalState { cell: 0, rho, p: f64::NAN });
    }
    let (u, v) = (mx / rho, my / rho);
    Ok([rho, u, v, (gamma - 1.0) * (e - 0.5 * (mx * u + my * v))])
}

/// Physical x-flux of a conserved Euler state.
pub fn euler_flux(state: &[f64], model: &FluxModel) -> Result<Vec<f64>> {
    if !model.is_euler() {
        return Err(Error::Config(format!("euler_flux called with {model:?}")));
    }
    if !(state[0] > 0.0) {
        return Err(Error::NonPhysicalState { cell: 0, rho: state[0], p: f64::NAN });
    }
    let mut out = vec![0.0; model.n_vars()];
    model.flux(Axis::X, state, &mut out);
    Ok(out)
}

/// Positive and negative parts of a split flux, `f = f_plus + f_minus`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitFluxes {
    pub f_plus: Vec<f64>,
    pub f_minus: Vec<f64>,
}

/// `f+- = (f +- alpha u) / 2`.
pub fn lax_friedrichs_split(f: &[f64], u: &[f64], alpha: f64) -> SplitFluxes {
    let (f_plus, f_minus) = f
        .iter()
        .zip(u)
        .map(|(&f, &u)| (0.5 * (f + alpha * u), 0.5 * (f - alpha * u)))
        .unzip();
    SplitFluxes { f_plus, f_minus }
}

/// Global maximum wave speed over every cell of the padded field.
pub fn max_wave_speed(field: &GridField, model: &FluxModel) -> Result<f64> {
    let g = N_GHOST as isize;
    let mut state = [0.0; 4];
    let mut smax = 0.0f64;
    for j in -g..field.n_cells() as isize + g {
        for v in 0..field.n_vars() {
            state[v] = field.get(v, j);
        }
        let s = model
            .wave_speed(Axis::X, &state[..field.n_vars()])
            .map_err(|(rho, p)| non_physical(j, rho, p))?;
        smax = smax.max(s);
    }
    Ok(smax)
}

/// Per-axis global maximum wave speeds of a 2D field.
pub fn max_wave_speed_2d(field: &GridField2D, model: &FluxModel) -> Result<(f64, f64)> {
    let g = N_GHOST as isize;
    let nv = field.n_vars();
    let mut state = [0.0; 4];
    let (mut sx, mut sy) = (0.0f64, 0.0f64);
    for iy in -g..field.ny() as isize + g {
        for ix in -g..field.nx() as isize + g {
            for v in 0..nv {
                state[v] = field.get(v, ix, iy);
            }
            let err = |(rho, p)| non_physical(iy * field.nx() as isize + ix, rho, p);
            sx = sx.max(model.wave_speed(Axis::X, &state[..nv]).map_err(err)?);
            sy = sy.max(model.wave_speed(Axis::Y, &state[..nv]).map_err(err)?);
        }
    }
    Ok((sx, sy))
}

fn non_physical(cell: isize, rho: f64, p: f64) -> Error {
    Error::NonPhysicalState {
        cell: cell.max(0) as usize,
        rho,
        p,
    }
}

/// Scratch buffers for one 1D line sweep (a 1D field or one 2D row/column).
#[derive(Debug, Default)]
struct LineWork {
    len: usize,
    n_vars: usize,
    /// padded states, variable-major
    u: Vec<f64>,
    fp: Vec<f64>,
    fm: Vec<f64>,
    fhat: Vec<f64>,
}

impl LineWork {
    fn new(n_vars: usize, n: usize) -> Self {
        let len = n + 2 * N_GHOST;
        Self {
            len,
            n_vars,
            u: vec![0.0; n_vars * len],
            fp: vec![0.0; n_vars * len],
            fm: vec![0.0; n_vars * len],
            fhat: vec![0.0; n + 1],
        }
    }

    fn states_mut(&mut self, var: usize) -> &mut [f64] {
        &mut self.u[var * self.len..(var + 1) * self.len]
    }

    /// Split fluxes of the loaded states with the global `alpha`.
    fn split(&mut self, model: &FluxModel, axis: Axis, alpha: f64) {
        let (len, nv) = (self.len, self.n_vars);
        let mut state = [0.0; 4];
        let mut flux = [0.0; 4];
        for p in 0..len {
            for v in 0..nv {
                state[v] = self.u[v * len + p];
            }
            model.flux(axis, &state[..nv], &mut flux[..nv]);
            for v in 0..nv {
                let au = alpha * state[v];
                self.fp[v * len + p] = 0.5 * (flux[v] + au);
                self.fm[v * len + p] = 0.5 * (flux[v] - au);
            }
        }
    }

    /// Flux difference `-(fhat[j+1/2] - fhat[j-1/2]) / dx` of variable `var`
    /// handed to `out(j, value)` for every interior cell.
    fn residual(&mut self, var: usize, cfg: &SchemeConfig, dx: f64, mut out: impl FnMut(usize, f64)) {
        let len = self.len;
        let n = len - 2 * N_GHOST;
        let fp = &self.fp[var * len..(var + 1) * len];
        let fm = &self.fm[var * len..(var + 1) * len];
        // interface i + 1/2 for i = -1..n-1, stored at fhat[i + 1]
        for (k, fh) in self.fhat.iter_mut().enumerate() {
            let plus = StencilWindow::from_slice(&fp[k..k + 7]);
            let mut minus = StencilWindow::from_slice(&fm[k + 1..k + 8]);
            minus.0.reverse();
            *fh = weno::reconstruct_interface(&plus, cfg) + weno::reconstruct_negative(&minus, cfg);
        }
        let inv_dx = 1.0 / dx;
        for j in 0..n {
            out(j, -(self.fhat[j + 1] - self.fhat[j]) * inv_dx);
        }
    }
}

/// Semi-discrete operator for one flux model and scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discretization {
    pub model: FluxModel,
    pub scheme: SchemeConfig,
    /// Multiplier on the global splitting speed (1.0 = plain max speed).
    pub alpha_factor: f64,
}

impl Discretization {
    pub fn new(model: FluxModel, scheme: SchemeConfig) -> Self {
        Self {
            model,
            scheme,
            alpha_factor: 1.0,
        }
    }

    /// Fill ghosts of `field` per `bc`, then evaluate `L(u)` on the interior.
    /// The returned field has zero ghost entries.
    pub fn residual_1d(&self, field: &mut GridField, grid: &Grid1D, bc: &BoundaryCondition) -> Result<GridField> {
        bc.fill_1d(field);
        self.residual_1d_filled(field, grid)
    }

    /// `L(u)` for a field whose ghosts are already populated.
    pub fn residual_1d_filled(&self, field: &GridField, grid: &Grid1D) -> Result<GridField> {
        let alpha = self.alpha_factor * max_wave_speed(field, &self.model)?;
        let nv = field.n_vars();
        let mut work = LineWork::new(nv, field.n_cells());
        for v in 0..nv {
            work.states_mut(v).copy_from_slice(field.var(v));
        }
        work.split(&self.model, Axis::X, alpha);
        let mut out = GridField::zeros(nv, field.n_cells());
        for v in 0..nv {
            let res = out.interior_mut(v);
            work.residual(v, &self.scheme, grid.dx, |j, r| res[j] = r);
        }
        Ok(out)
    }

    pub fn residual_2d(&self, field: &mut GridField2D, grid: &Grid2D, bc: &BoundaryCondition) -> Result<GridField2D> {
        bc.fill_2d(field);
        self.residual_2d_filled(field, grid)
    }

    pub fn residual_2d_filled(&self, field: &GridField2D, grid: &Grid2D) -> Result<GridField2D> {
        let (sx, sy) = max_wave_speed_2d(field, &self.model)?;
        let (ax, ay) = (self.alpha_factor * sx, self.alpha_factor * sy);
        let (nx, ny, nv) = (field.nx(), field.ny(), field.n_vars());
        let mut out = GridField2D::zeros(nv, nx, ny);

        let mut work = LineWork::new(nv, nx);
        for iy in 0..ny as isize {
            for v in 0..nv {
                work.states_mut(v).copy_from_slice(field.row(v, iy));
            }
            work.split(&self.model, Axis::X, ax);
            for v in 0..nv {
                work.residual(v, &self.scheme, grid.x.dx, |ix, r| out.set(v, ix as isize, iy, r));
            }
        }

        let mut work = LineWork::new(nv, ny);
        let mut column = Vec::with_capacity(ny + 2 * N_GHOST);
        for ix in 0..nx as isize {
            for v in 0..nv {
                field.column_into(v, ix, &mut column);
                work.states_mut(v).copy_from_slice(&column);
            }
            work.split(&self.model, Axis::Y, ay);
            for v in 0..nv {
                work.residual(v, &self.scheme, grid.y.dx, |iy, r| {
                    let cur = out.get(v, ix, iy as isize);
                    out.set(v, ix, iy as isize, cur + r);
                });
            }
        }
        Ok(out)
    }

    /// Weights and indicators of the positive-flux reconstruction of
    /// variable `var` at every interface `x[j+1/2]`, `j = -1..n-1`.
    pub fn interface_weights_1d(&self, field: &GridField, grid: &Grid1D, var: usize) -> Result<Vec<(f64, WeightSet)>> {
        let alpha = self.alpha_factor * max_wave_speed(field, &self.model)?;
        let nv = field.n_vars();
        let mut work = LineWork::new(nv, field.n_cells());
        for v in 0..nv {
            work.states_mut(v).copy_from_slice(field.var(v));
        }
        work.split(&self.model, Axis::X, alpha);
        let len = work.len;
        let fp = &work.fp[var * len..(var + 1) * len];
        Ok((0..=field.n_cells())
            .map(|k| {
                let w = StencilWindow::from_slice(&fp[k..k + 7]);
                (grid.interface(k as isize - 1), weno::weights(&w, &self.scheme))
            })
            .collect())
    }
}

/// `L(u)` on a 1D field: fills ghosts per `bc`, then evaluates.
pub fn spatial_operator_1d(
    field: &mut GridField,
    grid: &Grid1D,
    bc: &BoundaryCondition,
    model: &FluxModel,
    cfg: &SchemeConfig,
) -> Result<GridField> {
    Discretization::new(*model, *cfg).residual_1d(field, grid, bc)
}

/// `L(u)` on a 2D field, dimension by dimension.
pub fn spatial_operator_2d(
    field: &mut GridField2D,
    grid: &Grid2D,
    bc: &BoundaryCondition,
    model: &FluxModel,
    cfg: &SchemeConfig,
) -> Result<GridField2D> {
    Discretization::new(*model, *cfg).residual_2d(field, grid, bc)
}
