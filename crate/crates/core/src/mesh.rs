//! Uniform structured grids, ghost-padded conserved-variable storage and
//! boundary fills.
//!
//! Values are point values at cell centers. Every axis carries [`N_GHOST`]
//! ghost cells on each side: an interface reconstruction reads seven flux
//! values, and the mirrored negative-flux window reaches one cell further.

use serde::{Deserialize, Serialize};

/// Ghost-layer depth on every side of every axis.
pub const N_GHOST: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n_cells: usize,
    pub dx: f64,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize) -> Self {
        assert!(n_cells > 0, "grid needs at least one cell");
        assert!(x_max > x_min, "empty interval [{x_min}, {x_max}]");
        Self {
            x_min,
            x_max,
            n_cells,
            dx: (x_max - x_min) / n_cells as f64,
        }
    }

    /// Center of cell `j`; negative or `>= n_cells` indices address ghost cells.
    #[inline]
    pub fn center(&self, j: isize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.dx
    }

    /// Position of the interface between cells `j` and `j + 1`.
    #[inline]
    pub fn interface(&self, j: isize) -> f64 {
        self.x_min + (j as f64 + 1.0) * self.dx
    }

    pub fn cell_centers(&self) -> Vec<f64> {
        (0..self.n_cells as isize).map(|j| self.center(j)).collect()
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }
}

/// Cell centers `x_j = x_min + (j + 1/2) dx`, `j = 0..n_cells`.
pub fn cell_centers(grid: &Grid1D) -> Vec<f64> {
    grid.cell_centers()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub x: Grid1D,
    pub y: Grid1D,
}

impl Grid2D {
    pub fn new(x: Grid1D, y: Grid1D) -> Self {
        Self { x, y }
    }

    pub fn square(min: f64, max: f64, n: usize) -> Self {
        Self::new(Grid1D::new(min, max, n), Grid1D::new(min, max, n))
    }
}

/// Flat storage shared by the 1D and 2D fields, used by the time steppers.
pub trait Field: Clone {
    fn data(&self) -> &[f64];
    fn data_mut(&mut self) -> &mut [f64];

    /// `self += a * other`
    fn axpy(&mut self, a: f64, other: &Self) {
        for (s, o) in self.data_mut().iter_mut().zip(other.data()) {
            *s += a * o;
        }
    }

    fn scale(&mut self, a: f64) {
        for s in self.data_mut() {
            *s *= a;
        }
    }
}

impl Field for Vec<f64> {
    fn data(&self) -> &[f64] {
        self
    }
    fn data_mut(&mut self) -> &mut [f64] {
        self
    }
}

/// Ghost-padded 1D field, variable-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    n_vars: usize,
    n_cells: usize,
    data: Vec<f64>,
}

impl GridField {
    pub fn zeros(n_vars: usize, n_cells: usize) -> Self {
        Self {
            n_vars,
            n_cells,
            data: vec![0.0; n_vars * (n_cells + 2 * N_GHOST)],
        }
    }

    /// Build from per-cell state vectors evaluated on the interior.
    pub fn from_fn(n_vars: usize, grid: &Grid1D, mut f: impl FnMut(f64) -> Vec<f64>) -> Self {
        let mut field = Self::zeros(n_vars, grid.n_cells);
        for j in 0..grid.n_cells {
            let state = f(grid.center(j as isize));
            for (v, s) in state.into_iter().enumerate() {
                field.set(v, j as isize, s);
            }
        }
        field
    }

    /// Like [`GridField::from_fn`] but also evaluates the ghost cells.
    pub fn from_fn_with_ghosts(
        n_vars: usize,
        grid: &Grid1D,
        mut f: impl FnMut(f64) -> Vec<f64>,
    ) -> Self {
        let mut field = Self::zeros(n_vars, grid.n_cells);
        let g = N_GHOST as isize;
        for j in -g..grid.n_cells as isize + g {
            let state = f(grid.center(j));
            for (v, s) in state.into_iter().enumerate() {
                field.set(v, j, s);
            }
        }
        field
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    #[inline]
    pub fn stride(&self) -> usize {
        self.n_cells + 2 * N_GHOST
    }

    /// Full padded line of variable `var`; index 0 is ghost cell `-N_GHOST`.
    pub fn var(&self, var: usize) -> &[f64] {
        let s = self.stride();
        &self.data[var * s..(var + 1) * s]
    }

    pub fn var_mut(&mut self, var: usize) -> &mut [f64] {
        let s = self.stride();
        &mut self.data[var * s..(var + 1) * s]
    }

    pub fn interior(&self, var: usize) -> &[f64] {
        &self.var(var)[N_GHOST..N_GHOST + self.n_cells]
    }

    pub fn interior_mut(&mut self, var: usize) -> &mut [f64] {
        let n = self.n_cells;
        &mut self.var_mut(var)[N_GHOST..N_GHOST + n]
    }

    #[inline]
    pub fn get(&self, var: usize, j: isize) -> f64 {
        self.data[var * self.stride() + (j + N_GHOST as isize) as usize]
    }

    #[inline]
    pub fn set(&mut self, var: usize, j: isize, value: f64) {
        let s = self.stride();
        self.data[var * s + (j + N_GHOST as isize) as usize] = value;
    }

    /// State vector of cell `j`.
    pub fn state(&self, j: isize) -> Vec<f64> {
        (0..self.n_vars).map(|v| self.get(v, j)).collect()
    }

    /// Index of the first non-finite interior value, if any.
    pub fn first_non_finite(&self) -> Option<usize> {
        (0..self.n_vars)
            .flat_map(|v| self.interior(v).iter().enumerate())
            .find(|(_, x)| !x.is_finite())
            .map(|(j, _)| j)
    }
}

impl Field for GridField {
    fn data(&self) -> &[f64] {
        &self.data
    }
    fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

/// Ghost-padded 2D field, stored `[var][iy][ix]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField2D {
    n_vars: usize,
    nx: usize,
    ny: usize,
    data: Vec<f64>,
}

impl GridField2D {
    pub fn zeros(n_vars: usize, nx: usize, ny: usize) -> Self {
        Self {
            n_vars,
            nx,
            ny,
            data: vec![0.0; n_vars * (nx + 2 * N_GHOST) * (ny + 2 * N_GHOST)],
        }
    }

    /// Evaluate `f(x, y)` at every cell center, ghosts included.
    pub fn from_fn_with_ghosts(
        n_vars: usize,
        grid: &Grid2D,
        mut f: impl FnMut(f64, f64) -> Vec<f64>,
    ) -> Self {
        let mut field = Self::zeros(n_vars, grid.x.n_cells, grid.y.n_cells);
        let g = N_GHOST as isize;
        for iy in -g..grid.y.n_cells as isize + g {
            for ix in -g..grid.x.n_cells as isize + g {
                let state = f(grid.x.center(ix), grid.y.center(iy));
                for (v, s) in state.into_iter().enumerate() {
                    field.set(v, ix, iy, s);
                }
            }
        }
        field
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }
    pub fn nx(&self) -> usize {
        self.nx
    }
    pub fn ny(&self) -> usize {
        self.ny
    }

    #[inline]
    pub fn row_stride(&self) -> usize {
        self.nx + 2 * N_GHOST
    }

    #[inline]
    fn var_len(&self) -> usize {
        self.row_stride() * (self.ny + 2 * N_GHOST)
    }

    #[inline]
    fn index(&self, var: usize, ix: isize, iy: isize) -> usize {
        let g = N_GHOST as isize;
        var * self.var_len() + ((iy + g) as usize) * self.row_stride() + (ix + g) as usize
    }

    #[inline]
    pub fn get(&self, var: usize, ix: isize, iy: isize) -> f64 {
        self.data[self.index(var, ix, iy)]
    }

    #[inline]
    pub fn set(&mut self, var: usize, ix: isize, iy: isize, value: f64) {
        let i = self.index(var, ix, iy);
        self.data[i] = value;
    }

    /// Padded row `iy` of variable `var` (length `nx + 2 N_GHOST`).
    pub fn row(&self, var: usize, iy: isize) -> &[f64] {
        let start = self.index(var, -(N_GHOST as isize), iy);
        &self.data[start..start + self.row_stride()]
    }

    /// Copy padded column `ix` of variable `var` into `out`.
    pub fn column_into(&self, var: usize, ix: isize, out: &mut Vec<f64>) {
        out.clear();
        let g = N_GHOST as isize;
        out.extend((-g..self.ny as isize + g).map(|iy| self.get(var, ix, iy)));
    }

    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        for v in 0..self.n_vars {
            for iy in 0..self.ny {
                for ix in 0..self.nx {
                    if !self.get(v, ix as isize, iy as isize).is_finite() {
                        return Some((ix, iy));
                    }
                }
            }
        }
        None
    }
}

impl Field for GridField2D {
    fn data(&self) -> &[f64] {
        &self.data
    }
    fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryKind {
    Periodic,
    /// Zero-order extrapolation of the nearest interior value.
    Transmissive,
    /// Ghost cells hold their initial-condition values for all time.
    DirichletFrozen,
}

/// A boundary kind plus, for frozen Dirichlet, the snapshot of the initial
/// ghost data.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCondition {
    kind: BoundaryKind,
    frozen: Option<Vec<f64>>,
}

impl BoundaryCondition {
    pub fn periodic() -> Self {
        Self {
            kind: BoundaryKind::Periodic,
            frozen: None,
        }
    }

    pub fn transmissive() -> Self {
        Self {
            kind: BoundaryKind::Transmissive,
            frozen: None,
        }
    }

    /// Freeze the ghost values currently stored in `field` (normally the
    /// initial condition evaluated at ghost-cell centers).
    pub fn frozen_from<F: Field>(field: &F) -> Self {
        Self {
            kind: BoundaryKind::DirichletFrozen,
            frozen: Some(field.data().to_vec()),
        }
    }

    pub fn kind(&self) -> BoundaryKind {
        self.kind
    }

    pub fn fill_1d(&self, field: &mut GridField) {
        let n = field.n_cells();
        let stride = field.stride();
        for v in 0..field.n_vars() {
            let frozen = self.frozen.as_ref().map(|f| &f[v * stride..(v + 1) * stride]);
            let line = field.var_mut(v);
            fill_line(line, n, self.kind, frozen);
        }
    }

    pub fn fill_2d(&self, field: &mut GridField2D) {
        let (nx, ny) = (field.nx(), field.ny());
        let g = N_GHOST as isize;
        if let (BoundaryKind::DirichletFrozen, Some(frozen)) = (self.kind, &self.frozen) {
            for v in 0..field.n_vars() {
                for iy in -g..ny as isize + g {
                    for ix in -g..nx as isize + g {
                        let interior = (0..nx as isize).contains(&ix) && (0..ny as isize).contains(&iy);
                        if !interior {
                            let i = field.index(v, ix, iy);
                            field.data[i] = frozen[i];
                        }
                    }
                }
            }
            return;
        }
        let mut buf = Vec::with_capacity(nx.max(ny) + 2 * N_GHOST);
        for v in 0..field.n_vars() {
            // x direction on interior rows
            for iy in 0..ny as isize {
                buf.clear();
                buf.extend_from_slice(field.row(v, iy));
                fill_line(&mut buf, nx, self.kind, None);
                for (k, &val) in buf.iter().enumerate() {
                    field.set(v, k as isize - g, iy, val);
                }
            }
            // y direction on every column, which also fills the corners
            for ix in -g..nx as isize + g {
                field.column_into(v, ix, &mut buf);
                fill_line(&mut buf, ny, self.kind, None);
                for (k, &val) in buf.iter().enumerate() {
                    field.set(v, ix, k as isize - g, val);
                }
            }
        }
    }
}

/// Fill the ghosts of one padded line holding `n` interior values.
fn fill_line(line: &mut [f64], n: usize, kind: BoundaryKind, frozen: Option<&[f64]>) {
    let g = N_GHOST;
    match kind {
        BoundaryKind::Periodic => {
            for k in 0..g {
                let left = (k as isize - g as isize).rem_euclid(n as isize) as usize;
                line[k] = line[g + left];
                line[g + n + k] = line[g + k % n];
            }
        }
        BoundaryKind::Transmissive => {
            let (first, last) = (line[g], line[g + n - 1]);
            line[..g].fill(first);
            line[g + n..].fill(last);
        }
        BoundaryKind::DirichletFrozen => {
            if let Some(frozen) = frozen {
                line[..g].copy_from_slice(&frozen[..g]);
                line[g + n..].copy_from_slice(&frozen[g + n..]);
            }
        }
    }
}

/// Populate all ghost entries of a 1D field per `bc`.
pub fn fill_ghosts(field: &mut GridField, bc: &BoundaryCondition) {
    bc.fill_1d(field);
}

/// Populate all ghost entries of a 2D field per `bc`.
pub fn fill_ghosts_2d(field: &mut GridField2D, bc: &BoundaryCondition) {
    bc.fill_2d(field);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_field(values: &[f64]) -> GridField {
        let mut f = GridField::zeros(1, values.len());
        f.interior_mut(0).copy_from_slice(values);
        f
    }

    #[test]
    fn periodic_wraps_interior() {
        let mut f = line_field(&[1., 2., 3., 4., 5., 6., 7., 8.]);
        fill_ghosts(&mut f, &BoundaryCondition::periodic());
        assert_eq!(&f.var(0)[..4], &[5., 6., 7., 8.]);
        assert_eq!(&f.var(0)[12..], &[1., 2., 3., 4.]);
    }

    #[test]
    fn periodic_short_line_wraps_repeatedly() {
        let mut f = line_field(&[1., 2., 3.]);
        fill_ghosts(&mut f, &BoundaryCondition::periodic());
        for j in -4..7isize {
            assert_eq!(f.get(0, j), f.get(0, j.rem_euclid(3)));
        }
    }

    #[test]
    fn transmissive_extrapolates() {
        let mut f = line_field(&[3., 1., 4., 1., 5.]);
        fill_ghosts(&mut f, &BoundaryCondition::transmissive());
        assert_eq!(&f.var(0)[..4], &[3.; 4]);
        assert_eq!(&f.var(0)[9..], &[5.; 4]);
        assert_eq!(f.interior(0), &[3., 1., 4., 1., 5.]);
    }

    #[test]
    fn frozen_restores_initial_ghosts() {
        let grid = Grid1D::new(0.0, 1.0, 6);
        let init = GridField::from_fn_with_ghosts(1, &grid, |x| vec![x]);
        let bc = BoundaryCondition::frozen_from(&init);
        let mut f = init.clone();
        f.var_mut(0).fill(-1.0);
        fill_ghosts(&mut f, &bc);
        assert_eq!(f.get(0, -4), grid.center(-4));
        assert_eq!(f.get(0, 9), grid.center(9));
        assert_eq!(f.get(0, 2), -1.0);
    }

    #[test]
    fn cell_center_examples() {
        assert_eq!(Grid1D::new(-1.0, 1.0, 4).cell_centers(), vec![-0.75, -0.25, 0.25, 0.75]);
        assert_eq!(Grid1D::new(0.0, 1.0, 2).cell_centers(), vec![0.25, 0.75]);
        let g = Grid1D::new(-5.0, 5.0, 200);
        assert!((g.dx - 0.05).abs() < 1e-15);
        assert!((g.cell_centers()[0] + 4.975).abs() < 1e-12);
    }

    #[test]
    fn periodic_2d_fills_corners() {
        let mut f = GridField2D::zeros(1, 5, 5);
        for iy in 0..5 {
            for ix in 0..5 {
                f.set(0, ix, iy, (10 * iy + ix) as f64);
            }
        }
        fill_ghosts_2d(&mut f, &BoundaryCondition::periodic());
        for iy in -4..9isize {
            for ix in -4..9isize {
                let expect = (10 * iy.rem_euclid(5) + ix.rem_euclid(5)) as f64;
                assert_eq!(f.get(0, ix, iy), expect);
            }
        }
    }

    #[test]
    fn transmissive_2d_copies_edges() {
        let mut f = GridField2D::zeros(1, 3, 4);
        for iy in 0..4 {
            for ix in 0..3 {
                f.set(0, ix, iy, (10 * iy + ix) as f64);
            }
        }
        fill_ghosts_2d(&mut f, &BoundaryCondition::transmissive());
        assert_eq!(f.get(0, -3, 2), 20.0);
        assert_eq!(f.get(0, 6, 1), 12.0);
        assert_eq!(f.get(0, 1, -2), 1.0);
        assert_eq!(f.get(0, -1, 7), 30.0);
    }
}
