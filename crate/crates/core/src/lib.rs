//! Seventh-order finite-difference WENO solvers for hyperbolic conservation
//! laws in one and two space dimensions.
//!
//! The crate is organised bottom-up:
//!
//! * [`mesh`]: uniform grids, ghost-padded fields and boundary fills;
//! * [`weno`]: candidate fluxes, smoothness indicators and nonlinear weights
//!   for the NS7, BS7 and Z7 schemes;
//! * [`discretization`]: flux models, Lax-Friedrichs splitting and the
//!   semi-discrete operator `L(u)`;
//! * [`time`]: SSP Runge-Kutta steppers and CFL step control;
//! * [`problems`] and [`riemann`]: initial data and reference solutions;
//! * [`harness`]: run orchestration, error norms, convergence tables and
//!   CSV/JSON output.

// negated float comparisons are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod discretization;
pub mod error;
pub mod harness;
pub mod mesh;
pub mod problems;
pub mod riemann;
pub mod time;
pub mod weno;

pub use error::{Error, Result};
pub use mesh::{BoundaryCondition, BoundaryKind, Field, Grid1D, Grid2D, GridField, GridField2D};
pub use weno::{Scheme, SchemeConfig, StencilWindow, WeightSet};
