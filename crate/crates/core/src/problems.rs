//! Registered test problems: initial data, boundary treatment, final times
//! and the recipe for each reference solution.

use std::f64::consts::PI;

use crate::discretization::{conserved_from_primitive, conserved_from_primitive_2d, FluxModel, GAMMA_AIR};
use crate::error::{Error, Result};
use crate::mesh::BoundaryKind;
use crate::riemann::RiemannState;

pub const PROBLEM_NAMES: [&str; 11] = [
    "advect_jump",
    "advect_sine",
    "advect_cp1",
    "advect_cp2",
    "advect_shapes",
    "burgers_steady",
    "burgers_moving",
    "sod_modified",
    "lax",
    "shock_entropy",
    "riemann2d",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Interval { min: f64, max: f64 },
    Rectangle { x: (f64, f64), y: (f64, f64) },
}

impl Domain {
    pub fn interval(&self) -> (f64, f64) {
        match *self {
            Domain::Interval { min, max } => (min, max),
            Domain::Rectangle { x, .. } => x,
        }
    }
}

/// Pointwise initial data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialCondition {
    /// `-sin(pi x) - x^3 / 2`, plus 1 on `[0, 1)`.
    AdvectJump,
    /// `sin(pi x)`
    Sine,
    /// `sin(pi x - sin(pi x) / pi)`
    FirstCriticalPoint,
    /// `sin(pi x)^3`
    SecondCriticalPoint,
    /// Gaussian, square wave, triangle and half ellipse.
    Shapes,
    /// `-sin(pi x)`
    NegativeSine,
    /// `1/2 + sin(pi x)`
    HalfPlusSine,
    Riemann(RiemannState),
    /// Mach 3 shock running into `rho = 1 + amplitude sin(wavenumber x)`.
    ShockEntropy { amplitude: f64, wavenumber: f64 },
    /// Four-quadrant 2D Riemann data split at `x = y = 0.8`.
    Quadrants,
}

/// How the reference solution of a problem is produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reference {
    /// Exact translation of the periodic initial data.
    ExactShift,
    /// Characteristics before shock formation, refined self-reference after.
    BurgersCharacteristics,
    ExactRiemann1D(RiemannState),
    /// Same solver on a grid with `n_ref` cells.
    FineGridSelf { n_ref: usize },
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub name: String,
    pub model: FluxModel,
    pub domain: Domain,
    pub bc: BoundaryKind,
    pub t_final: f64,
    pub ic: InitialCondition,
    pub reference: Reference,
    pub default_n: usize,
    /// Default `(xi1, xi2)` of the NS7 indicators for this problem class.
    pub default_xi: (f64, f64),
}

impl ProblemSpec {
    pub fn is_2d(&self) -> bool {
        matches!(self.domain, Domain::Rectangle { .. })
    }

    pub fn n_vars(&self) -> usize {
        self.model.n_vars()
    }

    pub fn gamma(&self) -> f64 {
        match self.model {
            FluxModel::Euler1D { gamma } | FluxModel::Euler2D { gamma } => gamma,
            _ => GAMMA_AIR,
        }
    }

    /// Scalar initial data; `None` for systems.
    pub fn scalar_ic(&self) -> Option<impl Fn(f64) -> f64 + '_> {
        (self.n_vars() == 1).then_some(move |x: f64| scalar_ic_value(&self.ic, x))
    }
}

const XI_LINEAR: (f64, f64) = (0.1, 1.0);
const XI_BURGERS: (f64, f64) = (0.1, 0.3);
const XI_EULER: (f64, f64) = (0.3, 0.3);

pub const SOD_MODIFIED: RiemannState = RiemannState {
    left: [1.0, 0.75, 1.0],
    right: [0.125, 0.0, 0.1],
    x_split: 0.5,
};

pub const LAX: RiemannState = RiemannState {
    left: [0.445, 0.698, 3.528],
    right: [0.5, 0.0, 0.571],
    x_split: 0.0,
};

/// Post-shock state of the shock-entropy problem.
pub const SHOCK_ENTROPY_LEFT: [f64; 3] = [3.857143, 2.629369, 10.33333];

/// Quadrant states `(rho, u, v, p)` of the 2D Riemann problem, indexed
/// `[upper-right, upper-left, lower-left, lower-right]`.
pub const QUADRANTS: [[f64; 4]; 4] = [
    [1.5, 0.0, 0.0, 1.5],
    [0.5323, 1.206, 0.0, 0.3],
    [0.138, 1.206, 1.206, 0.029],
    [0.5323, 0.0, 1.206, 0.3],
];

/// Look up a registered problem.
pub fn make_problem(name: &str) -> Result<ProblemSpec> {
    let advection = FluxModel::LinearAdvection { speed: 1.0 };
    let euler = FluxModel::Euler1D { gamma: GAMMA_AIR };
    let unit = Domain::Interval { min: -1.0, max: 1.0 };
    let linear = |ic, t_final, default_n| ProblemSpec {
        name: name.to_string(),
        model: advection,
        domain: unit,
        bc: BoundaryKind::Periodic,
        t_final,
        ic,
        reference: Reference::ExactShift,
        default_n,
        default_xi: XI_LINEAR,
    };
    let burgers = |ic, t_final| ProblemSpec {
        name: name.to_string(),
        model: FluxModel::Burgers,
        domain: unit,
        bc: BoundaryKind::Periodic,
        t_final,
        ic,
        reference: Reference::BurgersCharacteristics,
        default_n: 200,
        default_xi: XI_BURGERS,
    };
    let tube = |rs: RiemannState, min, max, t_final| ProblemSpec {
        name: name.to_string(),
        model: euler,
        domain: Domain::Interval { min, max },
        bc: BoundaryKind::Transmissive,
        t_final,
        ic: InitialCondition::Riemann(rs),
        reference: Reference::ExactRiemann1D(rs),
        default_n: 200,
        default_xi: XI_EULER,
    };
    Ok(match name {
        "advect_jump" => linear(InitialCondition::AdvectJump, 8.0, 200),
        "advect_sine" => linear(InitialCondition::Sine, 2.0, 160),
        "advect_cp1" => linear(InitialCondition::FirstCriticalPoint, 2.0, 160),
        "advect_cp2" => linear(InitialCondition::SecondCriticalPoint, 2.0, 160),
        "advect_shapes" => linear(InitialCondition::Shapes, 8.0, 200),
        "burgers_steady" => burgers(InitialCondition::NegativeSine, 1.5),
        "burgers_moving" => burgers(InitialCondition::HalfPlusSine, 0.55),
        "sod_modified" => tube(SOD_MODIFIED, 0.0, 1.0, 0.2),
        "lax" => tube(LAX, -5.0, 5.0, 1.3),
        "shock_entropy" => ProblemSpec {
            name: name.to_string(),
            model: euler,
            domain: Domain::Interval { min: -5.0, max: 5.0 },
            bc: BoundaryKind::Transmissive,
            t_final: 1.8,
            ic: InitialCondition::ShockEntropy {
                amplitude: 0.2,
                wavenumber: 5.0,
            },
            reference: Reference::FineGridSelf { n_ref: 3200 },
            default_n: 200,
            default_xi: XI_EULER,
        },
        "riemann2d" => ProblemSpec {
            name: name.to_string(),
            model: FluxModel::Euler2D { gamma: GAMMA_AIR },
            domain: Domain::Rectangle {
                x: (0.0, 1.0),
                y: (0.0, 1.0),
            },
            bc: BoundaryKind::DirichletFrozen,
            t_final: 0.8,
            ic: InitialCondition::Quadrants,
            reference: Reference::None,
            default_n: 400,
            default_xi: XI_EULER,
        },
        other => return Err(Error::UnknownProblem(other.to_string())),
    })
}

fn gaussian(x: f64, z: f64, beta: f64) -> f64 {
    (-beta * (x - z) * (x - z)).exp()
}

fn ellipse(x: f64, a: f64, alpha: f64) -> f64 {
    (1.0 - alpha * alpha * (x - a) * (x - a)).max(0.0).sqrt()
}

fn shapes(x: f64) -> f64 {
    let (a, z, delta, alpha) = (0.5, -0.7, 0.005, 10.0);
    let beta = 2f64.ln() / (36.0 * delta * delta);
    if (-0.8..=-0.6).contains(&x) {
        (gaussian(x, z - delta, beta) + gaussian(x, z + delta, beta) + 4.0 * gaussian(x, z, beta)) / 6.0
    } else if (-0.4..=-0.2).contains(&x) {
        1.0
    } else if (0.0..=0.2).contains(&x) {
        1.0 - (10.0 * (x - 0.1)).abs()
    } else if (0.4..=0.6).contains(&x) {
        (ellipse(x, a - delta, alpha) + ellipse(x, a + delta, alpha) + 4.0 * ellipse(x, a, alpha)) / 6.0
    } else {
        0.0
    }
}

fn scalar_ic_value(ic: &InitialCondition, x: f64) -> f64 {
    match *ic {
        InitialCondition::AdvectJump => {
            let base = -(PI * x).sin() - 0.5 * x * x * x;
            if x >= 0.0 {
                base + 1.0
            } else {
                base
            }
        }
        InitialCondition::Sine => (PI * x).sin(),
        InitialCondition::FirstCriticalPoint => (PI * x - (PI * x).sin() / PI).sin(),
        InitialCondition::SecondCriticalPoint => (PI * x).sin().powi(3),
        InitialCondition::Shapes => shapes(x),
        InitialCondition::NegativeSine => -(PI * x).sin(),
        InitialCondition::HalfPlusSine => 0.5 + (PI * x).sin(),
        _ => f64::NAN,
    }
}

/// Initial state at `x` in conserved variables (scalar problems return a
/// single component).
pub fn evaluate_ic_pointwise(spec: &ProblemSpec, x: f64) -> Vec<f64> {
    let gamma = spec.gamma();
    match spec.ic {
        InitialCondition::Riemann(rs) => {
            let prim = if x < rs.x_split { rs.left } else { rs.right };
            conserved_from_primitive(prim, gamma).to_vec()
        }
        InitialCondition::ShockEntropy { amplitude, wavenumber } => {
            let prim = if x < -4.0 {
                SHOCK_ENTROPY_LEFT
            } else {
                [1.0 + amplitude * (wavenumber * x).sin(), 0.0, 1.0]
            };
            conserved_from_primitive(prim, gamma).to_vec()
        }
        InitialCondition::Quadrants => conserved_from_primitive_2d(quadrant_state(x, 0.0), gamma).to_vec(),
        ref ic => vec![scalar_ic_value(ic, x)],
    }
}

/// Primitive `(rho, u, v, p)` of the 2D quadrant data at `(x, y)`.
pub fn quadrant_state(x: f64, y: f64) -> [f64; 4] {
    match (x >= 0.8, y >= 0.8) {
        (true, true) => QUADRANTS[0],
        (false, true) => QUADRANTS[1],
        (false, false) => QUADRANTS[2],
        (true, false) => QUADRANTS[3],
    }
}

/// Initial state at `(x, y)` in conserved variables.
pub fn evaluate_ic_2d(spec: &ProblemSpec, x: f64, y: f64) -> Vec<f64> {
    match spec.ic {
        InitialCondition::Quadrants => conserved_from_primitive_2d(quadrant_state(x, y), spec.gamma()).to_vec(),
        _ => evaluate_ic_pointwise(spec, x),
    }
}

/// Exact solution of `u_t + a u_x = 0` on a periodic interval.
pub fn exact_advection(ic: impl Fn(f64) -> f64, x: f64, t: f64, speed: f64, domain: (f64, f64)) -> f64 {
    let (lo, hi) = domain;
    let len = hi - lo;
    let xi = lo + (x - speed * t - lo).rem_euclid(len);
    ic(xi)
}

/// Shock-formation time `1 / max(-u0')` of Burgers' equation, estimated on
/// a dense sampling of the interval.
pub fn burgers_breaking_time(ic: impl Fn(f64) -> f64, domain: (f64, f64)) -> f64 {
    let (lo, hi) = domain;
    let n = 20_000;
    let h = (hi - lo) / n as f64;
    let steepest = (0..n)
        .map(|i| {
            let x = lo + (i as f64 + 0.5) * h;
            -(ic(x + 0.5 * h) - ic(x - 0.5 * h)) / h
        })
        .fold(0.0f64, f64::max);
    if steepest > 0.0 {
        1.0 / steepest
    } else {
        f64::INFINITY
    }
}

/// Smooth Burgers solution `u(x, t) = u0(xi)` with `x = xi + t u0(xi)`,
/// valid before shock formation. `ic` must be periodic on `domain`.
pub fn burgers_characteristics(ic: impl Fn(f64) -> f64, x: f64, t: f64, domain: (f64, f64)) -> Result<f64> {
    if t == 0.0 {
        return Ok(ic(x));
    }
    let (lo, hi) = domain;
    let bound = (0..2001)
        .map(|i| ic(lo + (hi - lo) * i as f64 / 2000.0).abs())
        .fold(0.0f64, f64::max)
        * 1.01
        + 1e-12;
    let g = |xi: f64| xi + t * ic(xi) - x;
    let (mut a, mut b) = (x - t * bound, x + t * bound);
    let (mut ga, gb) = (g(a), g(b));
    if ga > 0.0 || gb < 0.0 {
        return Err(Error::NoConvergence { x, iterations: 0 });
    }
    for _ in 0..100 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let gm = g(mid);
        if (gm < 0.0) == (ga < 0.0) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    let xi = 0.5 * (a + b);
    if g(xi).abs() > 1e-12 * (1.0 + x.abs()) {
        return Err(Error::NoConvergence { x, iterations: 100 });
    }
    Ok(ic(xi))
}
