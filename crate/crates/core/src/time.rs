//! SSP Runge-Kutta time stepping and CFL step control.
//!
//! The steppers work on any [`Field`] and take the operator as a closure
//! `L(&mut u) -> Result<residual>`; the closure may refresh ghost cells of
//! its argument before evaluating.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mesh::Field;

/// Convex coefficients `alpha_{8,k}` of the eight-stage linear SSPRK method.
pub const LSSPRK87_ALPHA: [f64; 8] = [
    2.0 / 15.0,
    2.0 / 7.0,
    2.0 / 9.0,
    4.0 / 15.0,
    0.0,
    4.0 / 45.0,
    0.0,
    1.0 / 315.0,
];

/// Same coefficients over the common denominator 315.
pub const LSSPRK87_ALPHA_NUMERATORS: [u32; 8] = [42, 90, 70, 84, 0, 28, 0, 1];

/// Five-stage fourth-order SSPRK in Shu-Osher form (full-precision
/// Spiteri-Ruuth coefficients).
pub mod ssprk54 {
    pub const A1: f64 = 0.391752226571890;

    pub const S2: [f64; 2] = [0.444370493651235, 0.555629506348765];
    pub const A2: f64 = 0.368410593050371;

    pub const S3: [f64; 2] = [0.620101851488403, 0.379898148511597];
    pub const A3: f64 = 0.251891774271694;

    pub const S4: [f64; 2] = [0.178079954393132, 0.821920045606868];
    pub const A4: f64 = 0.544974750228521;

    /// weights on `u2`, `u3`, `u4`
    pub const S5: [f64; 3] = [0.517231671970585, 0.096059710526147, 0.386708617503268];
    pub const A5_L3: f64 = 0.063692468666290;
    pub const A5_L4: f64 = 0.226007483236906;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrator {
    /// Eight-stage linear SSPRK, seventh order for linear operators.
    Lssprk87,
    /// Five-stage fourth-order nonlinear SSPRK.
    Ssprk54,
}

impl Integrator {
    pub fn name(self) -> &'static str {
        match self {
            Integrator::Lssprk87 => "lssprk87",
            Integrator::Ssprk54 => "ssprk54",
        }
    }

    pub fn step<F, L>(self, u: &mut F, dt: f64, op: L) -> Result<()>
    where
        F: Field,
        L: FnMut(&mut F) -> Result<F>,
    {
        match self {
            Integrator::Lssprk87 => lssprk87_step(u, dt, op),
            Integrator::Ssprk54 => ssprk54_step(u, dt, op),
        }
    }
}

/// One step of the linear SSPRK(8,7):
///
/// ```text
/// u(i) = u(i-1) + dt/2 L(u(i-1)),  i = 1..7
/// u(n+1) = sum_{k<7} alpha_k u(k) + alpha_7 (u(7) + dt/2 L(u(7)))
/// ```
pub fn lssprk87_step<F, L>(u: &mut F, dt: f64, mut op: L) -> Result<()>
where
    F: Field,
    L: FnMut(&mut F) -> Result<F>,
{
    let half = 0.5 * dt;
    let mut stage = u.clone();
    u.scale(LSSPRK87_ALPHA[0]);
    for alpha in &LSSPRK87_ALPHA[1..7] {
        let r = op(&mut stage)?;
        stage.axpy(half, &r);
        if *alpha != 0.0 {
            u.axpy(*alpha, &stage);
        }
    }
    // u(7), then the trailing half step
    for _ in 0..2 {
        let r = op(&mut stage)?;
        stage.axpy(half, &r);
    }
    u.axpy(LSSPRK87_ALPHA[7], &stage);
    Ok(())
}

/// One step of SSPRK(5,4).
pub fn ssprk54_step<F, L>(u: &mut F, dt: f64, mut op: L) -> Result<()>
where
    F: Field,
    L: FnMut(&mut F) -> Result<F>,
{
    use ssprk54::*;
    let mut un = u.clone();

    let l0 = op(&mut un)?;
    let mut u1 = un.clone();
    u1.axpy(A1 * dt, &l0);

    let l1 = op(&mut u1)?;
    let mut u2 = combine(&[(S2[0], &un), (S2[1], &u1)]);
    u2.axpy(A2 * dt, &l1);

    let l2 = op(&mut u2)?;
    let mut u3 = combine(&[(S3[0], &un), (S3[1], &u2)]);
    u3.axpy(A3 * dt, &l2);

    let l3 = op(&mut u3)?;
    let mut u4 = combine(&[(S4[0], &un), (S4[1], &u3)]);
    u4.axpy(A4 * dt, &l3);

    let l4 = op(&mut u4)?;
    let mut next = combine(&[(S5[0], &u2), (S5[1], &u3), (S5[2], &u4)]);
    next.axpy(A5_L3 * dt, &l3);
    next.axpy(A5_L4 * dt, &l4);
    *u = next;
    Ok(())
}

fn combine<F: Field>(terms: &[(f64, &F)]) -> F {
    let mut out = terms[0].1.clone();
    out.scale(terms[0].0);
    for (a, f) in &terms[1..] {
        out.axpy(*a, f);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DtMode {
    /// `dt = cfl dx / S`
    CflBased,
    /// `dt = cfl dx^(7/4) / S`, so that fourth-order time error scales like
    /// `dx^7`.
    SpatialOrderScaled,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepControl {
    pub cfl: f64,
    pub t_final: f64,
    pub dt_mode: DtMode,
}

impl StepControl {
    pub fn new(cfl: f64, t_final: f64, dt_mode: DtMode) -> Self {
        Self { cfl, t_final, dt_mode }
    }

    fn scaled_dx(&self, dx: f64) -> f64 {
        match self.dt_mode {
            DtMode::CflBased => dx,
            DtMode::SpatialOrderScaled => dx.powf(1.75),
        }
    }

    /// Step for a 1D run at time `t`, clipped so the run lands on `t_final`.
    pub fn dt_1d(&self, t: f64, dx: f64, max_speed: f64) -> f64 {
        let dt = self.cfl * self.scaled_dx(dx) / max_speed;
        self.clip(t, dt)
    }

    /// `dt = cfl / (Sx / dx + Sy / dy)` (scaled per `dt_mode`), clipped.
    pub fn dt_2d(&self, t: f64, dx: f64, dy: f64, sx: f64, sy: f64) -> f64 {
        let dt = self.cfl / (sx / self.scaled_dx(dx) + sy / self.scaled_dx(dy));
        self.clip(t, dt)
    }

    pub fn clip(&self, t: f64, dt: f64) -> f64 {
        let remaining = self.t_final - t;
        if dt >= remaining || remaining - dt <= 1e-12 * self.t_final.abs().max(1.0) {
            remaining
        } else {
            dt
        }
    }
}

/// First-order coefficient of the verbatim linear SSPRK(8,7) counted with
/// the last stage as `u(7)` only, i.e. `sum_k k alpha_k / 2`. This equals
/// 629/630; the trailing half-step lifts the true coefficient to exactly 1.
pub fn lssprk87_naive_first_order_sum() -> f64 {
    LSSPRK87_ALPHA
        .iter()
        .enumerate()
        .map(|(k, a)| k as f64 * a / 2.0)
        .sum()
}

/// Coefficients `c_m` of the stability polynomial `R(z) = sum c_m z^m` of
/// the linear SSPRK(8,7), expanded by the binomial theorem.
pub fn lssprk87_amplification_coeffs() -> [f64; 9] {
    // R(z) = sum_{k<7} a_k (1 + z/2)^k + a_7 (1 + z/2)^8
    let mut c = [0.0; 9];
    let binom = |n: u64, k: u64| -> f64 { (1..=k).fold(1.0, |acc, i| acc * (n + 1 - i) as f64 / i as f64) };
    for (k, a) in LSSPRK87_ALPHA.iter().enumerate() {
        let power = if k == 7 { 8 } else { k };
        for m in 0..=power {
            c[m] += a * binom(power as u64, m as u64) * 0.5f64.powi(m as i32);
        }
    }
    c
}
