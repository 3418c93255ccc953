//! Seventh-order WENO interface reconstruction.
//!
//! A 7-point window `(f[j-3], ..., f[j+3])` is split into four 4-point
//! sub-stencils `S_k = {j+k-3, ..., j+k}`. Each sub-stencil yields a cubic
//! candidate flux at `x[j+1/2]`, and the candidates are blended by nonlinear
//! weights that fall back to the ideal weights `d_k` where the data is smooth.
//!
//! Three weightings are provided:
//!
//! * [`Scheme::Ns7`]: L1-type indicators built from fourth-order accurate
//!   undivided differences, `beta_k = xi1 |L1| + xi2 |L2| + |L3|`, with the
//!   global indicator `zeta = |beta_0 - beta_3|^2` and
//!   `alpha_k = d_k (1 + (zeta / (beta_k + eps)^2)^s)`.
//! * [`Scheme::Bs7`]: the classic quadratic-form indicators with
//!   `alpha_k = d_k / (eps + beta_k)^p`.
//! * [`Scheme::Z7`]: the quadratic-form indicators with a global `tau` and
//!   `alpha_k = d_k (1 + (tau / (beta_k + eps))^p)`.

use serde::{Deserialize, Serialize};

/// Ideal (linear) weights reproducing the 7-point upwind-biased flux.
pub const IDEAL_WEIGHTS: [f64; 4] = [1.0 / 35.0, 12.0 / 35.0, 18.0 / 35.0, 4.0 / 35.0];

/// Lagrange coefficients of the four cubic candidate fluxes, row `k` applied
/// to `(f[j+k-3], ..., f[j+k])`.
pub const CANDIDATE_COEFFS: [[f64; 4]; 4] = [
    [-1.0 / 4.0, 13.0 / 12.0, -23.0 / 12.0, 25.0 / 12.0],
    [1.0 / 12.0, -5.0 / 12.0, 13.0 / 12.0, 1.0 / 4.0],
    [-1.0 / 12.0, 7.0 / 12.0, 7.0 / 12.0, -1.0 / 12.0],
    [1.0 / 4.0, 13.0 / 12.0, -5.0 / 12.0, 1.0 / 12.0],
];

/// Undivided-difference coefficients `[k][s - 1]` on sub-stencil `k`;
/// `L_{s,k} f = dx^s f^(s)(x[j+1/2]) + O(dx^4)`.
pub const UNDIVIDED_COEFFS: [[[f64; 4]; 3]; 4] = [
    [
        [-23.0 / 24.0, 93.0 / 24.0, -141.0 / 24.0, 71.0 / 24.0],
        [-3.0 / 2.0, 11.0 / 2.0, -13.0 / 2.0, 5.0 / 2.0],
        [-1.0, 3.0, -3.0, 1.0],
    ],
    [
        [1.0 / 24.0, -3.0 / 24.0, -21.0 / 24.0, 23.0 / 24.0],
        [-1.0 / 2.0, 5.0 / 2.0, -7.0 / 2.0, 3.0 / 2.0],
        [-1.0, 3.0, -3.0, 1.0],
    ],
    [
        [1.0 / 24.0, -27.0 / 24.0, 27.0 / 24.0, -1.0 / 24.0],
        [1.0 / 2.0, -1.0 / 2.0, -1.0 / 2.0, 1.0 / 2.0],
        [-1.0, 3.0, -3.0, 1.0],
    ],
    [
        [-23.0 / 24.0, 21.0 / 24.0, 3.0 / 24.0, -1.0 / 24.0],
        [3.0 / 2.0, -7.0 / 2.0, 5.0 / 2.0, -1.0 / 2.0],
        [-1.0, 3.0, -3.0, 1.0],
    ],
];

/// The seven flux values `(f[j-3], ..., f[j+3])` feeding the reconstruction
/// at `x[j+1/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilWindow(pub [f64; 7]);

impl StencilWindow {
    pub fn new(values: [f64; 7]) -> Self {
        Self(values)
    }

    /// Copy the window starting at `line[start]`.
    #[inline]
    pub fn from_slice(line: &[f64]) -> Self {
        let mut v = [0.0; 7];
        v.copy_from_slice(&line[..7]);
        Self(v)
    }

    /// Mirror the window about its center.
    pub fn reversed(&self) -> Self {
        let mut v = self.0;
        v.reverse();
        Self(v)
    }

    /// The four values of sub-stencil `k`.
    #[inline]
    pub fn substencil(&self, k: usize) -> [f64; 4] {
        [self.0[k], self.0[k + 1], self.0[k + 2], self.0[k + 3]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Ns7,
    Bs7,
    Z7,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Ns7, Scheme::Bs7, Scheme::Z7];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Ns7 => "ns7",
            Scheme::Bs7 => "bs7",
            Scheme::Z7 => "z7",
        }
    }

    pub fn default_epsilon(self) -> f64 {
        match self {
            Scheme::Bs7 => 1e-6,
            Scheme::Ns7 | Scheme::Z7 => 1e-40,
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ns7" => Ok(Scheme::Ns7),
            "bs7" => Ok(Scheme::Bs7),
            "z7" => Ok(Scheme::Z7),
            other => Err(format!("unknown scheme `{other}` (expected ns7, bs7 or z7)")),
        }
    }
}

/// Which global indicator the Z7 weights use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TauVariant {
    /// `|b0 + 3 b1 - 3 b2 - b3|`, O(dx^7) on smooth data.
    #[default]
    Eighth,
    /// `|b0 - b1 - b2 + b3|`, O(dx^6) on smooth data.
    Seventh,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchemeConfig {
    pub scheme: Scheme,
    pub epsilon: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub s_exp: u32,
    pub p_exp: u32,
    #[serde(default)]
    pub tau: TauVariant,
}

impl SchemeConfig {
    /// Defaults for `scheme` with the linear-advection indicator parameters.
    pub fn new(scheme: Scheme) -> Self {
        Self {
            scheme,
            epsilon: scheme.default_epsilon(),
            xi1: 0.1,
            xi2: 1.0,
            s_exp: 2,
            p_exp: 2,
            tau: TauVariant::Eighth,
        }
    }

    pub fn ns7() -> Self {
        Self::new(Scheme::Ns7)
    }

    pub fn bs7() -> Self {
        Self::new(Scheme::Bs7)
    }

    pub fn z7() -> Self {
        Self::new(Scheme::Z7)
    }

    pub fn with_xi(mut self, xi1: f64, xi2: f64) -> Self {
        self.xi1 = xi1;
        self.xi2 = xi2;
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_s(mut self, s_exp: u32) -> Self {
        self.s_exp = s_exp;
        self
    }

    pub fn with_p(mut self, p_exp: u32) -> Self {
        self.p_exp = p_exp;
        self
    }
}

/// Nonlinear weights plus the indicators that produced them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSet {
    pub omega: [f64; 4],
    pub beta: [f64; 4],
    /// `zeta` for NS7, `tau` for Z7, `None` for BS7.
    pub global_indicator: Option<f64>,
}

#[inline]
fn dot4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// The four cubic candidate fluxes at `x[j+1/2]`.
#[inline]
pub fn candidate_fluxes(w: &StencilWindow) -> [f64; 4] {
    std::array::from_fn(|k| dot4(&CANDIDATE_COEFFS[k], &w.substencil(k)))
}

/// Solve the 4x4 Vandermonde system for the coefficients of `L_{s,k}`.
///
/// Nodes are `(x_l - x[j+1/2]) / dx` for `x_l` in `S_k`, i.e. the
/// half-integers `k - 3.5, ..., k - 0.5`; the right-hand side selects the
/// `s`-th Taylor term. This is a regeneration oracle for
/// [`UNDIVIDED_COEFFS`], not used while solving.
pub fn undivided_diff_coeffs(k: usize, s: usize) -> [f64; 4] {
    assert!(k < 4 && (1..=3).contains(&s), "k in 0..4, s in 1..=3");
    let nodes: [f64; 4] = std::array::from_fn(|l| k as f64 - 3.5 + l as f64);
    let factorial = [1.0, 1.0, 2.0, 6.0];
    // row m: sum_l c_l nodes_l^m / m! = delta_{s,m}
    let mut a = [[0.0f64; 5]; 4];
    for (m, row) in a.iter_mut().enumerate() {
        for l in 0..4 {
            row[l] = nodes[l].powi(m as i32) / factorial[m];
        }
        row[4] = if m == s { 1.0 } else { 0.0 };
    }
    solve_augmented(a)
}

/// Gaussian elimination with partial pivoting on a 4x5 augmented matrix.
fn solve_augmented(mut a: [[f64; 5]; 4]) -> [f64; 4] {
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        for row in col + 1..4 {
            let factor = a[row][col] / a[col][col];
            for c in col..5 {
                a[row][c] -= factor * a[col][c];
            }
        }
    }
    let mut x = [0.0; 4];
    for row in (0..4).rev() {
        let tail: f64 = (row + 1..4).map(|c| a[row][c] * x[c]).sum();
        x[row] = (a[row][4] - tail) / a[row][row];
    }
    x
}

/// `(L_{1,k} f, L_{2,k} f, L_{3,k} f)` on sub-stencil `k`.
#[inline]
pub fn undivided_diffs(w: &StencilWindow, k: usize) -> [f64; 3] {
    let sub = w.substencil(k);
    std::array::from_fn(|s| dot4(&UNDIVIDED_COEFFS[k][s], &sub))
}

/// `beta_k = xi1 |L_{1,k}| + xi2 |L_{2,k}| + |L_{3,k}|`.
#[inline]
pub fn beta_ns7(l: &[[f64; 3]; 4], cfg: &SchemeConfig) -> [f64; 4] {
    std::array::from_fn(|k| cfg.xi1 * l[k][0].abs() + cfg.xi2 * l[k][1].abs() + l[k][2].abs())
}

#[inline]
pub fn zeta_ns7(beta: &[f64; 4]) -> f64 {
    let d = beta[0] - beta[3];
    d * d
}

/// Normalize `alpha_k = d_k (1 + r_k^pow)`; overflowing ratios are handled
/// by dividing through by the largest `r_k`.
#[inline]
fn one_plus_weights(r: [f64; 4], pow: i32) -> [f64; 4] {
    let t = match pow {
        1 => r,
        2 => r.map(|x| x * x),
        _ => r.map(|x| x.powi(pow)),
    };
    let alpha: [f64; 4] = if t.iter().all(|x| x.is_finite()) {
        std::array::from_fn(|k| IDEAL_WEIGHTS[k] * (1.0 + t[k]))
    } else {
        let rmax = r.iter().copied().fold(0.0f64, f64::max);
        std::array::from_fn(|k| {
            let scaled = if rmax.is_infinite() {
                if r[k].is_infinite() {
                    1.0
                } else {
                    0.0
                }
            } else {
                rmax.recip().powi(pow) + (r[k] / rmax).powi(pow)
            };
            IDEAL_WEIGHTS[k] * scaled
        })
    };
    normalize(alpha)
}

#[inline]
fn normalize(alpha: [f64; 4]) -> [f64; 4] {
    let inv = 1.0 / (alpha[0] + alpha[1] + alpha[2] + alpha[3]);
    alpha.map(|a| a * inv)
}

/// `alpha_k = d_k (1 + (zeta / (beta_k + eps)^2)^s)`.
#[inline]
pub fn weights_ns7(beta: &[f64; 4], zeta: f64, cfg: &SchemeConfig) -> WeightSet {
    let r = beta.map(|b| {
        if zeta == 0.0 {
            0.0
        } else {
            let den = b + cfg.epsilon;
            zeta / (den * den)
        }
    });
    WeightSet {
        omega: one_plus_weights(r, cfg.s_exp as i32),
        beta: *beta,
        global_indicator: Some(zeta),
    }
}

/// Quadratic-form smoothness indicators of the cubic candidates.
///
/// These are the integer forms, equal to 240 times
/// `sum_q dx^(2q-1) int_{I_j} (d^q p_k / dx^q)^2 dx`.
#[inline]
pub fn beta_bs7(w: &StencilWindow) -> [f64; 4] {
    let f = &w.0;
    let (a, b, c, d, e, g, h) = (f[0], f[1], f[2], f[3], f[4], f[5], f[6]);
    [
        a * (547.0 * a - 3882.0 * b + 4642.0 * c - 1854.0 * d)
            + b * (7043.0 * b - 17246.0 * c + 7042.0 * d)
            + c * (11003.0 * c - 9402.0 * d)
            + 2107.0 * d * d,
        b * (267.0 * b - 1642.0 * c + 1602.0 * d - 494.0 * e)
            + c * (2843.0 * c - 5966.0 * d + 1922.0 * e)
            + d * (3443.0 * d - 2522.0 * e)
            + 547.0 * e * e,
        c * (547.0 * c - 2522.0 * d + 1922.0 * e - 494.0 * g)
            + d * (3443.0 * d - 5966.0 * e + 1602.0 * g)
            + e * (2843.0 * e - 1642.0 * g)
            + 267.0 * g * g,
        d * (2107.0 * d - 9402.0 * e + 7042.0 * g - 1854.0 * h)
            + e * (11003.0 * e - 17246.0 * g + 4642.0 * h)
            + g * (7043.0 * g - 3882.0 * h)
            + 547.0 * h * h,
    ]
}

/// `alpha_k = d_k / (eps + beta_k)^p`.
#[inline]
pub fn weights_bs7(beta: &[f64; 4], cfg: &SchemeConfig) -> WeightSet {
    let q = beta.map(|b| (cfg.epsilon + b).powi(cfg.p_exp as i32).recip());
    let alpha: [f64; 4] = if q.iter().all(|x| x.is_finite()) {
        std::array::from_fn(|k| IDEAL_WEIGHTS[k] * q[k])
    } else {
        std::array::from_fn(|k| if q[k].is_infinite() { IDEAL_WEIGHTS[k] } else { 0.0 })
    };
    WeightSet {
        omega: normalize(alpha),
        beta: *beta,
        global_indicator: None,
    }
}

#[inline]
pub fn tau_z7(beta: &[f64; 4], variant: TauVariant) -> f64 {
    match variant {
        TauVariant::Eighth => (beta[0] + 3.0 * beta[1] - 3.0 * beta[2] - beta[3]).abs(),
        TauVariant::Seventh => (beta[0] - beta[1] - beta[2] + beta[3]).abs(),
    }
}

/// `alpha_k = d_k (1 + (tau / (beta_k + eps))^p)`.
#[inline]
pub fn weights_z7(beta: &[f64; 4], tau: f64, cfg: &SchemeConfig) -> WeightSet {
    let r = beta.map(|b| if tau == 0.0 { 0.0 } else { tau / (b + cfg.epsilon) });
    WeightSet {
        omega: one_plus_weights(r, cfg.p_exp as i32),
        beta: *beta,
        global_indicator: Some(tau),
    }
}

/// Indicators and nonlinear weights of the configured scheme.
#[inline]
pub fn weights(w: &StencilWindow, cfg: &SchemeConfig) -> WeightSet {
    match cfg.scheme {
        Scheme::Ns7 => {
            let l: [[f64; 3]; 4] = std::array::from_fn(|k| undivided_diffs(w, k));
            let beta = beta_ns7(&l, cfg);
            weights_ns7(&beta, zeta_ns7(&beta), cfg)
        }
        Scheme::Bs7 => weights_bs7(&beta_bs7(w), cfg),
        Scheme::Z7 => {
            let beta = beta_bs7(w);
            weights_z7(&beta, tau_z7(&beta, cfg.tau), cfg)
        }
    }
}

/// `sum_k omega_k fhat_k` at `x[j+1/2]` from the upwind-biased window.
#[inline]
pub fn reconstruct_interface(w: &StencilWindow, cfg: &SchemeConfig) -> f64 {
    let ws = weights(w, cfg);
    dot4(&ws.omega, &candidate_fluxes(w))
}

/// Negative-flux reconstruction at `x[j+1/2]`.
///
/// `w_reflected` must hold `(f[j+4], f[j+3], ..., f[j-2])`, i.e. the
/// negative-flux window already mirrored about the interface.
#[inline]
pub fn reconstruct_negative(w_reflected: &StencilWindow, cfg: &SchemeConfig) -> f64 {
    reconstruct_interface(w_reflected, cfg)
}

/// Reconstruction with the weights frozen at the ideal weights.
pub fn reconstruct_linear(w: &StencilWindow) -> f64 {
    dot4(&IDEAL_WEIGHTS, &candidate_fluxes(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const STEP: StencilWindow = StencilWindow([0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0]);

    #[test]
    fn constant_window_reproduces_constant() {
        let w = StencilWindow([2.5; 7]);
        for c in candidate_fluxes(&w) {
            assert_relative_eq!(c, 2.5, epsilon = 1e-14);
        }
        for k in 0..4 {
            for l in undivided_diffs(&w, k) {
                assert!(l.abs() < 1e-14);
            }
        }
        for scheme in Scheme::ALL {
            let cfg = SchemeConfig::new(scheme);
            assert_relative_eq!(reconstruct_interface(&w, &cfg), 2.5, epsilon = 1e-14);
            assert_relative_eq!(reconstruct_negative(&w, &cfg), 2.5, epsilon = 1e-14);
        }
        assert_eq!(beta_bs7(&w).map(|b| (b / 2.5 / 2.5).abs() < 1e-9), [true; 4]);
    }

    #[test]
    fn linear_data_candidates_hit_midpoint() {
        for j in [-3.0, 0.0, 7.0] {
            let w = StencilWindow(std::array::from_fn(|i| j + i as f64 - 3.0));
            for c in candidate_fluxes(&w) {
                assert_relative_eq!(c, j + 0.5, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn quadratic_candidate_matches_auxiliary_function() {
        // h(x) = x^2 - 1/12 has unit-width sliding average x^2
        let w = StencilWindow([9.0, 4.0, 1.0, 0.0, 1.0, 4.0, 9.0]);
        assert_relative_eq!(candidate_fluxes(&w)[0], 1.0 / 6.0, epsilon = 1e-14);
    }

    #[test]
    fn printed_undivided_coefficients() {
        assert_eq!(UNDIVIDED_COEFFS[2][2], [-1.0, 3.0, -3.0, 1.0]);
        assert_eq!(UNDIVIDED_COEFFS[2][0], [1.0 / 24.0, -27.0 / 24.0, 27.0 / 24.0, -1.0 / 24.0]);
        assert_eq!(UNDIVIDED_COEFFS[0][1], [-1.5, 5.5, -6.5, 2.5]);
    }

    #[test]
    fn vandermonde_regenerates_every_row() {
        for k in 0..4 {
            for s in 1..=3 {
                let solved = undivided_diff_coeffs(k, s);
                for (a, b) in solved.iter().zip(UNDIVIDED_COEFFS[k][s - 1]) {
                    assert!((a - b).abs() < 1e-13, "k={k} s={s}: {solved:?}");
                }
            }
        }
    }

    #[test]
    fn undivided_diffs_on_polynomials() {
        let dx = 0.1;
        let lin = StencilWindow(std::array::from_fn(|i| (i as f64 - 3.0) * dx));
        for k in 0..4 {
            let l = undivided_diffs(&lin, k);
            assert_relative_eq!(l[0], dx, epsilon = 1e-14);
            assert!(l[1].abs() < 1e-14 && l[2].abs() < 1e-14);
        }
        let cubic = StencilWindow(std::array::from_fn(|i| (i as f64 - 3.0).powi(3)));
        assert_relative_eq!(undivided_diffs(&cubic, 2)[2], 6.0, epsilon = 1e-13);
    }

    #[test]
    fn step_window_indicators() {
        let cfg = SchemeConfig::ns7().with_xi(0.1, 1.0);
        let l: [[f64; 3]; 4] = std::array::from_fn(|k| undivided_diffs(&STEP, k));
        let beta = beta_ns7(&l, &cfg);
        assert_eq!(beta[0], 0.0);
        assert_relative_eq!(beta[3], 0.1 * 23.0 / 24.0 + 1.5 + 1.0, epsilon = 1e-14);
        assert_relative_eq!(zeta_ns7(&beta), 2.595_833_333_333_333f64.powi(2), epsilon = 1e-13);
        assert_relative_eq!(zeta_ns7(&beta), 6.738_350_694_444_444, epsilon = 1e-12);
        assert_eq!(beta_ns7(&[[0.0; 3]; 4], &cfg), [0.0; 4]);
    }

    #[test]
    fn step_reconstruction_stays_bounded() {
        for scheme in Scheme::ALL {
            let v = reconstruct_interface(&STEP, &SchemeConfig::new(scheme));
            assert!((-1e-6..=1.0 + 1e-6).contains(&v), "{scheme}: {v}");
        }
        let ws = weights(&STEP, &SchemeConfig::ns7());
        assert!(ws.omega[0] > 0.99, "{:?}", ws.omega);
    }

    #[test]
    fn weights_collapse_to_ideal() {
        let cfg = SchemeConfig::ns7();
        assert_eq!(weights_ns7(&[0.3, 0.1, 0.7, 0.2], 0.0, &cfg).omega, normalize(IDEAL_WEIGHTS));
        for (a, d) in weights_ns7(&[0.4; 4], 17.0, &cfg).omega.iter().zip(IDEAL_WEIGHTS) {
            assert_relative_eq!(*a, d, epsilon = 1e-15);
        }
        for (a, d) in weights_bs7(&[3.0; 4], &SchemeConfig::bs7()).omega.iter().zip(IDEAL_WEIGHTS) {
            assert_relative_eq!(*a, d, epsilon = 1e-15);
        }
        for (a, d) in weights_z7(&[0.1, 0.2, 0.3, 0.4], 0.0, &SchemeConfig::z7()).omega.iter().zip(IDEAL_WEIGHTS) {
            assert_relative_eq!(*a, d, epsilon = 1e-15);
        }
        for (a, d) in weights_z7(&[2.0; 4], 5.0, &SchemeConfig::z7()).omega.iter().zip(IDEAL_WEIGHTS) {
            assert_relative_eq!(*a, d, epsilon = 1e-15);
        }
    }

    #[test]
    fn bs7_discards_rough_stencil() {
        let ws = weights_bs7(&[0.0, 0.0, 0.0, 1e3], &SchemeConfig::bs7());
        assert!(ws.omega[3] < 1e-15);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_z7(&[2.0, 5.0, 5.0, 2.0], TauVariant::Eighth), 0.0);
        assert_eq!(tau_z7(&[1.0, 0.0, 0.0, 0.0], TauVariant::Eighth), 1.0);
        assert_eq!(tau_z7(&[1.0, 0.0, 0.0, 0.0], TauVariant::Seventh), 1.0);
        assert_eq!(tau_z7(&[1.0, 2.0, 3.0, 4.0], TauVariant::Seventh), 0.0);
    }

    #[test]
    fn overflowing_ratio_selects_smooth_stencils() {
        // zeta / eps^2 overflows with eps = 1e-40 and a large jump
        let w = StencilWindow([0.0, 0.0, 0.0, 0.0, 1e60, 1e60, 1e60]);
        let ws = weights(&w, &SchemeConfig::ns7());
        assert!(ws.omega.iter().all(|x| x.is_finite()));
        assert_relative_eq!(ws.omega.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(ws.omega[0], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn mirrored_window_symmetric_data() {
        let w = StencilWindow([1.0, 4.0, 2.0, 8.0, 2.0, 4.0, 1.0]);
        let cfg = SchemeConfig::ns7();
        assert_eq!(reconstruct_negative(&w.reversed(), &cfg), reconstruct_interface(&w, &cfg));
    }

    #[test]
    fn split_linear_halves_sum_to_central_value() {
        // f+ = f- = f/2 on f_j = j; the negative window runs j+4 down to j-2
        let j = 5.0;
        let plus = StencilWindow(std::array::from_fn(|i| 0.5 * (j + i as f64 - 3.0)));
        let minus = StencilWindow(std::array::from_fn(|i| 0.5 * (j + 4.0 - i as f64)));
        let cfg = SchemeConfig::ns7();
        let sum = reconstruct_interface(&plus, &cfg) + reconstruct_negative(&minus, &cfg);
        assert_relative_eq!(sum, j + 0.5, epsilon = 1e-12);
    }
}
