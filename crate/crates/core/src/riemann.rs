//! Exact solution of the 1D Euler Riemann problem for an ideal gas.
//!
//! Newton iteration on the pressure function `f_L(p) + f_R(p) + du = 0`
//! (Rankine-Hugoniot branch for shocks, isentropic branch for
//! rarefactions), followed by sampling of the self-similar wave pattern.

use crate::error::{Error, Result};

/// Piecewise-constant Riemann data in primitive variables `(rho, u, p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannState {
    pub left: [f64; 3],
    pub right: [f64; 3],
    pub x_split: f64,
}

/// Solved star region of a Riemann problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannSolution {
    pub left: [f64; 3],
    pub right: [f64; 3],
    pub gamma: f64,
    pub p_star: f64,
    pub u_star: f64,
    pub rho_star_left: f64,
    pub rho_star_right: f64,
}

const VACUUM_PRESSURE: f64 = 1e-12;

fn sound_speed(prim: [f64; 3], gamma: f64) -> f64 {
    (gamma * prim[2] / prim[0]).sqrt()
}

/// Pressure function of one side and its derivative.
fn pressure_fn(p: f64, side: [f64; 3], gamma: f64) -> (f64, f64) {
    let [rho, _, pk] = side;
    let c = sound_speed(side, gamma);
    if p > pk {
        let a = 2.0 / ((gamma + 1.0) * rho);
        let b = (gamma - 1.0) / (gamma + 1.0) * pk;
        let q = (a / (p + b)).sqrt();
        ((p - pk) * q, q * (1.0 - 0.5 * (p - pk) / (p + b)))
    } else {
        let ex = (gamma - 1.0) / (2.0 * gamma);
        let ratio = p / pk;
        (
            2.0 * c / (gamma - 1.0) * (ratio.powf(ex) - 1.0),
            ratio.powf(-(gamma + 1.0) / (2.0 * gamma)) / (rho * c),
        )
    }
}

impl RiemannSolution {
    pub fn solve(left: [f64; 3], right: [f64; 3], gamma: f64) -> Result<Self> {
        for s in [left, right] {
            if !(s[0] > 0.0 && s[2] > 0.0) {
                return Err(Error::NonPhysicalState { cell: 0, rho: s[0], p: s[2] });
            }
        }
        let (cl, cr) = (sound_speed(left, gamma), sound_speed(right, gamma));
        let du = right[1] - left[1];
        if 2.0 / (gamma - 1.0) * (cl + cr) <= du {
            return Err(Error::VacuumState { threshold: VACUUM_PRESSURE });
        }

        // primitive-variable guess, kept positive
        let p_pv = 0.5 * (left[2] + right[2]) - 0.125 * du * (left[0] + right[0]) * (cl + cr);
        let mut p = p_pv.max(1e-8 * left[2].min(right[2]));
        let mut converged = false;
        for _ in 0..100 {
            let (fl, dfl) = pressure_fn(p, left, gamma);
            let (fr, dfr) = pressure_fn(p, right, gamma);
            let mut next = p - (fl + fr + du) / (dfl + dfr);
            if next <= 0.0 {
                next = 0.5 * p;
            }
            let change = 2.0 * (next - p).abs() / (next + p);
            p = next;
            if p < VACUUM_PRESSURE {
                return Err(Error::VacuumState { threshold: VACUUM_PRESSURE });
            }
            if change < 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { x: 0.0, iterations: 100 });
        }
        let (fl, _) = pressure_fn(p, left, gamma);
        let (fr, _) = pressure_fn(p, right, gamma);
        let u_star = 0.5 * (left[1] + right[1]) + 0.5 * (fr - fl);
        Ok(Self {
            left,
            right,
            gamma,
            p_star: p,
            u_star,
            rho_star_left: star_density(p, left, gamma),
            rho_star_right: star_density(p, right, gamma),
        })
    }

    /// Speed of the left shock, if the left wave is a shock.
    pub fn left_shock_speed(&self) -> Option<f64> {
        (self.p_star > self.left[2]).then(|| {
            let g = self.gamma;
            let c = sound_speed(self.left, g);
            self.left[1] - c * ((g + 1.0) / (2.0 * g) * self.p_star / self.left[2] + (g - 1.0) / (2.0 * g)).sqrt()
        })
    }

    /// Speed of the right shock, if the right wave is a shock.
    pub fn right_shock_speed(&self) -> Option<f64> {
        (self.p_star > self.right[2]).then(|| {
            let g = self.gamma;
            let c = sound_speed(self.right, g);
            self.right[1] + c * ((g + 1.0) / (2.0 * g) * self.p_star / self.right[2] + (g - 1.0) / (2.0 * g)).sqrt()
        })
    }

    /// Primitive state at similarity coordinate `s = (x - x_split) / t`.
    pub fn sample(&self, s: f64) -> [f64; 3] {
        let g = self.gamma;
        let (p_star, u_star) = (self.p_star, self.u_star);
        if s <= u_star {
            let [rho, u, p] = self.left;
            let c = sound_speed(self.left, g);
            if p_star > p {
                let speed = self.left_shock_speed().unwrap();
                if s <= speed {
                    self.left
                } else {
                    [self.rho_star_left, u_star, p_star]
                }
            } else {
                let head = u - c;
                let c_star = c * (p_star / p).powf((g - 1.0) / (2.0 * g));
                let tail = u_star - c_star;
                if s <= head {
                    self.left
                } else if s >= tail {
                    [self.rho_star_left, u_star, p_star]
                } else {
                    let k = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * c) * (u - s);
                    [
                        rho * k.powf(2.0 / (g - 1.0)),
                        2.0 / (g + 1.0) * (c + (g - 1.0) / 2.0 * u + s),
                        p * k.powf(2.0 * g / (g - 1.0)),
                    ]
                }
            }
        } else {
            let [rho, u, p] = self.right;
            let c = sound_speed(self.right, g);
            if p_star > p {
                let speed = self.right_shock_speed().unwrap();
                if s >= speed {
                    self.right
                } else {
                    [self.rho_star_right, u_star, p_star]
                }
            } else {
                let head = u + c;
                let c_star = c * (p_star / p).powf((g - 1.0) / (2.0 * g));
                let tail = u_star + c_star;
                if s >= head {
                    self.right
                } else if s <= tail {
                    [self.rho_star_right, u_star, p_star]
                } else {
                    let k = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * c) * (u - s);
                    [
                        rho * k.powf(2.0 / (g - 1.0)),
                        2.0 / (g + 1.0) * (-c + (g - 1.0) / 2.0 * u + s),
                        p * k.powf(2.0 * g / (g - 1.0)),
                    ]
                }
            }
        }
    }
}

fn star_density(p_star: f64, side: [f64; 3], gamma: f64) -> f64 {
    let [rho, _, p] = side;
    let ratio = p_star / p;
    if p_star > p {
        let g6 = (gamma - 1.0) / (gamma + 1.0);
        rho * (ratio + g6) / (g6 * ratio + 1.0)
    } else {
        rho * ratio.powf(1.0 / gamma)
    }
}

/// Primitive state of the exact solution at similarity coordinate
/// `s = (x - x_split) / t`.
pub fn exact_riemann_1d(states: &RiemannState, s: f64, gamma: f64) -> Result<[f64; 3]> {
    Ok(RiemannSolution::solve(states.left, states.right, gamma)?.sample(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn equal_states_are_constant() {
        let s = [0.7, 0.2, 1.3];
        let sol = RiemannSolution::solve(s, s, 1.4).unwrap();
        for x in [-3.0, -0.1, 0.0, 0.5, 4.0] {
            let v = sol.sample(x);
            for (a, b) in v.iter().zip(s) {
                assert_relative_eq!(*a, b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn symmetric_double_rarefaction_has_zero_star_velocity() {
        let sol = RiemannSolution::solve([1.0, -0.1, 1.0], [1.0, 0.1, 1.0], 1.4).unwrap();
        assert!(sol.u_star.abs() < 1e-14);
        assert!(sol.p_star < 1.0);
    }

    #[test]
    fn sod_classic_star_state() {
        // standard Sod tube, star values well known to 5 digits
        let sol = RiemannSolution::solve([1.0, 0.0, 1.0], [0.125, 0.0, 0.1], 1.4).unwrap();
        assert_relative_eq!(sol.p_star, 0.30313, max_relative = 1e-4);
        assert_relative_eq!(sol.u_star, 0.92745, max_relative = 1e-4);
    }

    #[test]
    fn vacuum_is_reported() {
        let r = RiemannSolution::solve([1.0, -10.0, 0.1], [1.0, 10.0, 0.1], 1.4);
        assert!(matches!(r, Err(Error::VacuumState { .. })));
    }
}
