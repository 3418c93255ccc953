use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::{make_problem, ProblemSpec};
use crate::time::{DtMode, Integrator, StepControl};
use crate::weno::{Scheme, SchemeConfig, TauVariant};

/// Optional artifacts written next to the solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Emit {
    Solution,
    Errors,
    Weights,
    Indicators,
}

/// User-facing run configuration, read from JSON. Every field except
/// `problem` is optional and falls back to the problem's defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: String,
    #[serde(default = "default_scheme")]
    pub scheme: Scheme,
    #[serde(default, alias = "n_cells")]
    pub n: Option<usize>,
    #[serde(default)]
    pub nx: Option<usize>,
    #[serde(default)]
    pub ny: Option<usize>,
    #[serde(default = "default_cfl")]
    pub cfl: f64,
    #[serde(default)]
    pub dt_mode: Option<DtMode>,
    #[serde(default)]
    pub integrator: Option<Integrator>,
    /// Linear problems use the eight-stage linear SSPRK at plain CFL steps.
    #[serde(default)]
    pub faithful: bool,
    #[serde(default)]
    pub epsilon: Option<f64>,
    #[serde(default)]
    pub xi1: Option<f64>,
    #[serde(default)]
    pub xi2: Option<f64>,
    #[serde(default)]
    pub s_exp: Option<u32>,
    #[serde(default)]
    pub p_exp: Option<u32>,
    #[serde(default)]
    pub tau: Option<TauVariant>,
    #[serde(default)]
    pub t_final: Option<f64>,
    #[serde(default)]
    pub alpha_factor: Option<f64>,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default = "default_emit")]
    pub emit: Vec<Emit>,
}

fn default_scheme() -> Scheme {
    Scheme::Ns7
}

fn default_cfl() -> f64 {
    0.5
}

fn default_emit() -> Vec<Emit> {
    vec![Emit::Solution]
}

impl RunConfig {
    pub fn new(problem: &str, scheme: Scheme) -> Self {
        Self {
            problem: problem.to_string(),
            scheme,
            n: None,
            nx: None,
            ny: None,
            cfl: default_cfl(),
            dt_mode: None,
            integrator: None,
            faithful: false,
            epsilon: None,
            xi1: None,
            xi2: None,
            s_exp: None,
            p_exp: None,
            tau: None,
            t_final: None,
            alpha_factor: None,
            output_dir: None,
            emit: default_emit(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    /// Fill in every default and validate.
    pub fn resolve(&self) -> Result<ResolvedRun> {
        let spec = make_problem(&self.problem)?;
        let (xi1, xi2) = spec.default_xi;
        let scheme = SchemeConfig {
            scheme: self.scheme,
            epsilon: self.epsilon.unwrap_or(self.scheme.default_epsilon()),
            xi1: self.xi1.unwrap_or(xi1),
            xi2: self.xi2.unwrap_or(xi2),
            s_exp: self.s_exp.unwrap_or(2),
            p_exp: self.p_exp.unwrap_or(2),
            tau: self.tau.unwrap_or_default(),
        };
        if !(scheme.epsilon > 0.0) {
            return Err(Error::Config(format!("epsilon must be positive, got {}", scheme.epsilon)));
        }
        for (name, xi) in [("xi1", scheme.xi1), ("xi2", scheme.xi2)] {
            if !(xi > 0.0 && xi <= 1.0) {
                return Err(Error::Config(format!("{name} must lie in (0, 1], got {xi}")));
            }
        }
        if scheme.s_exp == 0 || scheme.p_exp == 0 {
            return Err(Error::Config("s_exp and p_exp must be positive".into()));
        }
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return Err(Error::Config(format!("cfl must lie in (0, 1], got {}", self.cfl)));
        }
        let t_final = self.t_final.unwrap_or(spec.t_final);
        if !(t_final > 0.0) {
            return Err(Error::Config(format!("t_final must be positive, got {t_final}")));
        }
        let n = self.n.unwrap_or(spec.default_n);
        let (nx, ny) = (self.nx.unwrap_or(n), self.ny.unwrap_or(n));
        if n == 0 || nx == 0 || ny == 0 {
            return Err(Error::Config("cell counts must be positive".into()));
        }

        let linear = spec.model.is_linear();
        let integrator = self.integrator.unwrap_or(if self.faithful && linear {
            Integrator::Lssprk87
        } else {
            Integrator::Ssprk54
        });
        let dt_mode = if self.faithful {
            DtMode::CflBased
        } else {
            self.dt_mode.unwrap_or(DtMode::CflBased)
        };
        if integrator == Integrator::Lssprk87 && !linear {
            return Err(Error::Config(format!(
                "the linear SSPRK(8,7) is only valid for linear problems, not `{}`",
                spec.name
            )));
        }
        Ok(ResolvedRun {
            spec,
            scheme,
            n,
            nx,
            ny,
            control: StepControl::new(self.cfl, t_final, dt_mode),
            integrator,
            alpha_factor: self.alpha_factor.unwrap_or(1.0),
            emit: self.emit.clone(),
            output_dir: self.output_dir.clone().unwrap_or_else(|| PathBuf::from("out")),
        })
    }
}

/// A configuration with every default applied.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedRun {
    pub spec: ProblemSpec,
    pub scheme: SchemeConfig,
    pub n: usize,
    pub nx: usize,
    pub ny: usize,
    pub control: StepControl,
    pub integrator: Integrator,
    pub alpha_factor: f64,
    pub emit: Vec<Emit>,
    pub output_dir: PathBuf,
}

impl ResolvedRun {
    pub fn with_n(&self, n: usize) -> Self {
        Self {
            n,
            nx: n,
            ny: n,
            ..self.clone()
        }
    }

    pub fn with_scheme(&self, scheme: SchemeConfig) -> Self {
        Self { scheme, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_follow_problem_class() {
        let r = RunConfig::new("advect_sine", Scheme::Ns7).resolve().unwrap();
        assert_eq!((r.scheme.xi1, r.scheme.xi2), (0.1, 1.0));
        assert_eq!(r.scheme.epsilon, 1e-40);
        let r = RunConfig::new("burgers_steady", Scheme::Bs7).resolve().unwrap();
        assert_eq!((r.scheme.xi1, r.scheme.xi2), (0.1, 0.3));
        assert_eq!(r.scheme.epsilon, 1e-6);
        let r = RunConfig::new("sod_modified", Scheme::Z7).resolve().unwrap();
        assert_eq!((r.scheme.xi1, r.scheme.xi2), (0.3, 0.3));
        assert_eq!(r.n, 200);
        assert_eq!(r.control.cfl, 0.5);
    }

    #[test]
    fn faithful_selects_linear_integrator() {
        let mut c = RunConfig::new("advect_sine", Scheme::Ns7);
        c.faithful = true;
        c.dt_mode = Some(DtMode::SpatialOrderScaled);
        let r = c.resolve().unwrap();
        assert_eq!(r.integrator, Integrator::Lssprk87);
        assert_eq!(r.control.dt_mode, DtMode::CflBased);
        let mut c = RunConfig::new("lax", Scheme::Ns7);
        c.integrator = Some(Integrator::Lssprk87);
        assert!(matches!(c.resolve(), Err(Error::Config(_))));
    }

    #[test]
    fn rejects_bad_values() {
        let bad = [
            r#"{"problem": "advect_sine", "cfl": 1.5}"#,
            r#"{"problem": "advect_sine", "xi1": 0.0}"#,
            r#"{"problem": "advect_sine", "epsilon": -1.0}"#,
            r#"{"problem": "advect_sine", "n": 0}"#,
        ];
        for json in bad {
            assert!(matches!(RunConfig::from_json_str(json).unwrap().resolve(), Err(Error::Config(_))), "{json}");
        }
        assert!(RunConfig::from_json_str(r#"{"problem": "advect_sine", "bogus": 1}"#).is_err());
        assert!(matches!(
            RunConfig::new("nope", Scheme::Ns7).resolve(),
            Err(Error::UnknownProblem(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let json = r#"{"problem": "lax", "scheme": "z7", "n_cells": 100, "emit": ["solution", "errors"], "tau": "seventh"}"#;
        let c = RunConfig::from_json_str(json).unwrap();
        assert_eq!(c.n, Some(100));
        assert_eq!(c.scheme, Scheme::Z7);
        let back = RunConfig::from_json_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
