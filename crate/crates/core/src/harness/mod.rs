//! Run orchestration: configuration, simulation loops, reference
//! solutions, error norms, convergence tables and CSV/JSON artifacts.

pub mod config;
pub mod norms;
pub mod output;
pub mod reference;
pub mod selfcheck;
pub mod simulate;

pub use config::{Emit, ResolvedRun, RunConfig};
pub use norms::{convergence_csv, convergence_study, error_norms, norms, ConvergenceRow};
pub use output::{compare, run, RunReport};
pub use reference::ReferenceSolution;
pub use selfcheck::{selfcheck, Check};
pub use simulate::{simulate, simulate_1d, simulate_2d, RunStats, Solution};

use crate::error::Result;
use crate::time::DtMode;
use crate::weno::Scheme;

/// Convergence-table protocol for `problem`: SSPRK(5,4) with
/// `dt ~ dx^(7/4)`, or the eight-stage linear SSPRK at CFL 0.5 when
/// `faithful` is set.
pub fn convergence_config(problem: &str, scheme: Scheme, faithful: bool) -> RunConfig {
    let mut c = RunConfig::new(problem, scheme);
    c.faithful = faithful;
    if !faithful {
        c.dt_mode = Some(DtMode::SpatialOrderScaled);
    }
    c
}

/// The N sweep of the accuracy tables.
pub const REFINEMENT_SWEEP: [usize; 5] = [10, 20, 40, 80, 160];

/// Convergence table of `problem` under the default protocol.
pub fn convergence_table(problem: &str, scheme: Scheme, n_list: &[usize]) -> Result<Vec<ConvergenceRow>> {
    convergence_study(&convergence_config(problem, scheme, false).resolve()?, n_list)
}
