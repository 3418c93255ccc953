//! Long-time advection of discontinuous profiles with all three schemes.
use weno7::harness::reference::output_columns;
use weno7::harness::{norms, simulate_1d, ReferenceSolution, RunConfig};
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    for problem in ["advect_jump", "advect_shapes"] {
        for scheme in [Scheme::Ns7, Scheme::Bs7, Scheme::Z7] {
            let run = RunConfig::new(problem, scheme).resolve()?;
            let (grid, field, stats) = simulate_1d(&run)?;
            let u = &output_columns(&field, &run.spec.model)?[0];
            let exact = ReferenceSolution::build(&run, run.n)?.expect("exact advection").sample_grid(&grid)?;
            let (l1, linf) = norms(u, &exact[0])?;
            let (lo, hi) = u.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
            println!(
                "{problem:13} {:3} N={} t={} steps={:5}  L1 {l1:.3e}  Linf {linf:.3e}  range [{lo:.4}, {hi:.4}]",
                scheme.name(),
                run.n,
                stats.t,
                stats.steps
            );
        }
    }
    Ok(())
}
