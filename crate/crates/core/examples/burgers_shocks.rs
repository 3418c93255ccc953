//! Inviscid Burgers past shock formation: error to the self-reference and
//! total variation of the final state.
use weno7::harness::reference::output_columns;
use weno7::harness::{norms, simulate_1d, ReferenceSolution, RunConfig};
use weno7::problems::burgers_breaking_time;
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    for problem in ["burgers_steady", "burgers_moving"] {
        let base = RunConfig::new(problem, Scheme::Ns7).resolve()?;
        let ic = base.spec.scalar_ic().expect("scalar problem");
        println!(
            "{problem}: breaking time {:.4}, t_final {}",
            burgers_breaking_time(ic, base.spec.domain.interval()),
            base.spec.t_final
        );
        for scheme in [Scheme::Ns7, Scheme::Bs7, Scheme::Z7] {
            let run = RunConfig::new(problem, scheme).resolve()?;
            let reference = ReferenceSolution::build(&run, run.n)?.expect("reference");
            let (grid, field, stats) = simulate_1d(&run)?;
            let u = &output_columns(&field, &run.spec.model)?[0];
            let (l1, linf) = norms(u, &reference.sample_grid(&grid)?[0])?;
            let tv: f64 = u.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
            println!("  {:3} N={} steps={} L1 {l1:.3e} Linf {linf:.3e} TV {tv:.4}", scheme.name(), run.n, stats.steps);
        }
    }
    Ok(())
}
