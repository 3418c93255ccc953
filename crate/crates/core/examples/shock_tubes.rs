//! Sod and Lax shock tubes against the exact Riemann solution.
use weno7::harness::reference::output_columns;
use weno7::harness::{norms, simulate_1d, ReferenceSolution, RunConfig};
use weno7::riemann::RiemannSolution;
use weno7::problems::{LAX, SOD_MODIFIED};
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    for (problem, state) in [("sod_modified", SOD_MODIFIED), ("lax", LAX)] {
        let star = RiemannSolution::solve(state.left, state.right, 1.4)?;
        println!("{problem}: p* = {:.5}, u* = {:.5}", star.p_star, star.u_star);
        for scheme in [Scheme::Ns7, Scheme::Bs7, Scheme::Z7] {
            let run = RunConfig::new(problem, scheme).with_n(200).resolve()?;
            let (grid, field, stats) = simulate_1d(&run)?;
            let cols = output_columns(&field, &run.spec.model)?;
            let exact = ReferenceSolution::build(&run, run.n)?.expect("exact Riemann").sample_grid(&grid)?;
            let (l1, _) = norms(&cols[0], &exact[0])?;
            let (lo, hi) = exact[0].iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
            let over = cols[0].iter().map(|&r| (r - hi).max(lo - r).max(0.0)).fold(0.0, f64::max) / (hi - lo);
            println!(
                "  {:3} steps={} density L1 {l1:.3e}, overshoot {over:.2e} of the jump",
                scheme.name(),
                stats.steps
            );
        }
    }
    Ok(())
}
