//! Shock/entropy-wave interaction: self-convergence toward a fine-grid run.
use std::time::Instant;

use weno7::harness::reference::output_columns;
use weno7::harness::{norms, simulate_1d, ReferenceSolution, RunConfig};
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    let start = Instant::now();
    let base = RunConfig::new("shock_entropy", Scheme::Ns7).resolve()?;
    let n_ref = 3200;
    let reference = ReferenceSolution::fine_grid(&base, base.scheme, n_ref)?;
    println!("reference N={n_ref} built in {:.1}s", start.elapsed().as_secs_f64());
    let mut distances = Vec::new();
    for n in [200, 400] {
        let (grid, field, stats) = simulate_1d(&base.with_n(n))?;
        let exact = reference.sample_grid(&grid)?;
        let rho = &output_columns(&field, &base.spec.model)?[0];
        let (l1, linf) = norms(rho, &exact[0])?;
        println!("N={n}: steps={} L1={l1:.4e} Linf={linf:.4e}", stats.steps);
        distances.push(l1);
    }
    println!("ratio N=200/N=400: {:.2}", distances[0] / distances[1]);
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    Ok(())
}
