//! Four-quadrant 2D Riemann problem: positivity and diagonal symmetry.
//!
//! `cargo run --release --example riemann_2d -- 400` runs the full-size grid.
use weno7::harness::output::{min_density_pressure_2d, solution_csv_2d};
use weno7::harness::{simulate_2d, RunConfig};
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let run = RunConfig::new("riemann2d", Scheme::Ns7).with_n(n).resolve()?;
    let (grid, field, stats) = simulate_2d(&run)?;
    let (rho_min, p_min) = min_density_pressure_2d(&field, run.spec.gamma())?;
    let mut asym = 0.0f64;
    for iy in 0..n as isize {
        for ix in 0..n as isize {
            asym = asym.max((field.get(0, ix, iy) - field.get(0, iy, ix)).abs());
        }
    }
    println!("{n}x{n}: steps={} wall={:.1}s", stats.steps, stats.wall_seconds);
    println!("min rho={rho_min:.5} min p={p_min:.5} swap asymmetry={asym:e}");
    let path = std::env::temp_dir().join(format!("riemann2d_{n}.csv"));
    std::fs::write(&path, solution_csv_2d(&grid, &field))?;
    println!("wrote {}", path.display());
    Ok(())
}
