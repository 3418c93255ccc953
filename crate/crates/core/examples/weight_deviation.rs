//! Slope of `max_k |omega_k - d_k|` against `dx` on the smooth advection data.
use weno7::harness::simulate::{grid_1d, initial_field_1d};
use weno7::harness::norms::observed_order;
use weno7::mesh::BoundaryCondition;
use weno7::problems::make_problem;
use weno7::discretization::Discretization;
use weno7::weno::IDEAL_WEIGHTS;
use weno7::SchemeConfig;

fn main() -> weno7::Result<()> {
    for problem in ["advect_sine", "advect_cp1", "advect_cp2"] {
        for s in [2, 1] {
            let spec = make_problem(problem)?;
            let cfg = SchemeConfig::ns7().with_xi(spec.default_xi.0, spec.default_xi.1).with_s(s);
            let disc = Discretization::new(spec.model, cfg);
            let mut prev: Option<(usize, f64)> = None;
            print!("{problem} s={s}:");
            for n in [20, 40, 80, 160, 320, 640] {
                let grid = grid_1d(&spec, n);
                let mut field = initial_field_1d(&spec, &grid);
                BoundaryCondition::periodic().fill_1d(&mut field);
                let dev = disc
                    .interface_weights_1d(&field, &grid, 0)?
                    .iter()
                    .flat_map(|(_, w)| w.omega.iter().zip(IDEAL_WEIGHTS).map(|(o, d)| (o - d).abs()))
                    .fold(0.0, f64::max);
                match prev {
                    Some((pn, pd)) => print!("  {n}: {dev:.3e} ({:.2})", observed_order(pn, pd, n, dev)),
                    None => print!("  {n}: {dev:.3e}"),
                }
                prev = Some((n, dev));
            }
            println!();
        }
    }
    Ok(())
}
