//! Accuracy tables for the smooth advection problems, every scheme.
//!
//! Pass `--faithful` to use the eight-stage linear SSPRK at CFL 0.5 instead
//! of SSPRK(5,4) with `dt ~ dx^(7/4)`.
use weno7::harness::{convergence_config, convergence_study, REFINEMENT_SWEEP};
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    let faithful = std::env::args().any(|a| a == "--faithful");
    for problem in ["advect_sine", "advect_cp1", "advect_cp2"] {
        for scheme in [Scheme::Ns7, Scheme::Bs7, Scheme::Z7] {
            let run = convergence_config(problem, scheme, faithful).resolve()?;
            println!("{problem} / {}", scheme.name());
            println!("     N     L1 error  order   Linf error  order");
            for row in convergence_study(&run, &REFINEMENT_SWEEP)? {
                let ord = |o: Option<f64>| o.map_or("    -".to_string(), |o| format!("{o:5.2}"));
                println!(
                    "{:6}  {:.4e}  {}   {:.4e}  {}",
                    row.n,
                    row.l1_err,
                    ord(row.l1_order),
                    row.linf_err,
                    ord(row.linf_order)
                );
            }
            println!();
        }
    }
    Ok(())
}
