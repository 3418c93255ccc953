//! Effect of the NS7 exponent `s` on data with critical points.
use weno7::harness::{convergence_config, convergence_study, REFINEMENT_SWEEP};
use weno7::Scheme;

fn main() -> weno7::Result<()> {
    for problem in ["advect_cp1", "advect_cp2"] {
        for s in [1, 2, 3] {
            let mut c = convergence_config(problem, Scheme::Ns7, false);
            c.s_exp = Some(s);
            let rows = convergence_study(&c.resolve()?, &REFINEMENT_SWEEP)?;
            let orders: Vec<String> = rows.iter().filter_map(|r| r.l1_order).map(|o| format!("{o:.2}")).collect();
            println!(
                "{problem} s={s}: L1(160) {:.3e}, orders {}",
                rows.last().unwrap().l1_err,
                orders.join(" ")
            );
        }
    }
    Ok(())
}
