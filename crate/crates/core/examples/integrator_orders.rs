//! Temporal order of the two SSP Runge-Kutta methods on `u' = -u`, plus the
//! stability polynomial of the eight-stage linear method.
use weno7::time::{lssprk87_amplification_coeffs, Integrator};

fn error(integ: Integrator, steps: usize) -> weno7::Result<f64> {
    let mut u = vec![1.0];
    let dt = 1.0 / steps as f64;
    for _ in 0..steps {
        integ.step(&mut u, dt, |u: &mut Vec<f64>| Ok(u.iter().map(|x| -x).collect()))?;
    }
    Ok((u[0] - (-1.0f64).exp()).abs())
}

fn main() -> weno7::Result<()> {
    for integ in [Integrator::Ssprk54, Integrator::Lssprk87] {
        print!("{}:", integ.name());
        let mut prev: Option<f64> = None;
        for steps in [2, 4, 8, 16] {
            let e = error(integ, steps)?;
            match prev {
                Some(p) => print!("  {steps}: {e:.3e} ({:.2})", (p / e).log2()),
                None => print!("  {steps}: {e:.3e}"),
            }
            prev = Some(e);
        }
        println!();
    }
    let mut factorial = 1.0;
    for (m, c) in lssprk87_amplification_coeffs().iter().enumerate() {
        if m > 0 {
            factorial *= m as f64;
        }
        println!("z^{m}: {c:.15e}  1/{m}! = {:.15e}", 1.0 / factorial);
    }
    Ok(())
}
