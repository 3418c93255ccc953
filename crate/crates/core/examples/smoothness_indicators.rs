//! Smoothness indicators, global indicators and weights on sample stencils.
use weno7::weno::{self, TauVariant};
use weno7::{Scheme, SchemeConfig, StencilWindow};

fn main() {
    let h = 0.05;
    let smooth = StencilWindow::new(std::array::from_fn(|l| ((l as f64 - 3.0) * h).sin()));
    let critical = StencilWindow::new(std::array::from_fn(|l| ((l as f64 - 3.0) * h).cos()));
    let jump = StencilWindow::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0]);

    for (label, w) in [("smooth", smooth), ("critical point", critical), ("jump", jump)] {
        println!("{label}: {:?}", w.0);
        for scheme in [Scheme::Ns7, Scheme::Bs7, Scheme::Z7] {
            let ws = weno::weights(&w, &SchemeConfig::new(scheme));
            let global = ws.global_indicator.map_or(String::from("-"), |g| format!("{g:.3e}"));
            println!(
                "  {:>3}  beta {:.3e} {:.3e} {:.3e} {:.3e}  global {global}  omega {:.4} {:.4} {:.4} {:.4}",
                scheme.name(),
                ws.beta[0],
                ws.beta[1],
                ws.beta[2],
                ws.beta[3],
                ws.omega[0],
                ws.omega[1],
                ws.omega[2],
                ws.omega[3]
            );
        }
        let beta = weno::beta_bs7(&w);
        println!(
            "  tau variants: {:.3e} (default), {:.3e}",
            weno::tau_z7(&beta, TauVariant::Eighth),
            weno::tau_z7(&beta, TauVariant::Seventh)
        );
    }
}
