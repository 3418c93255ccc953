//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::time::Instant;

use weno7::discretization::{max_wave_speed, Discretization};
use weno7::harness::output::min_density_pressure_2d;
use weno7::harness::reference::output_columns;
use weno7::harness::simulate::{boundary_for, grid_1d, initial_field_1d};
use weno7::harness::{
    convergence_config, convergence_study, norms, selfcheck, simulate_1d, simulate_2d, ConvergenceRow,
    ReferenceSolution, RunConfig, REFINEMENT_SWEEP,
};
use weno7::problems::make_problem;
use weno7::time::{lssprk87_naive_first_order_sum, lssprk87_step, ssprk54_step, LSSPRK87_ALPHA};
use weno7::weno::{self, IDEAL_WEIGHTS, UNDIVIDED_COEFFS};
use weno7::{Field, Scheme, SchemeConfig, StencilWindow};

type Outcome = Result<(bool, String), weno7::Error>;
type Criterion = (&'static str, fn() -> Outcome);

fn final_order(rows: &[ConvergenceRow]) -> f64 {
    rows.last().and_then(|r| r.l1_order).unwrap_or(f64::NAN)
}

fn table(problem: &str, scheme: Scheme, s_exp: Option<u32>) -> Result<Vec<ConvergenceRow>, weno7::Error> {
    let mut c = convergence_config(problem, scheme, false);
    c.s_exp = s_exp;
    convergence_study(&c.resolve()?, &REFINEMENT_SWEEP)
}

fn smooth_accuracy() -> Outcome {
    let start = Instant::now();
    let rows = table("advect_sine", Scheme::Ns7, None)?;
    let secs = start.elapsed().as_secs_f64();
    let (order, err) = (final_order(&rows), rows[4].l1_err);
    let published = 2.0637e-12;
    let faithful = convergence_study(&convergence_config("advect_sine", Scheme::Ns7, true).resolve()?, &REFINEMENT_SWEEP)?;
    let ok = (6.5..=7.5).contains(&order) && err <= 5.0 * published && err >= published / 5.0 && secs < 30.0;
    Ok((
        ok,
        format!(
            "order {order:.3} in [6.5, 7.5], L1(160) {err:.4e} vs {published:e} (x{:.2}), sweep {secs:.2}s < 30s; \
             faithful protocol (lSSPRK87, CFL 0.5): order {:.3}, L1(160) {:.4e}",
            err / published,
            final_order(&faithful),
            faithful[4].l1_err
        ),
    ))
}

fn cp1_accuracy() -> Outcome {
    let order = final_order(&table("advect_cp1", Scheme::Ns7, None)?);
    Ok((order >= 6.5, format!("order {order:.3} >= 6.5")))
}

fn cp2_accuracy() -> Outcome {
    let s2 = final_order(&table("advect_cp2", Scheme::Ns7, Some(2))?);
    let s1 = final_order(&table("advect_cp2", Scheme::Ns7, Some(1))?);
    Ok((s2 >= 6.5 && s1 < 6.0, format!("s=2 order {s2:.3} >= 6.5; s=1 order {s1:.3} < 6")))
}

fn baselines() -> Outcome {
    let ns = final_order(&table("advect_sine", Scheme::Ns7, None)?);
    let bs = final_order(&table("advect_sine", Scheme::Bs7, None)?);
    let z = final_order(&table("advect_sine", Scheme::Z7, None)?);
    Ok((
        bs <= ns - 0.3 && bs <= 6.5 && (z - ns).abs() <= 0.3,
        format!("NS7 {ns:.3}, BS7 {bs:.3} (<= NS7 - 0.3, <= 6.5), Z7 {z:.3} (within 0.3 of NS7)"),
    ))
}

fn max_weight_deviation(problem: &str, n: usize) -> Result<f64, weno7::Error> {
    let spec = make_problem(problem)?;
    let cfg = SchemeConfig::ns7().with_xi(spec.default_xi.0, spec.default_xi.1);
    let grid = grid_1d(&spec, n);
    let mut field = initial_field_1d(&spec, &grid);
    boundary_for(spec.bc, &field).fill_1d(&mut field);
    let sets = Discretization::new(spec.model, cfg).interface_weights_1d(&field, &grid, 0)?;
    Ok(sets
        .iter()
        .flat_map(|(_, w)| w.omega.iter().zip(IDEAL_WEIGHTS).map(|(o, d)| (o - d).abs()))
        .fold(0.0, f64::max))
}

fn weight_slopes() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for problem in ["advect_sine", "advect_cp1", "advect_cp2"] {
        let pts = [40, 80, 160]
            .iter()
            .map(|&n| Ok((2.0 / n as f64, max_weight_deviation(problem, n)?)))
            .collect::<Result<Vec<_>, weno7::Error>>()?;
        let slope = common::log_slope(&pts);
        ok &= slope >= 4.0;
        detail.push(format!("{problem} {slope:.2}"));
    }
    Ok((ok, format!("slopes over N=40..160: {} (>= 4)", detail.join(", "))))
}

fn kernels() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;

    for row in weno::CANDIDATE_COEFFS {
        worst = worst.max((row.iter().sum::<f64>() - 1.0).abs());
    }

    // linear flux difference reproduces f'(x_j) dx for degree <= 6
    for m in 0..=6 {
        let f = |x: f64| (0.1 * x + 0.3).powi(m);
        let df = |x: f64| if m == 0 { 0.0 } else { 0.1 * m as f64 * (0.1 * x + 0.3).powi(m - 1) };
        let window = |c: i32| StencilWindow::new(std::array::from_fn(|i| f((c + i as i32 - 3) as f64)));
        let diff = weno::reconstruct_linear(&window(0)) - weno::reconstruct_linear(&window(-1));
        worst = worst.max((diff - df(0.0)).abs() / 1.0f64.max(df(0.0).abs()));
    }

    for (k, rows) in UNDIVIDED_COEFFS.iter().enumerate() {
        for (s, row) in rows.iter().enumerate() {
            let a = (0..4)
                .map(|m| {
                    (0..4)
                        .map(|l| (k as f64 - 3.5 + l as f64).powi(m) / [1.0, 1.0, 2.0, 6.0][m as usize])
                        .collect()
                })
                .collect();
            let rhs = (0..4).map(|m| if m == s + 1 { 1.0 } else { 0.0 }).collect();
            let solved = common::solve(a, rhs);
            for (c, o) in row.iter().zip(solved) {
                worst = worst.max((c - o).abs());
            }
        }
    }

    let mut seed = 0x2545_f491_4f6c_dd1du64;
    for _ in 0..200 {
        let w = StencilWindow::new(std::array::from_fn(|_| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        }));
        let printed = weno::beta_bs7(&w);
        let quad = common::bs_indicator_quadrature(&w);
        for (p, q) in printed.iter().zip(quad) {
            worst = worst.max((p - q).abs() / p.abs().max(1e-300));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok((worst <= 1e-12 && secs < 1.0, format!("max relative deviation {worst:.2e} <= 1e-12 in {secs:.3}s < 1s")))
}

fn conservation() -> Outcome {
    let mut c = RunConfig::new("burgers_moving", Scheme::Ns7);
    c.t_final = Some(0.4);
    let run = c.resolve()?;
    let grid = grid_1d(&run.spec, run.n);
    let mut field = initial_field_1d(&run.spec, &grid);
    let bc = boundary_for(run.spec.bc, &field);
    let disc = Discretization::new(run.spec.model, run.scheme);
    let total0: f64 = field.interior(0).iter().sum();
    let (mut t, mut drift) = (0.0, 0.0f64);
    while t < run.control.t_final {
        bc.fill_1d(&mut field);
        let dt = run.control.dt_1d(t, grid.dx, max_wave_speed(&field, &disc.model)?);
        run.integrator.step(&mut field, dt, |u| disc.residual_1d(u, &grid, &bc))?;
        t = if dt >= run.control.t_final - t { run.control.t_final } else { t + dt };
        let total: f64 = field.interior(0).iter().sum();
        drift = drift.max(((total - total0) / total0).abs());
    }
    Ok((drift <= 1e-12, format!("max relative drift of sum u_j {drift:.2e} <= 1e-12 (N={})", run.n)))
}

fn sod() -> Outcome {
    let run = RunConfig::new("sod_modified", Scheme::Ns7).with_n(200).resolve()?;
    let (grid, field, _) = simulate_1d(&run)?;
    let cols = output_columns(&field, &run.spec.model)?;
    let exact = ReferenceSolution::build(&run, run.n)?.expect("exact Riemann reference").sample_grid(&grid)?;
    let (l1, _) = norms(&cols[0], &exact[0])?;
    let finite = field.data().iter().all(|v| v.is_finite());
    let (rmin, pmin) = (cols[0].iter().copied().fold(f64::INFINITY, f64::min), cols[2].iter().copied().fold(f64::INFINITY, f64::min));
    let (lo, hi) = exact[0].iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    let jump = hi - lo;
    let over = cols[0].iter().map(|&r| (r - hi).max(lo - r).max(0.0)).fold(0.0, f64::max) / jump;
    Ok((
        finite && rmin > 0.0 && pmin > 0.0 && l1 <= 5e-3 && over <= 0.01,
        format!("finite {finite}, min rho {rmin:.4}, min p {pmin:.4}, density L1 {l1:.3e} <= 5e-3, overshoot {over:.2e} of jump <= 1e-2"),
    ))
}

fn shock_entropy() -> Outcome {
    let start = Instant::now();
    let run = RunConfig::new("shock_entropy", Scheme::Ns7).resolve()?;
    let reference = ReferenceSolution::build(&run, 400)?.expect("fine-grid reference");
    let mut dist = Vec::new();
    for n in [200, 400] {
        let (grid, field, _) = simulate_1d(&run.with_n(n))?;
        let exact = reference.sample_grid(&grid)?;
        dist.push(norms(&output_columns(&field, &run.spec.model)?[0], &exact[0])?.0);
    }
    let secs = start.elapsed().as_secs_f64();
    let ratio = dist[0] / dist[1];
    Ok((
        ratio >= 2.0 && secs < 120.0,
        format!("L1 to N=3200 reference: N=200 {:.3e}, N=400 {:.3e}, ratio {ratio:.2} >= 2; {secs:.1}s < 120s", dist[0], dist[1]),
    ))
}

fn riemann_2d() -> Outcome {
    let run = RunConfig::new("riemann2d", Scheme::Ns7).with_n(200).resolve()?;
    let (_, field, stats) = simulate_2d(&run)?;
    let (rmin, pmin) = min_density_pressure_2d(&field, run.spec.gamma())?;
    let mut asym = 0.0f64;
    for iy in 0..200 {
        for ix in 0..200 {
            asym = asym.max((field.get(0, ix, iy) - field.get(0, iy, ix)).abs());
        }
    }
    Ok((
        rmin > 0.0 && pmin > 0.0 && asym <= 1e-3,
        format!(
            "200x200 to t={}: {} steps in {:.1}s, min rho {rmin:.4}, min p {pmin:.4}, swap asymmetry {asym:.2e} <= 1e-3",
            stats.t, stats.steps, stats.wall_seconds
        ),
    ))
}

fn integrators() -> Outcome {
    let decay = |lambda: f64| move |u: &mut Vec<f64>| -> weno7::Result<Vec<f64>> { Ok(u.iter().map(|x| lambda * x).collect()) };
    let error = |steps: usize| -> weno7::Result<f64> {
        let mut u = vec![1.0];
        let dt = 1.0 / steps as f64;
        for _ in 0..steps {
            ssprk54_step(&mut u, dt, decay(-1.0))?;
        }
        Ok((u[0] - (-1.0f64).exp()).abs())
    };
    let order = (error(20)? / error(40)?).log2();

    let mut poly = 0.0f64;
    for z in [-1.5f64, -0.7, -0.1, 0.3] {
        let closed: f64 = (0..7).map(|k| LSSPRK87_ALPHA[k] * (1.0 + z / 2.0).powi(k as i32)).sum::<f64>()
            + LSSPRK87_ALPHA[7] * (1.0 + z / 2.0).powi(8);
        let mut u = vec![1.0];
        lssprk87_step(&mut u, 1.0, decay(z))?;
        poly = poly.max((u[0] - closed).abs());
    }
    let naive = lssprk87_naive_first_order_sum();
    let checks_ok = selfcheck().iter().all(|c| c.passed());
    Ok((
        (order - 4.0).abs() <= 0.2 && poly <= 1e-14 && (naive - 629.0 / 630.0).abs() <= 1e-15 && checks_ok,
        format!(
            "SSPRK(5,4) order {order:.3} (4 +- 0.2); lSSPRK(8,7) vs closed form {poly:.1e} <= 1e-14; \
             naive first-order sum {naive:.15} = 629/630; selfcheck {}",
            if checks_ok { "clean" } else { "failing" }
        ),
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("smooth advection accuracy", smooth_accuracy),
        ("first-order critical point", cp1_accuracy),
        ("second-order critical point", cp2_accuracy),
        ("baseline contrast BS7/Z7", baselines),
        ("weight deviation slope", weight_slopes),
        ("kernel exactness", kernels),
        ("Burgers conservation", conservation),
        ("modified Sod tube", sod),
        ("shock-entropy self-convergence", shock_entropy),
        ("2D Riemann problem", riemann_2d),
        ("integrator oracles", integrators),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let (ok, detail) = match check() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
