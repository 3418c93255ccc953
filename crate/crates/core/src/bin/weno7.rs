use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use weno7::harness::{self, RunConfig};
use weno7::Scheme;

#[derive(Parser)]
#[command(name = "weno7", version, about = "Seventh-order WENO solvers for conservation laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one configuration and write its artifacts.
    Run {
        config: PathBuf,
        #[arg(long)]
        scheme: Option<Scheme>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        faithful: bool,
    },
    /// Grid-refinement study of a registered problem.
    Convergence {
        problem: String,
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,80,160")]
        n: Vec<usize>,
        #[arg(long, default_value = "ns7")]
        scheme: Scheme,
        #[arg(long)]
        s_exp: Option<u32>,
        #[arg(long)]
        cfl: Option<f64>,
        #[arg(long)]
        faithful: bool,
        /// Write the table to this CSV file as well as stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run several configurations and merge them per problem and grid.
    Compare {
        #[arg(required = true)]
        configs: Vec<PathBuf>,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Coefficient-regeneration and tableau oracles.
    Selfcheck,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command) -> weno7::Result<ExitCode> {
    match command {
        Command::Run {
            config,
            scheme,
            n,
            out,
            faithful,
        } => {
            let mut c = RunConfig::from_file(&config)?;
            if let Some(s) = scheme {
                c.scheme = s;
            }
            if n.is_some() {
                c.n = n;
            }
            if out.is_some() {
                c.output_dir = out;
            }
            c.faithful |= faithful;
            let report = harness::run(&c)?;
            println!(
                "{} {} n={} steps={} wall={:.3}s",
                report.run.spec.name,
                report.run.scheme.scheme,
                report.run.n,
                report.stats.steps,
                report.stats.wall_seconds
            );
            if let Some((l1, linf)) = report.errors {
                println!("L1={l1:e} Linf={linf:e}");
            }
            for f in &report.files {
                println!("wrote {}", f.display());
            }
        }
        Command::Convergence {
            problem,
            n,
            scheme,
            s_exp,
            cfl,
            faithful,
            out,
        } => {
            let mut c = harness::convergence_config(&problem, scheme, faithful);
            c.s_exp = s_exp;
            if let Some(cfl) = cfl {
                c.cfl = cfl;
            }
            let rows = harness::convergence_study(&c.resolve()?, &n)?;
            let csv = harness::convergence_csv(&rows);
            print!("{csv}");
            if let Some(path) = out {
                if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir)?;
                }
                std::fs::write(path, csv)?;
            }
        }
        Command::Compare { configs, out } => {
            let configs = configs
                .iter()
                .map(|p| RunConfig::from_file(p))
                .collect::<weno7::Result<Vec<_>>>()?;
            for f in harness::compare(&configs, &out)? {
                println!("wrote {}", f.display());
            }
        }
        Command::Selfcheck => {
            let checks = harness::selfcheck();
            let mut ok = true;
            for c in &checks {
                ok &= c.passed();
                println!(
                    "{} {} (deviation {:e}, tolerance {:e})",
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.name,
                    c.deviation,
                    c.tolerance
                );
            }
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
