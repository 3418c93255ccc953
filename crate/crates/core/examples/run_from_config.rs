//! Run JSON configurations the same way the CLI does. With one path the
//! run's artifacts are written; with several they are also merged.
//!
//! `cargo run --release --example run_from_config -- configs/burgers_steady.json`
use std::path::PathBuf;

use weno7::harness::{compare, run, RunConfig};

fn main() -> weno7::Result<()> {
    let paths: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    if paths.is_empty() {
        eprintln!("usage: run_from_config <config.json>...");
        std::process::exit(2);
    }
    let configs = paths.iter().map(|p| RunConfig::from_file(p)).collect::<weno7::Result<Vec<_>>>()?;
    for c in &configs {
        let report = run(c)?;
        println!("{} {}: {} steps", report.run.spec.name, report.run.scheme.scheme, report.stats.steps);
        if let Some((l1, linf)) = report.errors {
            println!("  L1 {l1:.4e}  Linf {linf:.4e}");
        }
        for f in report.files {
            println!("  wrote {}", f.display());
        }
    }
    if configs.len() > 1 {
        for f in compare(&configs, &PathBuf::from("out"))? {
            println!("wrote {}", f.display());
        }
    }
    Ok(())
}
