//! `hzeta`: verification runs, special-value tables, and representation
//! counts for the zeta functions of binary Hermitian forms.
//!
//! Exit codes: 0 when every requested check passes (or output was written),
//! 1 when a verification check fails, 2 on usage or configuration errors.

mod commands;
mod config;
mod output;

use clap::Parser;

use config::{Cli, Command};

fn resolve_threads(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("HZETA_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0) // rayon treats 0 as "number of cores"
}

fn run(cli: Cli) -> Result<i32, String> {
    let threads = resolve_threads(match &cli.command {
        Command::Verify(a) => a.output.threads,
        Command::Table(a) => a.output.threads,
        Command::Count(a) => a.output.threads,
        Command::Eisenstein(a) => a.output.threads,
        Command::Oracle(a) => a.output.threads,
    });
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| format!("cannot build thread pool: {e}"))?;
    pool.install(|| match cli.command {
        Command::Verify(args) => commands::verify(args),
        Command::Table(args) => commands::table(args),
        Command::Count(args) => commands::count(args),
        Command::Eisenstein(args) => commands::eisenstein(args),
        Command::Oracle(args) => commands::oracle(args),
    })
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    std::process::exit(code);
}
