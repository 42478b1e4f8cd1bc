use std::process::ExitCode;

use clap::{Parser, Subcommand};
use suppcalc_cli::{render, run_source, run_suite, Format, Outcome, RunOptions};

#[derive(Parser)]
#[command(name = "suppcalc", version, about = "Supports, co-supports and adic finiteness of complexes")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Seed for `verify` commands that do not give one.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search bound for co-support and adic queries.
    #[arg(long, global = true)]
    bound: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session file.
    Run { file: std::path::PathBuf },
    /// Run a named verification suite over QQ[x,y].
    Verify {
        suite: String,
        #[arg(long)]
        count: Option<usize>,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("SUPPCALC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    let opts = RunOptions { seed: cli.seed, bound: cli.bound };
    let outcome: Outcome = match &cli.command {
        Cmd::Run { file } => match std::fs::read_to_string(file) {
            Ok(text) => run_source(&text, &opts),
            Err(e) => {
                eprintln!("cannot read {}: {e}", file.display());
                return ExitCode::from(1);
            }
        },
        Cmd::Verify { suite, count } => run_suite(suite, Some(cli.seed), *count, &opts),
    };
    print!("{}", render(&outcome.reports, cli.format));
    if let Some(e) = &outcome.error {
        eprintln!("{e}");
    }
    ExitCode::from(outcome.exit_code() as u8)
}
