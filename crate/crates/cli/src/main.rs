//! Command line front end.
//!
//! Exit codes: 0 success, 1 hard error, 2 criterion failure (check and
//! approximate), 64 usage. Every parsed invocation appends one entry to the
//! run manifest, tying outputs to input digests and the numeric settings in
//! effect. `EQUILIB_THREADS` caps the worker pool.

mod args;
mod commands;
mod io;

use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use io::RunRecord;

fn init_thread_cap() {
    if let Ok(v) = std::env::var("EQUILIB_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn dispatch(cli: &Cli, rec: &mut RunRecord) -> Result<i32, io::CliError> {
    match &cli.command {
        Command::Potential(a) => commands::potential(a, rec),
        Command::Energy(a) => commands::energy_cmd(a, rec),
        Command::Capacity(a) => commands::capacity_cmd(a, rec),
        Command::Equilibrium(a) => commands::equilibrium(a, rec),
        Command::Check(a) => commands::check(a, rec),
        Command::Approximate(a) => commands::approximate(a, rec),
        Command::Enumerate(a) => commands::enumerate(a, rec),
        Command::Lift(a) => commands::lift(a, rec),
        Command::MeasureOf(a) => commands::measure_of(a, rec),
    }
}

fn run() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if help { 0 } else { 64 };
        }
    };
    init_thread_cap();
    let start = Instant::now();
    let mut rec = RunRecord::new(cli.command.name(), argv);
    let code = match dispatch(&cli, &mut rec) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    };
    rec.set_wall_time(start.elapsed().as_secs_f64());
    if let Err(err) = rec.append_to(&cli.manifest) {
        eprintln!("warning: could not append manifest: {err}");
    }
    code
}

fn main() {
    std::process::exit(run());
}
