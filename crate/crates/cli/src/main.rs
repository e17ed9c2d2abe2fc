//! The `midband` binary: parse, run, map failures to exit codes.

use clap::Parser;

fn main() {
    let cli = midband_cli::cli::Cli::parse();
    if let Err(failure) = midband_cli::cli::run(&cli) {
        eprintln!("error: {failure}");
        std::process::exit(failure.exit_code());
    }
}
