//! Binary entry point; all behavior lives in the library's `cli` module.

use clap::Parser;

fn main() {
    let cli = qclone::cli::Cli::parse();
    if let Err(failure) = qclone::cli::run(&cli) {
        eprintln!("error: {}", failure.message());
        std::process::exit(failure.exit_code());
    }
}
