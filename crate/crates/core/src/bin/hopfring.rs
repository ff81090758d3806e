use clap::Parser;
use hopfring::cli::{main_with, RunConfig};

fn main() {
    let cfg = RunConfig::parse();
    std::process::exit(main_with(&cfg));
}
