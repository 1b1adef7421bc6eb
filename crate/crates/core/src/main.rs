use clap::Parser;

use codegree::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli) as i32);
}
