use clap::Parser;
use latticelab::cli::{execute, Cli};

fn main() {
    match execute(Cli::parse()) {
        Ok(out) => {
            println!("{}", out.text.trim_end());
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
