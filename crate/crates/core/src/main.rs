use clap::Parser;

use coincide::cli::{run, Cli, EXIT_OK, EXIT_USAGE};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            std::process::exit(EXIT_OK);
        }
        Err(e) => {
            eprintln!("coincide: {e}");
            std::process::exit(EXIT_USAGE);
        }
    }
}
