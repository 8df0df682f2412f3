use clap::Parser;
use superprob_cli::{Cli, Format};

fn main() {
    let cli = Cli::parse();
    let invocation: Vec<String> = std::env::args().collect();
    match superprob_cli::run(&cli, invocation) {
        Ok(outcome) => {
            match outcome.format {
                Format::Machine => println!("{}", outcome.report.to_machine_string()),
                Format::Table => print!("{}", outcome.report.to_table_string()),
            }
            std::process::exit(outcome.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
