use std::process::ExitCode;

use clap::Parser;
use grascat::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(f) => {
            println!("{}", serde_json::to_string_pretty(&f.to_json()).expect("JSON values serialize"));
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
