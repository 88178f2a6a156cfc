use std::io;
use std::process::ExitCode;

use clap::Parser;
use vilenkin_cli::{plan, run, Cli, Plan, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = plan(cli).and_then(|p| match p {
        Plan::Dump(cfg) => {
            print!("{}", cfg.to_toml());
            Ok(Status::Ok)
        }
        Plan::Execute(cfg) => run(&cfg, &mut io::stdout().lock(), &mut io::stderr().lock()),
    });
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed(what)) => {
            for w in what {
                eprintln!("failed: {w}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
