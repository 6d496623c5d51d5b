use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use skewviz::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let result = RunConfig::try_from(cli)
        .and_then(|config| run(&config, &mut io::stdout().lock(), &mut io::stderr().lock()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("skewviz: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
