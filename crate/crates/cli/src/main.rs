mod args;
mod commands;
mod output;

use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { output::EXIT_USAGE } else { output::EXIT_OK });
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(output::EXIT_USAGE);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    if cli.budget == 0 {
        eprintln!("error: --budget must be positive");
        return ExitCode::from(output::EXIT_USAGE);
    }
    match commands::run(&cli) {
        Ok(report) => match report.render(cli.format) {
            Ok(text) => {
                print!("{text}");
                ExitCode::from(if report.failed { output::EXIT_COUNTEREXAMPLE } else { output::EXIT_OK })
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(output::EXIT_USAGE)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(output::exit_code(&e))
        }
    }
}
