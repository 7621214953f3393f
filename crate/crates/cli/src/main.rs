mod args;
mod commands;
mod figure;
mod params;

use std::fs;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use args::{Cli, Command, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, run): (&args::Common, fn(&args::Common) -> anyhow::Result<commands::Outcome>) = match &cli.command {
        Command::Classify(a) => (a, commands::classify_cmd),
        Command::Generator(a) => (a, commands::generator_cmd),
        Command::Act(a) => (a, commands::act_cmd),
        Command::Ladder(a) => (a, commands::ladder_cmd),
        Command::Hw(a) => (a, commands::hw_cmd),
        Command::OracleSweep(a) => (a, commands::sweep_cmd),
        Command::FiltrationCheck(a) => (a, commands::filtration_cmd),
        Command::Figure(a) => (a, commands::figure_cmd),
    };
    let default_format = if matches!(cli.command, Command::Figure(_)) { Format::Dot } else { Format::Json };
    let format = args.format.unwrap_or(default_format);

    let result = run(args).and_then(|outcome| {
        let rendered = outcome.render(format)?;
        match &args.output {
            Some(path) => fs::write(path, &rendered).with_context(|| format!("--output: cannot write {}", path.display()))?,
            None => print!("{rendered}"),
        }
        Ok(outcome.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
