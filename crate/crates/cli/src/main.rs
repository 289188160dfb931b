use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gkgrowth_cli::{failure, run, CliError, Command, Format, Options, RunConfig};

/// Gelfand-Kirillov dimension, multiplicity and growth of filtered algebras
/// and modules.
#[derive(Parser, Debug)]
#[command(name = "gkgrowth", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// JSON spec file.
    input: PathBuf,
    #[arg(long, default_value_t = 30)]
    max_degree: usize,
    #[arg(long, default_value_t = 6)]
    window: usize,
    #[arg(long, default_value_t = 8)]
    confirm: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Holonomic number to use instead of the built-in table.
    #[arg(long)]
    h_override: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        command: args.command,
        input_path: args.input,
        options: Options {
            max_degree: args.max_degree,
            window: args.window,
            confirm: args.confirm,
            h_override: args.h_override,
        },
        output: args.output,
        format: args.format,
    };
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| run(&config)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unexpected failure".into());
        failure(&CliError::Internal(msg), config.format)
    });
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit_code as u8)
}
