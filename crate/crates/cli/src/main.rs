use std::path::PathBuf;
use std::process::ExitCode;

use bihom_cli::{parse_degrees, parse_input, run_command, CliError, Flags, Format};
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

/// Check BiHom-Lie structures and compute their cohomology.
#[derive(Debug, Parser)]
#[command(name = "bihom", version)]
struct Args {
    /// check, compat, cohomology, ccohomology, twist, nijenhuis,
    /// rota-baxter, mc or chainmap
    command: String,
    /// JSON input document
    input: PathBuf,
    #[arg(long)]
    bracket: Option<String>,
    #[arg(long)]
    bracket2: Option<String>,
    #[arg(long)]
    rep: Option<String>,
    #[arg(long)]
    action: Option<String>,
    #[arg(long)]
    action2: Option<String>,
    /// Inclusive range such as 0..2
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long)]
    operator: Option<String>,
    #[arg(long)]
    operator2: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

fn run(args: Args) -> Result<(String, i32), CliError> {
    let degrees = args.degrees.as_deref().map(parse_degrees).transpose()?;
    let flags = Flags {
        bracket: args.bracket,
        bracket2: args.bracket2,
        rep: args.rep,
        action: args.action,
        action2: args.action2,
        degrees,
        operator: args.operator,
        operator2: args.operator2,
        seed: args.seed,
    };
    let doc = parse_input(&args.input)?;
    let report = run_command(&doc, &args.command, &flags)?;
    let format = match args.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Machine => Format::Machine,
    };
    Ok((report.render(format), report.exit_code()))
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
