//! Command-line tool for constructing and verifying exceptional Jacobi operators.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use xjacobi::cli::{
    cmd_construct, cmd_decode, cmd_rdt, cmd_render, cmd_verify, parse_checks, parse_rational_arg, CliError, EXIT_PARSE, EXIT_VERIFY,
};

#[derive(Parser)]
#[command(name = "xjacobi", version, about = "Exact construction and verification of exceptional Jacobi operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family and print its operator, eigenfunctions and norms as JSON.
    Construct {
        spec: PathBuf,
        /// Number of eigenfunctions to materialize.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Run checks over a family; exits with 1 if any check fails.
    Verify {
        spec: PathBuf,
        #[arg(long)]
        window: Option<usize>,
        /// Comma-separated checks: eigen, ortho, norm, regularity, flips, degree, index.
        #[arg(long, default_value = "")]
        checks: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the spectral diagram of a family.
    Render {
        spec: PathBuf,
        /// Cells shown on each side of zero.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Apply one Darboux step, or a confluent pair with --cdt, to a family's operator.
    Rdt {
        spec: PathBuf,
        #[arg(long = "type")]
        iota: u8,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        /// Deformation parameter of a confluent step.
        #[arg(long, allow_hyphen_values = true)]
        cdt: Option<String>,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Recover the canonical specification of a rendered diagram.
    Decode { diagram: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Construct { spec, window } => Ok((cmd_construct(&read(&spec)?, window)?, true)),
        Command::Verify {
            spec,
            window,
            checks,
            json,
        } => cmd_verify(&read(&spec)?, window, &parse_checks(&checks)?, json),
        Command::Render { spec, window } => Ok((cmd_render(&read(&spec)?, window)?, true)),
        Command::Rdt {
            spec,
            iota,
            index,
            cdt,
            window,
        } => {
            let t = cdt.as_deref().map(parse_rational_arg).transpose()?;
            Ok((cmd_rdt(&read(&spec)?, window, iota, index, t.as_ref())?, true))
        }
        Command::Decode { diagram } => Ok((cmd_decode(&read(&diagram)?)?, true)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
