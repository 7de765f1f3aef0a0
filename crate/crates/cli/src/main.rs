use std::io::{Read, Write};
use std::process::ExitCode;

use bdcover::localfield::SymbolConvention;
use bdcover::verify::Grid;
use bdcover_cli::{execute, Command, Format, Options, EXIT_SCHEMA};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bdcover", version, about = "Invariants, centers, Hecke tables and representations of covers of tori")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// JSON input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,

    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,

    #[arg(long, global = true, default_value_t = SymbolConvention::Inverse)]
    symbol_convention: SymbolConvention,

    /// Parameter grid for `selftest`.
    #[arg(long, global = true, default_value_t = Grid::Full)]
    grid: Grid,

    #[arg(long, global = true, hide = true)]
    inject_sign_flip: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Sharp lattices, finite groups and indices of a datum.
    Invariants,
    /// Center and central core of a split cover.
    Center,
    /// Structure constants of the spherical Hecke algebra.
    HeckeTable,
    /// Genuine irreducible representation induced from a central character.
    Irrep,
    /// Tame Hilbert symbol of two elements.
    Hilbert,
    /// Global multiplicity bound.
    MultBound,
    /// Runs every property suite.
    Selftest,
}

fn read_input(path: &str) -> std::io::Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path)?;
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Invariants => Command::Invariants,
        Cmd::Center => Command::Center,
        Cmd::HeckeTable => Command::HeckeTable,
        Cmd::Irrep => Command::Irrep,
        Cmd::Hilbert => Command::Hilbert,
        Cmd::MultBound => Command::MultBound,
        Cmd::Selftest => Command::Selftest,
    };
    let opts = Options {
        format: match cli.format {
            OutFormat::Json => Format::Json,
            OutFormat::Table => Format::Table,
        },
        convention: cli.symbol_convention,
        grid: cli.grid,
        sign_flip: cli.inject_sign_flip,
    };
    let input = if command == Command::Selftest {
        None
    } else {
        match read_input(&cli.input) {
            Ok(s) => Some(s),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", cli.input);
                return ExitCode::from(EXIT_SCHEMA as u8);
            }
        }
    };
    let out = execute(command, input.as_deref(), &opts);
    // A closed pipe is not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
