//! Front end shared by the `bdcover` binary and its tests.

pub mod commands;
pub mod render;
pub mod schema;

use std::fmt;

use bdcover::localfield::SymbolConvention;
use bdcover::verify::Grid;
use serde_json::Value;

use schema::{BoundInput, CoverInput, DatumInput, HeckeInput, HilbertInput, IrrepInput, SchemaError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Schema(SchemaError),
    Unsupported(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => EXIT_SCHEMA,
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            CliError::Failure(_) => EXIT_INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema(e) => write!(f, "schema error at {e}"),
            CliError::Unsupported(m) => write!(f, "unsupported: {m}"),
            CliError::Failure(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        CliError::Schema(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Invariants,
    Center,
    HeckeTable,
    Irrep,
    Hilbert,
    MultBound,
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub format: Format,
    pub convention: SymbolConvention,
    pub grid: Grid,
    /// Selftest only: drop the sign term of the symbol.
    pub sign_flip: bool,
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => render::json(v),
        Format::Table => render::table(v),
    }
}

fn dispatch(cmd: Command, input: &Value, opts: &Options) -> Result<Value, CliError> {
    let conv = opts.convention;
    match cmd {
        Command::Invariants => commands::invariants(&DatumInput::parse(input)?),
        Command::Center => commands::center_report(&CoverInput::parse(input)?, conv),
        Command::HeckeTable => commands::hecke_table(&HeckeInput::parse(input)?, conv),
        Command::Irrep => commands::irrep(&IrrepInput::parse(input)?, conv),
        Command::Hilbert => commands::hilbert_symbol(&HilbertInput::parse(input)?, conv),
        Command::MultBound => commands::mult_bound(&BoundInput::parse(input)?),
        Command::Selftest => unreachable!("selftest takes no input"),
    }
}

/// Runs one command. `input` is the raw JSON text and is ignored by `selftest`.
pub fn execute(cmd: Command, input: Option<&str>, opts: &Options) -> Outcome {
    if cmd == Command::Selftest {
        let out = commands::selftest(opts.grid, opts.convention, opts.sign_flip);
        let mut stderr = String::new();
        for w in &out.warnings {
            stderr.push_str(&format!("warning: {w}\n"));
        }
        for f in &out.failures {
            stderr.push_str(&format!(
                "FAIL {}/{}: {}\n",
                f.module,
                f.name,
                f.witness.as_deref().unwrap_or("")
            ));
        }
        let code = if out.failures.is_empty() { EXIT_OK } else { EXIT_SELFTEST_FAILED };
        return Outcome {
            code,
            stdout: render(&out.report, opts.format),
            stderr,
        };
    }
    let result = match input {
        None => Err(CliError::Schema(SchemaError::new("", "no input document"))),
        Some(text) => serde_json::from_str::<Value>(text)
            .map_err(|e| CliError::Schema(SchemaError::new("", format!("invalid JSON: {e}"))))
            .and_then(|v| dispatch(cmd, &v, opts)),
    };
    match result {
        Ok(v) => Outcome {
            code: EXIT_OK,
            stdout: render(&v, opts.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
