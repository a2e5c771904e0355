//! Library side of the `sdualkit` binary: command implementations that
//! return their rendered output, the verification suite, and the REPL.

pub mod commands;
pub mod repl;
pub mod verify;

use std::io::Read;
use std::path::Path;

use sdualkit_core::Error as CoreError;

/// Fixed seed for randomized checks unless `SDUALKIT_SEED` overrides it.
pub const DEFAULT_SEED: u64 = 0x5d0a_1c17;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::RankTooHigh(_)
            | CoreError::UnsupportedDiagram(_)
            | CoreError::NoKnownDual(_)
            | CoreError::UnknownCoulombDimension(_)
            | CoreError::NonAdmissible(_)
            | CoreError::SameTypePair(_)
            | CoreError::IndexOutOfRange { .. }
            | CoreError::OutsideKernel(_) => CliError::Unsupported(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Seed for randomized checks.
pub fn seed_from_env() -> CliResult<u64> {
    match std::env::var("SDUALKIT_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("SDUALKIT_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Resolves an input argument: `-` reads stdin, an existing path is read
/// from disk, anything else is taken literally.
pub fn read_input(arg: &str) -> CliResult<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("reading {arg}: {e}")));
    }
    Ok(arg.to_string())
}

/// Parses a comma list like `0,1,2,3` or `[0,1,2,3]`.
pub fn parse_usize_list(s: &str) -> CliResult<Vec<usize>> {
    let inner = s.trim();
    let inner = inner.strip_prefix('[').unwrap_or(inner);
    let inner = inner.strip_suffix(']').unwrap_or(inner).trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("expected a nonnegative integer, found {:?}", t.trim())))
        })
        .collect()
}
