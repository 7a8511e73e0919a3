//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage or I/O error, 2 domain error (including
//! malformed edge lines), 3 failed verification.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::check::{run_checks, Formulas, DEFAULT_LIMIT};
use crate::codec::encode_edge_stream;
use crate::error::Error;
use crate::table::{render_table, TableFormat, TableSpec, DEFAULT_SIZE};
use crate::{pair, parse_natural, unpair, Natural, Scheme};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sympair", version, about = "Symmetric and Cantor pairing functions over big integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode a pair (m, n) as a single natural.
    Pair {
        /// cantor, f or g
        #[arg(value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(value_parser = parse_natural_arg)]
        m: Natural,
        #[arg(value_parser = parse_natural_arg)]
        n: Natural,
    },
    /// Decode a natural into "m n" (canonical m >= n for f and g).
    Unpair {
        #[arg(value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(value_parser = parse_natural_arg)]
        code: Natural,
    },
    /// Print a grid of values, rows indexing m and columns indexing n.
    Table {
        #[arg(value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        rows: usize,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        cols: usize,
        /// First row index (defaults to the scheme's origin).
        #[arg(long, value_parser = parse_natural_arg)]
        row_start: Option<Natural>,
        /// First column index (defaults to the scheme's origin).
        #[arg(long, value_parser = parse_natural_arg)]
        col_start: Option<Natural>,
        #[arg(long)]
        csv: bool,
    },
    /// Run the property suite and print a summary.
    Check {
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
    },
    /// Key every "u v" line of an edge list; "-" reads standard input.
    Edges {
        #[arg(value_parser = parse_scheme)]
        scheme: Scheme,
        input: PathBuf,
    },
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_natural_arg(s: &str) -> Result<Natural, String> {
    parse_natural(s).ok_or_else(|| format!("`{s}` is not a decimal natural"))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InverseMismatch(_) => EXIT_CHECK_FAILED,
        e if e.is_domain() => EXIT_DOMAIN,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Pair { scheme, m, n } => {
            writeln!(out, "{}", pair(scheme, &m, &n)?)?;
        }
        Command::Unpair { scheme, code } => {
            let (m, n) = unpair(scheme, &code)?;
            writeln!(out, "{m} {n}")?;
        }
        Command::Table { scheme, rows, cols, row_start, col_start, csv } => {
            let mut spec = TableSpec::new(scheme, rows, cols);
            if let Some(r) = row_start {
                spec.row_start = r;
            }
            if let Some(c) = col_start {
                spec.col_start = c;
            }
            if csv {
                spec.format = TableFormat::Csv;
            }
            out.write_all(render_table(&spec)?.as_bytes())?;
        }
        Command::Check { limit } => {
            let report = run_checks(limit, &Formulas::default())?;
            writeln!(out, "{report}")?;
            if !report.all_passed() {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Edges { scheme, input } => {
            if input.as_os_str() == "-" {
                encode_edge_stream(stdin, scheme, &mut *out)?;
            } else {
                let file = BufReader::new(File::open(&input)?);
                encode_edge_stream(file, scheme, &mut *out)?;
            }
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}
