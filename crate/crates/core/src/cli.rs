//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or comparison fails (or an
//! inverse stage rejects its input), 2 on usage and input errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use thiserror::Error;

use crate::bijection::{phi, phi_inverse, trace_stages, BijectionError, Direction};
use crate::families::{count, for_each_class_a, for_each_class_b};
use crate::oeis::{compare_sequence, parse_bfile_named};
use crate::path::{components, parse_path, Path, PathClass};
use crate::permutations::{count_avoiders_bounded, parse_patterns, DEFAULT_EXHAUSTIVE_BOUND};
use crate::render::render_ascii;
use crate::verify::verify_up_to;

#[derive(Debug, Parser)]
#[command(
    name = "pathbij",
    version,
    about = "Enumerate, count and biject Grand Schröder path classes A and B"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<ClassArg> for PathClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::A => PathClass::A,
            ClassArg::B => PathClass::B,
        }
    }
}

fn path_arg(s: &str) -> Result<Path, String> {
    parse_path(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every path of a class and size, one per line, in ASCII order
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        size: usize,
        /// Height of the flat line for class A (default 2)
        #[arg(long, allow_negative_numbers = true)]
        flat_line: Option<i32>,
    },
    /// Print the exact number of paths of a class and size
    Count {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        size: usize,
    },
    /// Map a class-A path to class B
    Map {
        #[arg(long, value_parser = path_arg, allow_hyphen_values = true)]
        path: Path,
        /// Print every intermediate stage of each component
        #[arg(long)]
        trace: bool,
    },
    /// Map a class-B path back to class A
    Unmap {
        #[arg(long, value_parser = path_arg, allow_hyphen_values = true)]
        path: Path,
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively check the bijection and the counters for sizes 0..=N
    Verify {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Also compare indecomposable counts by side and peak count
        #[arg(long)]
        census: bool,
    },
    /// Count permutations of [n] avoiding every listed pattern
    Perms {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "3241,3421,4321")]
        patterns: String,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BOUND)]
        bound: usize,
    },
    /// Compare computed counts for sizes 0..=N with an OEIS b-file
    Oeis {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        max_size: usize,
        /// b-file index holding the size-0 count
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
    },
    /// Draw a path as ASCII art
    Render {
        #[arg(long, value_parser = path_arg, allow_hyphen_values = true)]
        path: Path,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        match e {
            BijectionError::NotInClass { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

/// Parse `args` (including the program name) and execute, writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Enumerate {
            class,
            size,
            flat_line,
        } => {
            let mut out = io::BufWriter::new(out);
            let mut result = Ok(());
            let mut emit = |p: &Path| {
                if result.is_ok() {
                    result = writeln!(out, "{p}");
                }
            };
            match (class, flat_line) {
                (ClassArg::A, line) => for_each_class_a(size, line.unwrap_or(2), &mut emit),
                (ClassArg::B, None) => for_each_class_b(size, &mut emit),
                (ClassArg::B, Some(_)) => {
                    return Err(CliError::Usage(
                        "--flat-line applies to class A only".to_string(),
                    ))
                }
            }
            result?;
            out.flush()?;
            Ok(0)
        }
        Command::Count { class, size } => {
            writeln!(out, "{}", count(class.into(), size))?;
            Ok(0)
        }
        Command::Map { path, trace } => map_command(&path, trace, Direction::Forward, out),
        Command::Unmap { path, trace } => map_command(&path, trace, Direction::Inverse, out),
        Command::Verify { max_size, census } => {
            let reports = verify_up_to(max_size, census);
            let mut failed = false;
            for report in &reports {
                writeln!(out, "{report}")?;
                failed |= !report.ok();
            }
            Ok(if failed { 1 } else { 0 })
        }
        Command::Perms { n, patterns, bound } => {
            let patterns = parse_patterns(&patterns).map_err(|e| CliError::Usage(e.to_string()))?;
            let total = count_avoiders_bounded(n, &patterns, bound)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            writeln!(out, "{total}")?;
            Ok(0)
        }
        Command::Oeis {
            bfile,
            class,
            max_size,
            offset,
        } => {
            let text = std::fs::read_to_string(&bfile)
                .map_err(|e| CliError::Usage(format!("{}: {e}", bfile.display())))?;
            let table = parse_bfile_named(&text, &bfile.display().to_string())
                .map_err(|e| CliError::Usage(format!("{}: {e}", bfile.display())))?;
            let computed: Vec<BigInt> = (0..=max_size)
                .map(|n| BigInt::from(count(class.into(), n)))
                .collect();
            let report = compare_sequence(&computed, &table, offset)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            for (n, got) in computed.iter().enumerate().take(report.matches) {
                writeln!(out, "n={n}: a({})={got} ok", offset + n as i64)?;
            }
            writeln!(out, "{report}")?;
            Ok(if report.is_match() { 0 } else { 1 })
        }
        Command::Render { path } => {
            let art = render_ascii(&path);
            if !art.is_empty() {
                writeln!(out, "{art}")?;
            }
            Ok(0)
        }
    }
}

fn map_command(
    path: &Path,
    trace: bool,
    direction: Direction,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let image = match direction {
        Direction::Forward => phi(path)?,
        Direction::Inverse => phi_inverse(path)?,
    };
    if trace {
        let view = components(path).map_err(|e| CliError::Usage(e.to_string()))?;
        for (i, c) in view.iter().enumerate() {
            writeln!(out, "component {} at vertex {}", i + 1, c.start)?;
            write!(out, "{}", trace_stages(&c.path, direction)?)?;
        }
    }
    writeln!(out, "{image}")?;
    Ok(0)
}
