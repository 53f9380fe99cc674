//! File formats, reports and the `lomat` command line for `lomat-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use lomat_core::ring::RingKind;

pub use cli::{Cli, Command};
pub use error::CliError;
pub use report::{Check, Report};

use crate::commands::{check_cone, classify2, oracle_run, solve_weinberg, verify_structure, weinberg_iso};
use crate::format::{parse_ring, read_cone, read_structure};

fn file_ring(path: &Path, code: &str, wanted: Option<cli::RingArg>) -> Result<RingKind, CliError> {
    let kind = parse_ring(code, "ring").map_err(|message| CliError::Input { path: path.into(), message })?;
    match wanted.map(RingKind::from) {
        Some(w) if w != kind => Err(CliError::Usage(format!(
            "{}: file is over `{kind}` but --ring {w} was given",
            path.display()
        ))),
        _ => Ok(kind),
    }
}

fn require_seed(samples: usize, seed: Option<u64>) -> Result<(), CliError> {
    if samples > 0 && seed.is_none() {
        return Err(CliError::Usage("--samples needs an explicit --seed".into()));
    }
    Ok(())
}

/// Refuses to let `--out` overwrite the input file.
fn guard_output(input: Option<&Path>, out: Option<&Path>) -> Result<(), CliError> {
    if let (Some(i), Some(o)) = (input, out) {
        let same = match (i.canonicalize(), o.canonicalize()) {
            (Ok(a), Ok(b)) => a == b,
            _ => i == o,
        };
        if same {
            return Err(CliError::Usage(format!("--out {} would overwrite the input", o.display())));
        }
    }
    Ok(())
}

fn out_path(command: &Command) -> Option<&Path> {
    match command {
        Command::CheckCone(a) => a.output.out.as_deref(),
        Command::VerifyStructure(a) | Command::SolveWeinberg(a) | Command::Classify2(a) => a.output.out.as_deref(),
        Command::WeinbergIso(a) => a.output.out.as_deref(),
        Command::OracleRun(a) => a.out.as_deref(),
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::CheckCone(args) => {
            guard_output(Some(&args.input), args.output.out.as_deref())?;
            require_seed(args.samples, args.seed)?;
            let file = read_cone(&args.input)?;
            let kind = file_ring(&args.input, &file.ring, args.output.ring)?;
            dispatch!(kind, check_cone(&args.input, &file, args))
        }
        Command::VerifyStructure(args) => {
            guard_output(Some(&args.input), args.output.out.as_deref())?;
            let file = read_structure(&args.input)?;
            let kind = file_ring(&args.input, &file.ring, args.output.ring)?;
            dispatch!(kind, verify_structure(&args.input, &file))
        }
        Command::SolveWeinberg(args) => {
            guard_output(Some(&args.input), args.output.out.as_deref())?;
            let file = read_structure(&args.input)?;
            let kind = file_ring(&args.input, &file.ring, args.output.ring)?;
            dispatch!(kind, solve_weinberg(&args.input, &file))
        }
        Command::WeinbergIso(args) => {
            guard_output(Some(&args.input), args.output.out.as_deref())?;
            require_seed(args.samples, args.seed)?;
            let file = read_structure(&args.input)?;
            let kind = file_ring(&args.input, &file.ring, args.output.ring)?;
            dispatch!(kind, weinberg_iso(&args.input, &file, args))
        }
        Command::Classify2(args) => {
            guard_output(Some(&args.input), args.output.out.as_deref())?;
            let file = read_structure(&args.input)?;
            let kind = file_ring(&args.input, &file.ring, args.output.ring)?;
            dispatch!(kind, classify2(&args.input, &file))
        }
        Command::OracleRun(args) => {
            if args.cone && args.case != cli::CaseArg::Usual {
                return Err(CliError::Usage("--case applies to structure data, not --cone".into()));
            }
            if args.n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            dispatch!(RingKind::from(args.ring), oracle_run(args))
        }
    }
}

fn emit(report: &Report, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Output { path: path.into(), source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Output { path: "<stdout>".into(), source }),
    }
}

/// Parses `args`, runs the verb, writes the report and summary, and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { error::EXIT_USAGE } else { error::EXIT_OK };
        }
    };
    let result = execute(&cli.command).and_then(|report| {
        emit(&report, out_path(&cli.command), stdout)?;
        Ok(report)
    });
    match result {
        Ok(report) => {
            let _ = writeln!(stderr, "{}", report.summary);
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(stderr, "lomat: error: {e}");
            e.exit_code()
        }
    }
}
