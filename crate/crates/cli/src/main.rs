//! `fintl` command-line tool.
//!
//! Exit status: 0 on success (or `sat`), 1 when the formula is rejected (or
//! `unsat`, or a conformance case fails), 2 for usage and I/O problems.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fintl::conformance::run_manifest;
use fintl::{AnyFormula, Logic, PrintStyle, Trace};

#[derive(Parser)]
#[command(
    name = "fintl",
    version,
    about = "Check, format, serialize and evaluate LTLf/LDLf/PLTLf/PLDLf formulae"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula; print nothing on success
    Check(Source),
    /// Print a formula in canonical form
    Fmt {
        #[command(flatten)]
        source: Source,
        /// Parenthesize every compound subformula
        #[arg(long)]
        full_parens: bool,
    },
    /// Print the syntax tree
    Ast {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: AstFormat,
    },
    /// Decide whether a finite trace satisfies a formula
    Eval {
        #[command(flatten)]
        source: Source,
        /// JSON trace file such as `[["p"],["p","q"],[]]`
        #[arg(long, value_name = "PATH")]
        trace: PathBuf,
    },
    /// Run a line-delimited conformance manifest
    Conformance {
        /// Manifest file, or `-` for standard input
        manifest: PathBuf,
    },
}

#[derive(Args)]
struct Source {
    #[arg(long, value_enum)]
    logic: LogicArg,
    /// Formula file, or `-` for standard input
    source: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicArg {
    Ltlf,
    Ldlf,
    Pltlf,
    Pldlf,
}

impl From<LogicArg> for Logic {
    fn from(l: LogicArg) -> Logic {
        match l {
            LogicArg::Ltlf => Logic::Ltlf,
            LogicArg::Ldlf => Logic::Ldlf,
            LogicArg::Pltlf => Logic::Pltlf,
            LogicArg::Pldlf => Logic::Pldlf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AstFormat {
    Json,
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Rejected,
}

fn read(path: &Path) -> Result<String> {
    let mut bytes = Vec::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_end(&mut bytes)
            .context("cannot read standard input")?;
    } else {
        bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    }
    // Invalid UTF-8 surfaces as an illegal character at its position.
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    out.flush()?;
    Ok(())
}

/// Parses the source, reporting a diagnostic on failure.
fn load(source: &Source) -> Result<Option<AnyFormula>> {
    let text = read(&source.source)?;
    match AnyFormula::parse(source.logic.into(), &text) {
        Ok(f) => Ok(Some(f)),
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            Ok(None)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Check(source) => Ok(match load(&source)? {
            Some(_) => Status::Ok,
            None => Status::Rejected,
        }),
        Command::Fmt {
            source,
            full_parens,
        } => {
            let Some(f) = load(&source)? else {
                return Ok(Status::Rejected);
            };
            let style = if full_parens {
                PrintStyle::FullParens
            } else {
                PrintStyle::Canonical
            };
            emit(&f.print(style)?)?;
            Ok(Status::Ok)
        }
        Command::Ast {
            source,
            format: AstFormat::Json,
        } => {
            let Some(f) = load(&source)? else {
                return Ok(Status::Rejected);
            };
            emit(&f.to_json())?;
            Ok(Status::Ok)
        }
        Command::Eval { source, trace } => {
            let Some(f) = load(&source)? else {
                return Ok(Status::Rejected);
            };
            let trace = Trace::from_json(&read(&trace)?)
                .with_context(|| format!("bad trace file {}", trace.display()))?;
            match f.satisfied_by(&trace) {
                Ok(true) => {
                    emit("sat")?;
                    Ok(Status::Ok)
                }
                Ok(false) => {
                    emit("unsat")?;
                    Ok(Status::Rejected)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Conformance { manifest } => {
            let text = read(&manifest)?;
            let report = run_manifest(&text)
                .with_context(|| format!("malformed manifest {}", manifest.display()))?;
            let mut out = io::stdout().lock();
            for case in &report.cases {
                let input = serde_json::to_string(&case.case.input)?;
                match &case.outcome {
                    Ok(()) => writeln!(out, "ok   {} {} {input}", case.line, case.case.logic.id())?,
                    Err(why) => writeln!(
                        out,
                        "FAIL {} {} {input}: {why}",
                        case.line,
                        case.case.logic.id()
                    )?,
                }
            }
            writeln!(out, "{}", report.summary())?;
            out.flush()?;
            Ok(if report.all_passed() {
                Status::Ok
            } else {
                Status::Rejected
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Rejected) => ExitCode::from(1),
        Err(e) => {
            eprintln!("fintl: {e:#}");
            ExitCode::from(2)
        }
    }
}
