use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fanodigraph::autos::UhMode;
use fanodigraph::coxeter::build_coxeter;
use fanodigraph::dgraph::{self, build_d, render_sublist, sublist_diff, PRINTED_SUBLIST};
use fanodigraph::verify::{self, unexpected_table_diff, Selector};
use fanodigraph::voltage::{quotient, z7_action};

#[derive(Parser)]
#[command(
    name = "fanodigraph",
    version,
    about = "Build, verify and export the ordered-pencil digraph of the Fano plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites and report PASS/FAIL per check.
    Verify {
        #[arg(value_enum)]
        selector: SuiteArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Random extension checks backing the fast path; 0 checks all 63504.
        #[arg(long, default_value_t = UhMode::DEFAULT_SAMPLE)]
        sample: usize,
    },
    /// Print the adjacency rows of the pencils at x = 0 and their diff
    /// against the printed table.
    Table {
        /// Fail on any difference, including the known misprints.
        #[arg(long)]
        strict: bool,
    },
    /// Write a graph as DOT or JSON.
    Export {
        #[arg(value_enum)]
        target: ExportTarget,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Coxeter,
    Digraph,
    Cycles,
    Uh,
    Voltage,
}

impl From<SuiteArg> for Selector {
    fn from(s: SuiteArg) -> Selector {
        match s {
            SuiteArg::All => Selector::All,
            SuiteArg::Coxeter => Selector::Coxeter,
            SuiteArg::Digraph => Selector::Digraph,
            SuiteArg::Cycles => Selector::Cycles,
            SuiteArg::Uh => Selector::Uh,
            SuiteArg::Voltage => Selector::Voltage,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportTarget {
    Coxeter,
    Digraph,
    Quotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify {
            selector,
            format,
            output,
            sample,
        } => {
            let report = verify::run(selector.into(), UhMode::from_sample(sample));
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => pretty(&report),
            };
            emit(output.as_ref(), &text)?;
            Ok(report.pass)
        }
        Command::Table { strict } => {
            let d = build_d();
            let diff = sublist_diff(&d, &PRINTED_SUBLIST);
            let (unexpected, missing) = unexpected_table_diff(&d);
            let mut s = render_sublist(&d);
            s.push_str(&format!(
                "\ndiff against printed table: {} entries\n",
                diff.len()
            ));
            for m in &diff {
                let known = !unexpected.contains(m);
                s.push_str(&format!(
                    "{} [{}]: printed {}, generated {}{}\n",
                    m.row,
                    m.position,
                    m.expected,
                    m.got,
                    if known { " (known misprint)" } else { "" }
                ));
            }
            emit(None, &s)?;
            Ok(if strict {
                diff.is_empty()
            } else {
                unexpected.is_empty() && missing.is_empty()
            })
        }
        Command::Export {
            target,
            format,
            output,
        } => {
            let text = match (target, format) {
                (ExportTarget::Coxeter, ExportFormat::Dot) => build_coxeter().to_dot(),
                (ExportTarget::Coxeter, ExportFormat::Json) => pretty(&build_coxeter().to_json()),
                (ExportTarget::Digraph, ExportFormat::Dot) => dgraph::to_dot(&build_d()),
                (ExportTarget::Digraph, ExportFormat::Json) => pretty(&dgraph::to_json(&build_d())),
                (ExportTarget::Quotient, f) => {
                    let q = quotient(&build_d(), &z7_action()).map_err(|e| e.to_string())?;
                    match f {
                        ExportFormat::Dot => q.to_dot(),
                        ExportFormat::Json => pretty(&q.to_json()),
                    }
                }
            };
            emit(output.as_ref(), &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
