//! Command-line front end. Data goes to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 analysis completed, 1 invalid input, 2 internal invariant
//! violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::classify::nash_verdict;
use crate::conditions::{star_witness, verify_witness};
use crate::cone::Divisor;
use crate::enumerate::{enumerate_graphs, EnumerationBounds};
use crate::error::{Error, Result};
use crate::family::{make_family, Family};
use crate::graph::{parse_graph, ResolutionGraph};
use crate::report::{emit_criterion, emit_report, Format};
use crate::vanishing::{adjoint_criterion_satisfied, laufer_criterion_satisfied};

#[derive(Parser, Debug)]
#[command(name = "lipman", version, about = "Lipman cone analysis of resolution dual graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the full classification report for a graph file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a verified witness for the half-space {a_i < a_j}, or "none".
    Witness {
        file: PathBuf,
        /// 1-based vertices i and j.
        #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
        pair: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write a named family member as a graph file.
    #[command(allow_negative_numbers = true)]
    Family {
        /// an, dn, claw, vertex or cycle.
        kind: String,
        params: Vec<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Stream one JSON report per enumerated graph.
    #[command(allow_negative_numbers = true)]
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        min_weight: i64,
        #[arg(long, default_value_t = 0)]
        max_genus: u32,
        #[arg(long, default_value_t = 1)]
        max_mult: u32,
        /// Worker threads; output order is unchanged.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Evaluate a vanishing criterion on a divisor.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        criterion: Criterion,
        /// Comma-separated coefficients a1,...,an.
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Criterion {
    /// (D + E_i + K)·E_j + 2δ_ij ≤ 0.
    Adjoint,
    /// (D + 2K)·E_i ≤ 0.
    Laufer,
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn read_graph(path: &Path) -> Result<ResolutionGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidGraph(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidGraph(format!("write failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Analyze { file, json } => {
            let g = read_graph(&file)?;
            let report = nash_verdict(&g)?;
            let mut text = emit_report(&report, format(json));
            if !text.ends_with('\n') {
                text.push('\n');
            }
            out.write_all(text.as_bytes()).map_err(io_err)
        }
        Command::Witness { file, pair, json } => {
            let g = read_graph(&file)?;
            let n = g.n();
            let idx = |v: usize| {
                if v == 0 || v > n {
                    Err(Error::VertexOutOfRange { index: v, n })
                } else {
                    Ok(v - 1)
                }
            };
            let (i, j) = (idx(pair[0])?, idx(pair[1])?);
            let line = match star_witness(&g, i, j)? {
                Some(w) => {
                    if !verify_witness(&g.intersection_matrix(), &w, i, j) {
                        return Err(Error::Internal(format!("witness {w} failed re-verification")));
                    }
                    if json {
                        serde_json::to_string(&w)?
                    } else {
                        w.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                    }
                }
                None if json => "null".to_owned(),
                None => "none".to_owned(),
            };
            writeln!(out, "{line}").map_err(io_err)
        }
        Command::Family {
            kind,
            params,
            output,
            json,
        } => {
            let g = make_family(&Family::parse(&kind, &params)?)?;
            let text = if json {
                g.to_json() + "\n"
            } else {
                g.to_graph_text()
            };
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Error::InvalidGraph(format!("cannot write {}: {e}", path.display()))),
                None => out.write_all(text.as_bytes()).map_err(io_err),
            }
        }
        Command::Enumerate {
            max_vertices,
            min_weight,
            max_genus,
            max_mult,
            parallel,
        } => {
            let bounds = EnumerationBounds {
                max_vertices,
                min_weight,
                max_genus,
                max_mult,
            };
            let stream = enumerate_graphs(bounds)?;
            if parallel <= 1 {
                for g in stream {
                    let line = emit_report(&nash_verdict(&g)?, Format::Json);
                    writeln!(out, "{line}").map_err(io_err)?;
                }
                return Ok(());
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(parallel)
                .build()
                .map_err(|e| Error::InvalidGraph(format!("thread pool: {e}")))?;
            let mut stream = stream.peekable();
            const CHUNK: usize = 512;
            while stream.peek().is_some() {
                let chunk: Vec<ResolutionGraph> = stream.by_ref().take(CHUNK).collect();
                let lines: Vec<Result<String>> = pool.install(|| {
                    chunk
                        .par_iter()
                        .map(|g| nash_verdict(g).map(|r| emit_report(&r, Format::Json)))
                        .collect()
                });
                for line in lines {
                    writeln!(out, "{}", line?).map_err(io_err)?;
                }
            }
            Ok(())
        }
        Command::Check {
            file,
            criterion,
            divisor,
            json,
        } => {
            let g = read_graph(&file)?;
            let d: Divisor = divisor.parse()?;
            let text = match criterion {
                Criterion::Adjoint => emit_criterion("adjoint", &adjoint_criterion_satisfied(&g, &d)?, format(json)),
                Criterion::Laufer => emit_criterion("laufer", &laufer_criterion_satisfied(&g, &d)?, format(json)),
            };
            let text = if text.ends_with('\n') { text } else { text + "\n" };
            out.write_all(text.as_bytes()).map_err(io_err)
        }
    }
}
