//! Command-line front end: graph file I/O, validation, invariant reports,
//! construction, blow-up, subgraph extraction, classification runs, and
//! DOT export.
//!
//! Graphs are piped as JSON on stdin/stdout; `--in` / `--out` override.
//! Exit codes: 0 success, 1 validation failure, 2 usage or parse error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use torusgraph::classify::classify_report;
use torusgraph::constructions::{cpn_standard, m1, m2, square4, triangle4};
use torusgraph::graph::{LabeledGraph, ValidationLevel};
use torusgraph::invariants::invariant_report;
use torusgraph::lattice::Weight;

#[derive(Parser)]
#[command(name = "torusgraph", version, about = "Labeled graphs for torus actions: validation, invariants, classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cpn,
    M1,
    M2,
    Triangle,
    Square,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph against the multigraph / gkm / torus axioms.
    Validate {
        #[arg(long, default_value = "torus")]
        level: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Euler number, Todd genus, signature, chi_y and Chern numbers.
    Invariants {
        /// Evaluate localization sums at sample points instead of
        /// extracting the symbolic constant; the report is not certified.
        #[arg(long)]
        fast: bool,
        /// Circle direction "i,j,k" for the chi_y count (default: generic).
        #[arg(long)]
        xi: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a standard family member as a graph document.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// Half-dimension for cpn.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        l: i64,
        /// Twist for the square family.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace a vertex by the exceptional locus of its blow-up.
    Blowup {
        #[arg(long)]
        vertex: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected components of the label-filtered isotropy subgraph.
    Subgraph {
        /// Sublattice generators, semicolon-separated: "1,0,0;0,1,0".
        #[arg(long)]
        gens: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide isomorphism up to a unimodular change of basis.
    Isomorphic {
        #[arg(long)]
        other: PathBuf,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Topology census and the bounded labeling searches.
    Classify {
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz rendering of a graph document.
    ExportDot {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parse failure of inputs -> exit 2; semantic validation failure -> exit 1.
enum Failure {
    Usage(String),
    Validation(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Validation(_) => ExitCode::from(1),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Validation(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_graph(input: &Option<PathBuf>) -> Result<LabeledGraph, Failure> {
    let text = match input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("malformed graph document: {e}")))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| usage(format!("cannot write stdout: {e}")))
        }
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_weight(text: &str) -> Result<Weight, Failure> {
    let entries: Result<Vec<i64>, _> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect();
    entries
        .map(Weight::new)
        .map_err(|e| usage(format!("bad weight `{text}`: {e}")))
}

fn parse_gens(text: &str) -> Result<Vec<Weight>, Failure> {
    text.split(';').map(parse_weight).collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { level, input, out } => {
            let level = ValidationLevel::from_str(&level).map_err(usage)?;
            let g = read_graph(&input)?;
            let report = g.validate(level);
            write_output(&out, &pretty(&report))?;
            if report.ok() {
                Ok(())
            } else {
                Err(Failure::Validation(format!(
                    "{} violation(s) at {} level",
                    report.violations.len(),
                    level
                )))
            }
        }
        Command::Invariants { fast, xi, input, out } => {
            let g = read_graph(&input)?;
            let xi = match &xi {
                Some(text) => Some(parse_weight(text)?),
                None => None,
            };
            let report = invariant_report(&g, fast, xi.as_ref())
                .map_err(|e| Failure::Validation(e.to_string()))?;
            write_output(&out, &pretty(&report))
        }
        Command::Generate { family, n, k, l, m, out } => {
            let g = match family {
                Family::Cpn => {
                    if n == 0 {
                        return Err(usage("cpn needs n >= 1"));
                    }
                    cpn_standard(n)
                }
                Family::M1 => m1(k),
                Family::M2 => m2(k, l),
                Family::Triangle => triangle4(&Weight::basis(2, 0), &Weight::basis(2, 1))
                    .expect("standard basis"),
                Family::Square => square4(&Weight::basis(2, 0), &Weight::basis(2, 1), m)
                    .expect("standard basis"),
            };
            write_output(&out, &pretty(&g))
        }
        Command::Blowup { vertex, input, out } => {
            let g = read_graph(&input)?;
            let blown = g.blow_up(&vertex).map_err(usage)?;
            write_output(&out, &pretty(&blown))
        }
        Command::Subgraph { gens, input, out } => {
            let g = read_graph(&input)?;
            let gens = parse_gens(&gens)?;
            let comps = g.isotropy_subgraph(&gens).map_err(usage)?;
            write_output(&out, &pretty(&comps))
        }
        Command::Isomorphic { other, input, out } => {
            let g = read_graph(&input)?;
            let h = read_graph(&Some(other))?;
            let report = match g.isomorphic_up_to_basis(&h) {
                Some((vertex_map, matrix)) => json!({
                    "isomorphic": true,
                    "vertex_map": vertex_map.into_iter().collect::<BTreeMap<_, _>>(),
                    "matrix": matrix,
                }),
                None => json!({ "isomorphic": false }),
            };
            write_output(&out, &pretty(&report))
        }
        Command::Classify { radius, out } => {
            let start = Instant::now();
            let report = classify_report(radius).map_err(usage)?;
            // Timing goes to stderr so the report stays byte-identical
            // across runs.
            eprintln!("classify: {} ms", start.elapsed().as_millis());
            write_output(&out, &pretty(&report))
        }
        Command::ExportDot { input, out } => {
            let g = read_graph(&input)?;
            write_output(&out, &g.to_dot())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}
