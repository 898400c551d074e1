//! `gwalk`: command-line front end for gwalk-core.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 parse or precondition error. Diagnostics go to standard error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gwalk_core::graph::{self, analyze, Graph};
use gwalk_core::{lineqw, spectral, structure, walkops};

#[derive(Parser)]
#[command(name = "gwalk", version, about = "Positive supports of Grover-walk powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph inspection.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Discriminant walk on the line.
    #[command(subcommand)]
    Walk(WalkCmd),
    /// Structure formula for S(U^n).
    #[command(subcommand)]
    Structure(StructureCmd),
    /// Spectral lift machinery.
    #[command(subcommand)]
    Spectral(SpectralCmd),
    /// Reciprocal zeta polynomial det(I - u S(U^n)).
    Zeta(ZetaArgs),
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Vertex/edge counts, regularity, girth and diameter.
    Info {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
}

#[derive(Subcommand)]
enum WalkCmd {
    /// Phase grid for steps 1..=N.
    Phases {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = GridFormat::Ascii)]
        format: GridFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum StructureCmd {
    /// Coefficients read off the discriminant walk.
    Formula {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Brute-force check of the formula on a graph; exit 0 iff it holds.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SpectralCmd {
    /// Curve samples (mu, x, y, branch) as CSV.
    Curves {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        mu_max: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lift adjacency eigenvalues and check them against char(S(U^n)); exit 0 iff pass.
    Lift {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
    },
    /// Q_n and P_n as JSON coefficient arrays.
    Appendix {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: usize,
    },
    /// Adjacency eigenvalues predicted to make S(U^n) non-diagonalizable.
    Nondiag {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Args)]
struct ZetaArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct Input {
    /// Graph: a file (adjacency list, graph6 or LCF), `builtin:NAME`,
    /// `g6:STRING` or `lcf:SPEC`.
    #[arg(long = "in", value_name = "GRAPH")]
    source: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridFormat {
    Ascii,
    Csv,
    Pgm,
}

enum Failure {
    /// Parse or precondition error.
    Input(String),
    /// The check ran and did not pass.
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load_graph(input: &Input) -> Result<Graph, Failure> {
    let src = input.source.as_str();
    if let Some(name) = src.strip_prefix("builtin:") {
        return Ok(graph::builtin(name)?);
    }
    if let Some(s) = src.strip_prefix("g6:") {
        return Ok(graph::parse_graph6(s)?);
    }
    if let Some(s) = src.strip_prefix("lcf:") {
        return Ok(graph::parse_lcf(s)?);
    }
    let path = Path::new(src);
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{src}: {e}")))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let parsed = match ext {
        "g6" | "graph6" => graph::parse_graph6(text.trim()),
        "lcf" => graph::parse_lcf(text.trim()),
        _ => sniff(&text),
    };
    parsed.map_err(|e| Failure::Input(format!("{src}: {e}")))
}

fn sniff(text: &str) -> Result<Graph, graph::ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with('[') {
        graph::parse_lcf(first)
    } else if first.starts_with(">>graph6<<") || (!first.contains(':') && !first.contains(' ')) && !first.is_empty() {
        graph::parse_graph6(first)
    } else {
        graph::parse_adjlist(text)
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Outcome {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(bytes).map_err(|e| Failure::Input(e.to_string())),
    }
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Graph(GraphCmd::Info { input, format }) => {
            let report = analyze(&load_graph(&input)?);
            let text = match format {
                TextJson::Text => format!("{report}\n"),
                TextJson::Json => json_line(&report),
            };
            emit(None, text.as_bytes())
        }
        Command::Walk(WalkCmd::Phases { k, steps, format, out }) => {
            let grid = lineqw::pattern(k, steps)?;
            let bytes = match format {
                GridFormat::Ascii => grid.to_ascii().into_bytes(),
                GridFormat::Csv => grid.to_csv().into_bytes(),
                GridFormat::Pgm => grid.to_pgm(),
            };
            emit(out.as_deref(), &bytes)
        }
        Command::Structure(StructureCmd::Formula { k, n, format }) => {
            let f = structure::coefficients(k, n)?;
            let fmt = match format {
                TextJson::Text => structure::FormulaFormat::Text,
                TextJson::Json => structure::FormulaFormat::Json,
            };
            emit(None, format!("{}\n", structure::pretty_print(&f, fmt)).as_bytes())
        }
        Command::Structure(StructureCmd::Verify { input, n, report }) => {
            let r = structure::verify(&load_graph(&input)?, n)?;
            emit(report.as_deref(), json_line(&r).as_bytes())?;
            if report.is_some() {
                let status = if r.pass { "pass" } else { "FAIL" };
                println!("{status}: n = {n}, k = {}, {} mismatches", r.k, r.mismatches.len());
            }
            if r.pass {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Spectral(SpectralCmd::Curves { k, n, mu_min, mu_max, samples, out }) => {
            let pts = spectral::curve_samples(k, n, mu_min, mu_max, samples)?;
            emit(Some(&out), spectral::curves_to_csv(&pts).as_bytes())
        }
        Command::Spectral(SpectralCmd::Lift { input, n, tol }) => {
            let r = spectral::lift_verify(&load_graph(&input)?, n, tol)?;
            emit(None, json_line(&r).as_bytes())?;
            if r.pass {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Spectral(SpectralCmd::Appendix { k, n }) => {
            let a = spectral::appendix_polys(k, n)?;
            emit(None, json_line(&a.to_json()).as_bytes())
        }
        Command::Spectral(SpectralCmd::Nondiag { input, n, tol }) => {
            let r = spectral::nondiag_predict(&load_graph(&input)?, n, tol)?;
            emit(None, json_line(&r).as_bytes())
        }
        Command::Zeta(ZetaArgs { input, n }) => {
            let g = load_graph(&input)?;
            let coeffs = walkops::zeta_poly(&g, n)?;
            let v = serde_json::json!({
                "n": n,
                "arcs": g.arc_count(),
                "coefficients": coeffs.iter().map(spectral::big_to_json).collect::<Vec<_>>(),
            });
            emit(None, json_line(&v).as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("gwalk: {msg}");
            ExitCode::from(3)
        }
    }
}
