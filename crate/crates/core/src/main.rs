use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bicert::audit::{audit_random, mixing_audit, parse_grid, AuditConfig, AuditError};
use bicert::certify::{certify, PropertyKind, SpectralInput};
use bicert::graph::{gen_builtin, gen_random_biregular, parse_bbg, write_bbg, Builtin, DEFAULT_MAX_RETRIES};
use bicert::oracles::{
    edge_connectivity, greedy_rigid_packing, is_globally_rigid, tau_exact, vertex_connectivity,
};
use bicert::report::{report_emit, Format};
use bicert::spectral::singular_values;
use bicert::{BipartiteGraph, Error};

const EXIT_USAGE: u8 = 1;
const EXIT_UNSOUND: u8 = 2;
const EXIT_FAILURE: u8 = 3;

#[derive(Parser)]
#[command(name = "bicert", version, about = "Spectral certificates for biregular bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Complete,
    Cycle,
    Heawood,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    EdgeConn,
    VertexConn,
    Stp,
    RigidPacking,
    GlobalRigidity,
    Ramanujan,
}

impl From<Property> for PropertyKind {
    fn from(p: Property) -> Self {
        match p {
            Property::EdgeConn => PropertyKind::EdgeConn,
            Property::VertexConn => PropertyKind::VertexConn,
            Property::Stp => PropertyKind::TreePacking,
            Property::RigidPacking => PropertyKind::RigidPacking,
            Property::GlobalRigidity => PropertyKind::GlobalRigidity,
            Property::Ramanujan => PropertyKind::Ramanujan,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a builtin or random biregular graph in BBG format.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// |X| for complete bipartite graphs.
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// |Y| for complete bipartite graphs.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Cycle length (even).
        #[arg(long, default_value_t = 6)]
        len: usize,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
        max_retries: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the biadjacency singular values as JSON.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate one spectral sufficient condition.
    Certify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the exact oracle for a property.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Randomized soundness audit over a seeded corpus.
    Audit {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        /// `x,y,a,b[;x,y,a,b...]`
        #[arg(long)]
        grid: Option<String>,
        /// Comma-separated k values.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        /// Comma-separated property names.
        #[arg(long, value_delimiter = ',', value_enum)]
        properties: Option<Vec<Property>>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Check the bipartite mixing inequality on random subset pairs.
    MixingAudit {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Unsound(String),
    Solver(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ConvergenceFailure { .. }
            | Error::RetriesExhausted { .. }
            | Error::TooLarge { .. }
            | Error::TooSmall { .. } => Failure::Solver(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_bbg(&text)?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn required(value: Option<usize>, name: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{name} is required for random graphs")))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            kind,
            m,
            n,
            len,
            x,
            y,
            a,
            b,
            seed,
            max_retries,
            out,
        } => {
            let g = match kind {
                GenKind::Complete => gen_builtin(Builtin::CompleteBipartite(m, n))?,
                GenKind::Cycle => gen_builtin(Builtin::EvenCycle(len))?,
                GenKind::Heawood => gen_builtin(Builtin::Heawood)?,
                GenKind::Random => gen_random_biregular(
                    required(x, "x")?,
                    required(y, "y")?,
                    required(a, "a")?,
                    required(b, "b")?,
                    seed,
                    max_retries,
                )?,
            };
            emit(&write_bbg(&g), out.as_deref())
        }
        Command::Spectrum { input } => {
            let g = read_graph(&input)?;
            let s = singular_values(&g)?;
            let value = json!({
                "a": s.a,
                "b": s.b,
                "sigma": s.sigma,
                "lambda2": s.lambda2,
                "gap": s.gap,
            });
            println!("{value}");
            Ok(())
        }
        Command::Certify {
            property,
            k,
            input,
            json,
        } => {
            let g = read_graph(&input)?;
            let cert = certify(&SpectralInput::from_graph(&g)?, property.into(), k);
            if json {
                println!("{}", serde_json::to_string_pretty(&cert).expect("serializable"));
            } else {
                let threshold = cert
                    .threshold
                    .map_or_else(|| "undefined".to_string(), |t| format!("{t:.12}"));
                println!(
                    "{} k={} lambda2={:.12} threshold={} hypothesis_ok={} verdict={}",
                    cert.property,
                    cert.k.map_or("-".into(), |k| k.to_string()),
                    cert.lambda2,
                    threshold,
                    cert.hypothesis_ok,
                    cert.verdict
                );
            }
            Ok(())
        }
        Command::Verify {
            property,
            k,
            input,
            json,
        } => {
            let g = read_graph(&input)?;
            let result = match PropertyKind::from(property) {
                PropertyKind::EdgeConn => edge_connectivity(&g),
                PropertyKind::VertexConn => vertex_connectivity(&g)?,
                PropertyKind::TreePacking => tau_exact(&g, usize::MAX),
                PropertyKind::RigidPacking => greedy_rigid_packing(&g, k),
                PropertyKind::GlobalRigidity => is_globally_rigid(&g)?,
                PropertyKind::Ramanujan => {
                    return Err(Failure::Usage("ramanujan has no combinatorial oracle".into()))
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
            } else {
                let verdict = if !result.exact {
                    "inconclusive"
                } else if PropertyKind::from(property).takes_k() {
                    if result.value >= k { "holds" } else { "fails" }
                } else if result.holds() {
                    "holds"
                } else {
                    "fails"
                };
                println!(
                    "{:?} value={} exact={} k={k} => {verdict}",
                    result.property, result.value, result.exact
                );
            }
            Ok(())
        }
        Command::Audit {
            seed,
            trials,
            grid,
            k,
            properties,
            out,
            format,
        } => {
            let format: Format = format.parse()?;
            let mut cfg = AuditConfig::default_corpus(seed);
            if let Some(t) = trials {
                cfg.trials = t;
            }
            if let Some(grid) = grid {
                cfg.size_grid = parse_grid(&grid)?;
            }
            if let Some(k) = k {
                cfg.k_grid = k;
            }
            if let Some(props) = properties {
                cfg.properties = props.into_iter().map(PropertyKind::from).collect();
            }
            cfg.output_path = out;
            let outcome = audit_random(&cfg).map_err(|e| match e {
                AuditError::Config(err) => Failure::from(err),
                AuditError::Unsound { .. } => Failure::Unsound(e.to_string()),
                AuditError::Oracle { .. } => Failure::Solver(e.to_string()),
            })?;
            for s in &outcome.skipped {
                eprintln!("skipped trial {} ({}): {}", s.trial, s.graph_id, s.reason);
            }
            emit(&report_emit(&outcome.records, format), cfg.output_path.as_deref())
        }
        Command::MixingAudit {
            input,
            pairs,
            seed,
            json,
        } => {
            let g = read_graph(&input)?;
            let report = mixing_audit(&g, pairs, seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!(
                    "pairs={} violations={} min_slack={:.12} max_slack={:.12}",
                    report.pairs, report.violations, report.min_slack, report.max_slack
                );
            }
            if report.violations > 0 {
                return Err(Failure::Unsound(format!(
                    "{} mixing-inequality violations",
                    report.violations
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Unsound(msg)) => {
            eprintln!("unsound: {msg}");
            ExitCode::from(EXIT_UNSOUND)
        }
        Err(Failure::Solver(msg)) => {
            eprintln!("failure: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
