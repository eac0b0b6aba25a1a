use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wogsym::commands::{self, CliError, CoverFilter, Input, Output};
use wogsym::format;
use wogsym::fuzz::{self, FuzzConfig};
use wogsym_core::digraph::{natural_path, rooted_tree, two_path_sink};
use wogsym_core::symbolic::OracleScope;
use wogsym_core::{Limits, WeightedOrientedGraph};

/// Strong vertex covers and symbolic powers of edge ideals of weighted
/// oriented graphs.
#[derive(Parser)]
#[command(name = "wogsym", version)]
struct Cli {
    /// Print the JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Reset weights declared on source vertices to 1 instead of rejecting them.
    #[arg(long, global = true)]
    normalize: bool,
    #[command(flatten)]
    guards: Guards,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Guards {
    /// Largest graph whose covers may be enumerated.
    #[arg(long, global = true, env = "WOGSYM_MAX_VERTICES", default_value_t = Limits::DESK.max_vertices)]
    max_vertices: usize,
    /// Largest exponent accepted by power computations.
    #[arg(long, global = true, env = "WOGSYM_MAX_POWER", default_value_t = Limits::DESK.max_power)]
    max_power: u32,
    /// Largest number of intermediate generators per ideal operation.
    #[arg(long, global = true, env = "WOGSYM_MAX_GENERATORS", default_value_t = Limits::DESK.max_generators)]
    max_generators: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List vertex covers with their L1/L2/L3 partition.
    Covers {
        file: PathBuf,
        /// Only strong covers.
        #[arg(long)]
        strong: bool,
        /// Only maximal strong covers.
        #[arg(long, conflicts_with = "strong")]
        maximal: bool,
    },
    /// Minimal generators of the symbolic power I^(s).
    Symbolic {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// Also compute I^(s) by localizing I^s, and compare.
        #[arg(long)]
        oracle: bool,
        /// Primes the oracle intersects over.
        #[arg(long, value_enum, default_value_t = Scope::Maximal, requires = "oracle")]
        scope: Scope,
    },
    /// Decide I^(s) = I^s for s = 2..=max-s.
    Compare {
        file: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..))]
        max_s: u32,
        /// Also expand I^s and compare generator lists.
        #[arg(long)]
        full: bool,
    },
    /// Run the family criteria that apply and check them by computation.
    Classify { file: PathBuf },
    /// Print a graph document for a standard family.
    #[command(subcommand)]
    Gen(Family),
    /// Replay the worked examples.
    PaperExamples {
        #[arg(long)]
        figure: Option<u8>,
    },
    /// Check the property suite on seeded random graphs.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_weight: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Maximal,
    All,
}

#[derive(Subcommand)]
enum Family {
    /// x1 -> ... -> xn with comma-separated weights.
    NaturalPath {
        #[arg(value_delimiter = ',', required = true)]
        weights: Vec<u32>,
    },
    /// Two natural paths meeting at a sink.
    TwoPathSink {
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<u32>,
        /// 0: one junction weighted by --sink-weight; 1: one junction of
        /// weight 1; 2: junctions z1 -> z2.
        #[arg(long, default_value_t = 0)]
        middle: u8,
        #[arg(long, default_value_t = 1)]
        sink_weight: u32,
    },
    /// Edges from parent to child; `-` marks the root.
    RootedTree {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        parents: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
    },
    /// A seeded random graph, as drawn by `fuzz`.
    Random {
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn generate(family: Family) -> Result<WeightedOrientedGraph, CliError> {
    let usage = |e: wogsym_core::GraphError| CliError::Usage(e.to_string());
    match family {
        Family::NaturalPath { weights } => natural_path(&weights).map_err(usage),
        Family::TwoPathSink { y, x, middle, sink_weight } => {
            two_path_sink(&y, &x, middle, sink_weight).map_err(usage)
        }
        Family::RootedTree { parents, weights } => {
            let parents = parents
                .iter()
                .map(|p| match p.as_str() {
                    "-" => Ok(None),
                    p => p.parse().map(Some).map_err(|_| CliError::Usage(format!("bad parent index {p:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rooted_tree(&parents, &weights).map_err(usage)
        }
        Family::Random { vertices, max_weight, seed } => {
            if vertices == 0 || max_weight == 0 {
                return Err(CliError::Usage("--vertices and --max-weight must be positive".into()));
            }
            Ok(fuzz::corpus(seed, 1, vertices, max_weight).remove(0))
        }
    }
}

fn dispatch(cli: Cli) -> Result<Option<Output>, CliError> {
    let limits = Limits {
        max_vertices: cli.guards.max_vertices,
        max_power: cli.guards.max_power,
        max_generators: cli.guards.max_generators,
    };
    let load = |file: &PathBuf| -> Result<Input, CliError> {
        let input = commands::load(file, cli.normalize)?;
        if input.graph.vertex_count() > limits.max_vertices {
            return Err(CliError::Guard(wogsym_core::GuardExceeded {
                what: "vertex",
                limit: limits.max_vertices,
                actual: input.graph.vertex_count(),
            }));
        }
        Ok(input)
    };
    let out = match cli.command {
        Command::Covers { file, strong, maximal } => {
            let filter = match (strong, maximal) {
                (_, true) => CoverFilter::Maximal,
                (true, _) => CoverFilter::Strong,
                _ => CoverFilter::All,
            };
            commands::covers(&load(&file)?, filter, &limits)?
        }
        Command::Symbolic { file, s, oracle, scope } => {
            let scope = match scope {
                Scope::Maximal => OracleScope::Maximal,
                Scope::All => OracleScope::All,
            };
            commands::symbolic(&load(&file)?, s, oracle.then_some(scope), &limits)?
        }
        Command::Compare { file, max_s, full } => commands::compare(&load(&file)?, max_s, full, &limits)?,
        Command::Classify { file } => commands::classify(&load(&file)?, &limits)?,
        Command::Gen(family) => {
            print!("{}", format::serialize_graph(&generate(family)?));
            return Ok(None);
        }
        Command::PaperExamples { figure } => commands::paper_examples(figure, &limits)?,
        Command::Fuzz { n, vertices, max_weight, seed } => {
            if vertices == 0 {
                return Err(CliError::Usage("--vertices must be positive".into()));
            }
            commands::fuzz(&FuzzConfig { count: n, max_vertices: vertices, max_weight, seed }, &limits)?
        }
    };
    Ok(Some(out))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version land here too, with exit code 0
            print!("{}", e.render());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(out)) => {
            if json {
                print!("{}", out.report.to_json());
            } else {
                print!("{}", out.text);
            }
            if out.report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            if json {
                let body = serde_json::json!({"error": e.to_string(), "exit_code": e.exit_code()});
                println!("{}", serde_json::to_string_pretty(&body).expect("literal JSON"));
            } else {
                println!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
