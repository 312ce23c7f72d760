//! Command-line front end: thin wiring around the library.
//!
//! Exit codes: 0 success, 1 verification violations, 2 input error,
//! 3 infeasible computation, 4 budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use alliances::bounds;
use alliances::edgelist;
use alliances::family::{self, GraphFamily};
use alliances::graph::Graph;
use alliances::graph6;
use alliances::kernel::AllianceKind;
use alliances::linegraph;
use alliances::solver::{self, Budget, SolveError};
use alliances::verify;

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "alliances", version, about = "Exact defensive-alliance numbers of graphs and their line graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one alliance number with a witness.
    Compute(ComputeArgs),
    /// Run the corpus-wide verification harness.
    Verify(VerifyArgs),
    /// Evaluate every bound and classifier on one graph.
    Bounds(InputArgs),
    /// Classify a (or a(L) with --line) into {1, 2, 3, >=4}.
    Classify(ClassifyArgs),
    /// Emit the line graph in graph6 with its edge map.
    Linegraph(LinegraphArgs),
    /// Generate a named family graph.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edgelist,
}

#[derive(Args)]
struct InputArgs {
    /// Input graph file.
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the extension when omitted (.el, .edges
    /// and .txt are edge lists, anything else graph6).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Pretty-print the JSON output.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Alliance kind, e.g. defensive or global-connected-strong.
    #[arg(long)]
    kind: AllianceKind,
    /// Compute on the line graph instead of the graph itself.
    #[arg(long)]
    line: bool,
    /// Cross-check against the brute-force oracle and report agreement.
    #[arg(long)]
    oracle: bool,
    /// Node budget; defaults to ALLIANCE_BUDGET_NODES if set.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    budget_secs: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest corpus order to enumerate (1..=8).
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Comma-separated subset of checks to run (default: all).
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Verify the graphs in this .g6 file instead of the generated corpus.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Run the named deep dive instead of the corpus (only odd-graph).
    #[arg(long)]
    family: Option<String>,
    /// Parameter for --family or --star-erratum.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Report the star-remark discrepancy for K_{1,n}.
    #[arg(long)]
    star_erratum: bool,
    /// Node budget for deep dives.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds for deep dives.
    #[arg(long)]
    budget_secs: Option<f64>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Classify a(L) instead of a.
    #[arg(long)]
    line: bool,
}

#[derive(Args)]
struct LinegraphArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also write the bare graph6 record here.
    #[arg(long)]
    g6_out: Option<PathBuf>,
    /// Also write the edge map JSON here.
    #[arg(long)]
    map_out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// path, cycle, complete, complete-bipartite, star, kneser, odd-graph,
    /// petersen, hypercube.
    #[arg(long)]
    family: String,
    /// Main size parameter.
    #[arg(long)]
    n: Option<usize>,
    /// Secondary parameter (bipartite second side, Kneser subset size).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError { message, code }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct AppError {
    message: String,
    code: u8,
}

fn input_error(message: impl Into<String>) -> AppError {
    AppError { message: message.into(), code: EXIT_INPUT }
}

fn infeasible(message: impl Into<String>) -> AppError {
    AppError { message: message.into(), code: EXIT_INFEASIBLE }
}

fn load_graph(args: &InputArgs) -> Result<Graph, AppError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| input_error(format!("{}: {e}", args.input.display())))?;
    let format = args.format.unwrap_or_else(|| infer_format(&args.input));
    match format {
        Format::G6 => graph6::parse_graph6(&text).map_err(|e| input_error(e.to_string())),
        Format::Edgelist => edgelist::parse_edge_list(&text).map_err(|e| input_error(e.to_string())),
    }
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("el") | Some("edges") | Some("edgelist") | Some("txt") => Format::Edgelist,
        _ => Format::G6,
    }
}

fn budget_from(nodes: Option<u64>, secs: Option<f64>) -> Budget {
    let env_nodes = std::env::var("ALLIANCE_BUDGET_NODES")
        .ok()
        .and_then(|v| v.parse().ok());
    Budget { max_nodes: nodes.or(env_nodes), max_secs: secs }
}

fn print_json<T: serde::Serialize>(value: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    };
    println!("{text}");
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Linegraph(args) => cmd_linegraph(args),
        Command::Generate(args) => cmd_generate(args),
    }
}

fn map_solve_error(e: SolveError) -> AppError {
    match e {
        SolveError::Infeasible { .. } | SolveError::LineGraph(_) => infeasible(e.to_string()),
        SolveError::EmptyGraph | SolveError::OracleCapExceeded { .. } => input_error(e.to_string()),
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode, AppError> {
    let g = load_graph(&args.input)?;
    let budget = budget_from(args.budget_nodes, args.budget_secs);
    let result = if args.line {
        solver::line_alliance_number(&g, args.kind, budget)
    } else {
        solver::min_alliance(&g, args.kind, budget)
    }
    .map_err(map_solve_error)?;

    let mut value = serde_json::to_value(&result).expect("serializable");
    if args.oracle {
        let target = if args.line {
            linegraph::line_graph(&g).map_err(|e| infeasible(e.to_string()))?.graph().clone()
        } else {
            g.clone()
        };
        let oracled = alliances::oracle::brute_force_oracle(&target, args.kind).map_err(map_solve_error)?;
        value["oracle"] = json!({
            "value": oracled.value,
            "witness": oracled.witness,
            "agrees": oracled.value == result.value,
        });
    }
    print_json(&value, args.input.pretty);
    if !result.certified {
        return Ok(ExitCode::from(EXIT_BUDGET));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, AppError> {
    let budget = budget_from(args.budget_nodes, args.budget_secs);

    if args.star_erratum {
        let leaves = if args.n >= 3 { args.n } else { 4 };
        let report = verify::star_erratum(leaves);
        write_opt(&args.out, &report, args.pretty)?;
        print_json(&report, args.pretty);
        return Ok(ExitCode::SUCCESS);
    }

    if let Some(fam) = &args.family {
        if fam != "odd-graph" || args.n != 5 {
            return Err(input_error("only `--family odd-graph --n 5` has a built-in deep dive"));
        }
        let report = verify::odd_graph_deep_dive(budget).map_err(map_solve_error)?;
        let ok = report.line_star_is_strong
            && report.line_alliance_number == report.regular_degree
            && report.graph_alliance_number == report.girth
            && report.graph_witness_is_cycle;
        write_opt(&args.out, &report, args.pretty)?;
        print_json(&report, args.pretty);
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATIONS) });
    }

    if args.max_n < 1 || args.max_n > alliances::corpus::MAX_CORPUS_ORDER {
        return Err(input_error(format!(
            "--max-n must be within 1..={}",
            alliances::corpus::MAX_CORPUS_ORDER
        )));
    }
    let options = verify::VerifyOptions {
        max_n: args.max_n,
        checks: args.checks.clone(),
        ..Default::default()
    };
    let run = match &args.corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            let graphs = graph6::parse_graph6_file(&text)
                .map_err(|(line, e)| input_error(format!("{} line {line}: {e}", path.display())))?;
            verify::run_on(graphs, format!("file corpus {}", path.display()), &options)
        }
        None => verify::run(&options),
    };
    write_opt(&args.out, &run, args.pretty)?;
    print_json(&run, args.pretty);
    Ok(if run.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATIONS) })
}

fn write_opt<T: serde::Serialize>(out: &Option<PathBuf>, value: &T, pretty: bool) -> Result<(), AppError> {
    if let Some(path) = out {
        let text = if pretty {
            serde_json::to_string_pretty(value).expect("serializable")
        } else {
            serde_json::to_string(value).expect("serializable")
        };
        std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_bounds(args: InputArgs) -> Result<ExitCode, AppError> {
    let g = load_graph(&args)?;
    let report = bounds::bound_report(&g);
    print_json(&report, args.pretty);
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, AppError> {
    let g = load_graph(&args.input)?;
    if args.line {
        let class = bounds::classify_small_line_alliance(&g).map_err(|e| infeasible(e.to_string()))?;
        let value = json!({ "target": "a(L)", "class": class.class, "witness": class.witness });
        print_json(&value, args.input.pretty);
    } else {
        let class = bounds::classify_small_alliance(&g);
        let value = json!({ "target": "a(G)", "class": class.class, "witness": class.witness });
        print_json(&value, args.input.pretty);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_linegraph(args: LinegraphArgs) -> Result<ExitCode, AppError> {
    let g = load_graph(&args.input)?;
    let lg = linegraph::line_graph(&g).map_err(|e| infeasible(e.to_string()))?;
    let encoded = graph6::encode_graph6(lg.graph()).map_err(|e| input_error(e.to_string()))?;

    let mut map = serde_json::Map::new();
    for (id, &(u, v)) in lg.edge_map().iter().enumerate() {
        map.insert(id.to_string(), json!([u, v]));
    }
    let map = serde_json::Value::Object(map);

    if let Some(path) = &args.g6_out {
        std::fs::write(path, format!("{encoded}\n"))
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &args.map_out {
        std::fs::write(path, serde_json::to_string_pretty(&map).expect("serializable"))
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }

    let value = json!({ "graph6": encoded, "edge_map": map });
    print_json(&value, args.input.pretty);
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, AppError> {
    let need_n = || args.n.ok_or_else(|| input_error("this family needs --n"));
    let family = match args.family.as_str() {
        "path" => GraphFamily::Path { order: need_n()? },
        "cycle" => GraphFamily::Cycle { len: need_n()? },
        "complete" => GraphFamily::Complete { order: need_n()? },
        "complete-bipartite" => GraphFamily::CompleteBipartite {
            a: need_n()?,
            b: args.k.ok_or_else(|| input_error("complete-bipartite needs --k"))?,
        },
        "star" => GraphFamily::Star { leaves: need_n()? },
        "kneser" => GraphFamily::Kneser {
            set_size: need_n()?,
            subset_size: args.k.ok_or_else(|| input_error("kneser needs --k"))?,
        },
        "odd-graph" => GraphFamily::Odd { k: need_n()? },
        "petersen" => GraphFamily::Petersen,
        "hypercube" => GraphFamily::Hypercube { dim: need_n()? },
        other => return Err(input_error(format!("unknown family {other:?}"))),
    };
    let g = family::generate(&family).map_err(|e| input_error(e.to_string()))?;
    match args.format {
        Format::G6 => {
            let encoded = graph6::encode_graph6(&g).map_err(|e| input_error(e.to_string()))?;
            println!("{encoded}");
        }
        Format::Edgelist => print!("{}", edgelist::encode_edge_list(&g)),
    }
    Ok(ExitCode::SUCCESS)
}
