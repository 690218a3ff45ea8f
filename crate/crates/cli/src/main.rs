//! `cxh`: graph utilities, exact solvers, reductions and the check suite for
//! cycle convexity.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 internal error
//! (including an exhausted search budget).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cycle_convexity::format::{parse_auto, to_edge_list, to_graph6};
use cycle_convexity::gadgets::{build_cartesian_hardness, build_cartesian_mini, reduce_p3_to_cc};
use cycle_convexity::harness::{expand_ids, run_suite, suite_exit_code, Status, SuiteConfig, CATALOG};
use cycle_convexity::solvers::{
    convexity_fastpath, convexity_number_exact, hull_fastpath, hull_number_exact, independence_number_exact,
    SearchBudget,
};
use cycle_convexity::{closure, generate, product, ConvexityKind, Error, FamilySpec, Graph, ProductGraph, ProductKind, VertexSet};

const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "cxh", version, about = "Cycle convexity on graphs and graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or convert a graph.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Build a product graph and print it as an edge list.
    Product {
        #[arg(long, value_parser = parse_kind)]
        kind: ProductKind,
        /// First factor.
        a: String,
        /// Second factor.
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hull number with a minimum hull set.
    Hull {
        #[command(flatten)]
        conv: ConvexityArg,
        #[command(flatten)]
        mode: Mode,
        graph: String,
    },
    /// Convexity number with a largest proper convex set.
    Cnum {
        #[command(flatten)]
        conv: ConvexityArg,
        #[command(flatten)]
        mode: Mode,
        graph: String,
    },
    /// Independence number with a maximum independent set.
    Alpha { graph: String },
    /// Closure of a seed set, round by round.
    Closure {
        #[command(flatten)]
        conv: ConvexityArg,
        graph: String,
        /// Comma-separated vertex ids.
        #[arg(long)]
        seed_set: String,
    },
    /// Build a hardness reduction instance as a JSON envelope.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Run checks from the catalog.
    Verify {
        /// `all` or comma-separated check ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Overrides each check's default order cap.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// List the catalog and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Order, size, degrees, connectivity and bipartiteness.
    Stats { graph: String },
    /// Re-emit a graph in another format.
    Convert {
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        to: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// P3 hull number on a bipartite graph to cycle hull number.
    P3cc {
        graph: String,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cycle hull number to the cycle hull number of `G' □ K2`.
    CartK2 {
        graph: String,
        #[arg(short)]
        u: usize,
        #[arg(short)]
        k: usize,
        /// Use the small bowtie variant.
        #[arg(long)]
        mini: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conv {
    Cc,
    P3,
}

#[derive(Args)]
struct ConvexityArg {
    #[arg(long, value_enum, default_value_t = Conv::Cc)]
    convexity: Conv,
}

impl ConvexityArg {
    fn kind(&self) -> ConvexityKind {
        match self.convexity {
            Conv::Cc => ConvexityKind::Cycle,
            Conv::P3 => ConvexityKind::P3,
        }
    }
}

#[derive(Args)]
#[group(multiple = false)]
struct Mode {
    /// Exhaustive search (the default).
    #[arg(long)]
    exact: bool,
    /// Product formula; the graph must be given as `KIND(A,B)`.
    #[arg(long)]
    fastpath: bool,
}

fn parse_kind(s: &str) -> Result<ProductKind, String> {
    ProductKind::from_str(s).map_err(|e| e.to_string())
}

/// Failures mapped to exit codes.
enum Failure {
    Usage(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e)
    }
}

type CliResult<T> = Result<T, Failure>;

/// A graph source: a file in edge-list or graph6 format, a family such as
/// `path:4` or `grid:3x4`, or a product `KIND(A,B)` of two sources.
enum Source {
    Plain(Graph),
    Product(ProductGraph, Graph, Graph),
}

impl Source {
    fn graph(&self) -> &Graph {
        match self {
            Source::Plain(g) => g,
            Source::Product(p, _, _) => &p.graph,
        }
    }
}

fn split_product(s: &str) -> Option<(&str, &str, &str)> {
    let (kind, rest) = s.split_once('(')?;
    let inner = rest.strip_suffix(')')?;
    // split at the top-level comma
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((kind, &inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

fn load(spec: &str) -> CliResult<Source> {
    if let Some((kind, a, b)) = split_product(spec) {
        let kind = ProductKind::from_str(kind.trim()).map_err(|e| Failure::Usage(e.to_string()))?;
        let g = load(a.trim())?.graph().clone();
        let h = load(b.trim())?.graph().clone();
        let p = product(&g, &h, kind)?;
        return Ok(Source::Product(p, g, h));
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {spec}: {e}")))?;
        return Ok(Source::Plain(parse_auto(&text)?));
    }
    match FamilySpec::from_str(spec) {
        Ok(f) => Ok(Source::Plain(generate(f)?)),
        Err(_) => Err(Failure::Usage(format!(
            "`{spec}` is neither a readable file, a family such as path:4, nor KIND(A,B)"
        ))),
    }
}

fn budget() -> CliResult<SearchBudget> {
    let mut b = SearchBudget::representation_cap();
    if let Ok(raw) = std::env::var("CXH_TIME_LIMIT") {
        let secs: f64 = raw
            .trim()
            .parse()
            .ok()
            .filter(|s: &f64| s.is_finite() && *s > 0.0)
            .ok_or_else(|| Failure::Usage(format!("CXH_TIME_LIMIT must be a positive number of seconds, got `{raw}`")))?;
        b = b.with_time_limit(Duration::from_secs_f64(secs));
    }
    Ok(b)
}

fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn labels_of(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v)).collect()
}

fn fastpath_parts(src: &Source) -> CliResult<(&ProductGraph, &Graph, &Graph)> {
    match src {
        Source::Product(p, g, h) => Ok((p, g, h)),
        Source::Plain(_) => Err(Failure::Usage("--fastpath needs the graph as KIND(A,B)".into())),
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Graph(GraphCommand::Stats { graph }) => {
            let src = load(&graph)?;
            let g = src.graph();
            let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
            print_json(&json!({
                "order": g.order(),
                "size": g.size(),
                "min_degree": degrees.iter().min(),
                "max_degree": degrees.iter().max(),
                "components": g.components().len(),
                "connected": g.is_connected(),
                "bipartite": g.is_bipartite(),
                "tree": g.is_tree(),
            }));
        }
        Command::Graph(GraphCommand::Convert { graph, to, output }) => {
            let src = load(&graph)?;
            let text = match to {
                Format::EdgeList => to_edge_list(src.graph()),
                Format::Graph6 => to_graph6(src.graph()),
            };
            emit(&text, output.as_deref())?;
        }
        Command::Product { kind, a, b, output } => {
            let g = load(&a)?.graph().clone();
            let h = load(&b)?.graph().clone();
            let p = product(&g, &h, kind)?;
            emit(&to_edge_list(&p.graph), output.as_deref())?;
        }
        Command::Hull { conv, mode, graph } => {
            let src = load(&graph)?;
            let kind = conv.kind();
            let r = if mode.fastpath {
                let (p, g, h) = fastpath_parts(&src)?;
                if kind != ConvexityKind::Cycle {
                    return Err(Failure::Usage("product fast paths exist for the cycle convexity only".into()));
                }
                hull_fastpath(p, g, h)?
                    .ok_or_else(|| Failure::Usage("no fast path for this product; use --exact".into()))?
            } else {
                hull_number_exact(src.graph(), kind, budget()?)?
            };
            print_json(&json!({
                "value": r.value,
                "witness": r.witness.to_vec(),
                "labels": labels_of(src.graph(), &r.witness),
                "method": r.method,
            }));
        }
        Command::Cnum { conv, mode, graph } => {
            let src = load(&graph)?;
            let kind = conv.kind();
            let r = if mode.fastpath {
                let (p, g, h) = fastpath_parts(&src)?;
                if kind != ConvexityKind::Cycle {
                    return Err(Failure::Usage("product fast paths exist for the cycle convexity only".into()));
                }
                convexity_fastpath(p, g, h, budget()?)?
            } else {
                convexity_number_exact(src.graph(), kind, budget()?)?
            };
            print_json(&json!({
                "value": r.value,
                "witness": r.witness.to_vec(),
                "labels": labels_of(src.graph(), &r.witness),
                "method": r.method,
            }));
        }
        Command::Alpha { graph } => {
            let src = load(&graph)?;
            let r = independence_number_exact(src.graph(), budget()?)?;
            print_json(&json!({
                "value": r.value,
                "witness": r.witness.to_vec(),
                "labels": labels_of(src.graph(), &r.witness),
            }));
        }
        Command::Closure { conv, graph, seed_set } => {
            let src = load(&graph)?;
            let g = src.graph();
            let ids = seed_set
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Failure::Usage(format!("bad vertex id `{t}`"))))
                .collect::<CliResult<Vec<_>>>()?;
            let seed = VertexSet::from_vertices(g.order(), ids)?;
            let r = closure(g, &seed, conv.kind())?;
            let rounds: Vec<Vec<usize>> = r.rounds.iter().map(VertexSet::to_vec).collect();
            print_json(&json!({
                "closed": r.closed.to_vec(),
                "hull_set": r.closed.is_full(),
                "rounds": rounds,
            }));
        }
        Command::Reduce(ReduceCommand::P3cc { graph, k, output }) => {
            let g = load(&graph)?.graph().clone();
            let inst = reduce_p3_to_cc(&g, k)?;
            let text = serde_json::to_string_pretty(&inst.envelope()).expect("envelopes serialize");
            emit(&text, output.as_deref())?;
        }
        Command::Reduce(ReduceCommand::CartK2 { graph, u, k, mini, output }) => {
            let g = load(&graph)?.graph().clone();
            let inst = if mini {
                build_cartesian_mini(&g, u, k)?
            } else {
                build_cartesian_hardness(&g, u, k)?
            };
            let text = serde_json::to_string_pretty(&inst.envelope()).expect("envelopes serialize");
            emit(&text, output.as_deref())?;
        }
        Command::Verify {
            suite,
            seed,
            max_order,
            report,
            jobs,
            list,
        } => {
            if list {
                for c in CATALOG {
                    let tag = if c.in_suite { "" } else { " (not in all)" };
                    println!("{:<24} {}; cap: {} = {}{tag}", c.id, c.summary, c.cap.0, c.cap.1);
                }
                return Ok(0);
            }
            let ids = expand_ids(&suite).map_err(|e| Failure::Usage(e.to_string()))?;
            let config = SuiteConfig {
                seed,
                max_order,
                budget: budget()?,
            };
            let reports = run_suite(&ids, &config, jobs)?;
            for r in &reports {
                let status = match r.status {
                    Status::Passed => "PASS",
                    Status::Failed => "FAIL",
                    Status::Inconclusive => "INCONCLUSIVE",
                };
                println!("{status:<12} {:<24} {:>7} instances {:>8.2}s", r.id, r.instances_run, r.wallclock);
                if let Some(cx) = &r.counterexample {
                    println!("             counterexample: {}", cx.message);
                }
            }
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
                fs::write(&path, text + "\n")
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            return Ok(suite_exit_code(&reports) as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("cxh: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("cxh: {e}");
            ExitCode::from(INTERNAL)
        }
    }
}
