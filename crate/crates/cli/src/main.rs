//! Command-line surface for the partial complementation toolkit.
//!
//! Exit codes: 0 = yes/true, 1 = no/false, 2 = usage or input error,
//! 3 = budget exceeded.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use parcomp::cwd;
use parcomp::degenerate::{solve_degenerate, DegenerateOutcome};
use parcomp::graph::{Graph, VertexSet};
use parcomp::hardness;
use parcomp::io::{parse_graph, to_edgelist, GraphFormat};
use parcomp::mpartition::{self, MMatrix};
use parcomp::mso1;
use parcomp::oracle::{oracle_solve, ClassRecognizer};
use parcomp::recognizers::Target;
use parcomp::trianglefree::solve_triangle_free;

const EXIT_YES: i32 = 0;
const EXIT_NO: i32 = 1;
const EXIT_ERROR: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "parcomp", version, about = "Partial graph complementation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether some partial complement of the input graph lies in
    /// the target class
    Solve(SolveArgs),
    /// Exhaustive-subset oracle: ground truth, exponential in the vertex
    /// count
    Oracle(OracleArgs),
    /// Transform a clique instance into a partial-complement-to-regular
    /// instance
    Reduce(ReduceArgs),
    /// Clique-width expression tools
    Cwd {
        #[command(subcommand)]
        command: CwdCommand,
    },
    /// Formula tools
    Mso {
        #[command(subcommand)]
        command: MsoCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Oracle,
    TriangleFree,
    Degenerate,
    Mpartition,
}

#[derive(Args)]
struct SolveArgs {
    /// Input graph file
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    /// Target class: triangle-free, bipartite, forest, split,
    /// r-regular:<r>, degenerate:<d>, max-degree:<r>
    #[arg(long)]
    target: Option<String>,
    /// Target class given as a partition matrix file (k lines of k symbols
    /// from {0,1,*})
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    algo: Algo,
    /// Degeneracy bound for the degenerate solver (derived from the target
    /// when omitted)
    #[arg(long)]
    d: Option<usize>,
    /// Time budget in milliseconds for the degenerate solver's second
    /// phase; defaults to PARCOMP_BUDGET_MS when set
    #[arg(long)]
    budget_ms: Option<u64>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    /// Clique size the instance asks about
    #[arg(long)]
    clique: usize,
    /// Write the instance here (default: stdout); the JSON sidecar goes to
    /// <output>.json
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Sidecar destination overriding the default
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CwdCommand {
    /// Rewrite an expression tree so it evaluates to the partial
    /// complement by the given vertex set
    Transform {
        /// Expression file
        #[arg(long)]
        expr: PathBuf,
        /// Comma-separated vertex names forming S
        #[arg(long, default_value = "")]
        set: String,
        /// Re-evaluate the output and verify it against the adjacency-level
        /// partial complement
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum MsoCommand {
    /// Model-check a sentence on a graph
    Check {
        #[arg(long)]
        formula: PathBuf,
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Rewrite a sentence about G into one about a partial complement of G
    Rewrite {
        #[arg(long)]
        formula: PathBuf,
    },
}

/// Usage-level failure carrying a message for stderr.
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn error(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Oracle(args) => solve(SolveArgs {
            input: args.input,
            format: args.format,
            target: args.target,
            matrix: args.matrix,
            algo: Algo::Oracle,
            d: None,
            budget_ms: None,
        }),
        Command::Reduce(args) => reduce(args),
        Command::Cwd { command } => cwd_command(command),
        Command::Mso { command } => mso_command(command),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| error(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path, format: FormatArg) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    parse_graph(&text, format.into()).map_err(|e| error(format!("{}: {e}", path.display())))
}

/// What the user asked to complement into: a named class or a matrix.
enum TargetSpec {
    Named(Target),
    Matrix(MMatrix),
}

impl TargetSpec {
    fn resolve(target: &Option<String>, matrix: &Option<PathBuf>) -> Result<TargetSpec, CliError> {
        match (target, matrix) {
            (Some(_), Some(_)) => Err(error("--target and --matrix are mutually exclusive")),
            (None, None) => Err(error("one of --target or --matrix is required")),
            (Some(name), None) => {
                let t: Target = name.parse().map_err(|e| error(format!("{e}")))?;
                Ok(TargetSpec::Named(t))
            }
            (None, Some(path)) => {
                let m = MMatrix::parse(&read_file(path)?)
                    .map_err(|e| error(format!("{}: {e}", path.display())))?;
                Ok(TargetSpec::Matrix(m))
            }
        }
    }

    fn recognizer(&self) -> ClassRecognizer {
        match self {
            TargetSpec::Named(t) => t.recognizer(),
            TargetSpec::Matrix(m) => m.recognizer(),
        }
    }

    /// The 2x2 matrix for the matrix-lift solver, when one describes the
    /// target.
    fn as_2x2_matrix(&self) -> Option<MMatrix> {
        match self {
            TargetSpec::Matrix(m) if m.k() == 2 => Some(m.clone()),
            TargetSpec::Named(Target::Split) => Some(MMatrix::split()),
            TargetSpec::Named(Target::Bipartite) => Some(MMatrix::bipartite()),
            _ => None,
        }
    }
}

fn budget_from(args_budget: Option<u64>) -> Option<Duration> {
    args_budget
        .or_else(|| std::env::var("PARCOMP_BUDGET_MS").ok().and_then(|v| v.parse().ok()))
        .map(Duration::from_millis)
}

enum SolveOutcome {
    Yes(VertexSet),
    No,
    Unknown,
}

fn solve(args: SolveArgs) -> Result<i32, CliError> {
    let g = load_graph(&args.input, args.format)?;
    let spec = TargetSpec::resolve(&args.target, &args.matrix)?;
    let rec = spec.recognizer();
    let budget = budget_from(args.budget_ms);

    let algo = match args.algo {
        Algo::Auto => pick_algo(&spec, args.d),
        explicit => explicit,
    };

    let start = Instant::now();
    let outcome = match algo {
        Algo::Auto => unreachable!("auto resolves to a concrete algorithm"),
        Algo::Oracle => match oracle_solve(&g, &rec) {
            Some(s) => SolveOutcome::Yes(s),
            None => SolveOutcome::No,
        },
        Algo::TriangleFree => {
            let admissible = matches!(
                spec,
                TargetSpec::Named(ref t) if t.is_triangle_free_class()
            );
            if !admissible {
                return Err(error(
                    "the triangle-free solver requires a triangle-free target class \
                     (triangle-free, bipartite, or forest)",
                ));
            }
            match solve_triangle_free(&g, &rec) {
                Some(s) => SolveOutcome::Yes(s),
                None => SolveOutcome::No,
            }
        }
        Algo::Degenerate => {
            let d = args
                .d
                .or(match &spec {
                    TargetSpec::Named(t) => t.degeneracy_bound(),
                    TargetSpec::Matrix(_) => None,
                })
                .ok_or_else(|| {
                    error("--algo degenerate needs --d or a target with a degeneracy bound")
                })?;
            match solve_degenerate(&g, d, &rec, budget).map_err(|e| error(format!("{e}")))? {
                DegenerateOutcome::Found { witness, .. } => SolveOutcome::Yes(witness),
                DegenerateOutcome::NoSolution => SolveOutcome::No,
                DegenerateOutcome::BudgetExceeded => SolveOutcome::Unknown,
            }
        }
        Algo::Mpartition => {
            let m = spec.as_2x2_matrix().ok_or_else(|| {
                error("--algo mpartition needs a 2x2 matrix target (split, bipartite, or --matrix)")
            })?;
            match mpartition::solve_pc_mpartition(&g, &m).map_err(|e| error(format!("{e}")))? {
                Some(s) => SolveOutcome::Yes(s),
                None => SolveOutcome::No,
            }
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;

    // every witness is re-verified before being printed
    let (answer, witness, verified) = match &outcome {
        SolveOutcome::Yes(s) => {
            let ok = rec.accepts(&g.partial_complement(s).unwrap());
            assert!(ok, "solver returned a witness that fails re-verification");
            ("yes", Some(s.to_vec()), true)
        }
        SolveOutcome::No => ("no", None, false),
        SolveOutcome::Unknown => ("unknown", None, false),
    };
    println!(
        "{}",
        json!({
            "schema": 1,
            "answer": answer,
            "witness": witness,
            "verified": verified,
            "elapsed_ms": elapsed_ms,
        })
    );
    Ok(match outcome {
        SolveOutcome::Yes(_) => EXIT_YES,
        SolveOutcome::No => EXIT_NO,
        SolveOutcome::Unknown => EXIT_BUDGET,
    })
}

fn pick_algo(spec: &TargetSpec, d: Option<usize>) -> Algo {
    let usable_bound = |t: &Target| t.degeneracy_bound().is_some_and(|b| b >= 1);
    match spec {
        TargetSpec::Named(t) if t.is_triangle_free_class() => Algo::TriangleFree,
        TargetSpec::Named(Target::Split) => Algo::Mpartition,
        TargetSpec::Named(t) if d.is_some() || usable_bound(t) => Algo::Degenerate,
        TargetSpec::Matrix(m) if m.k() == 2 => Algo::Mpartition,
        _ => Algo::Oracle,
    }
}

fn reduce(args: ReduceArgs) -> Result<i32, CliError> {
    let g = load_graph(&args.input, args.format)?;
    let out =
        hardness::reduce_clique_to_regular(&g, args.clique).map_err(|e| error(format!("{e}")))?;
    let instance = to_edgelist(&out.graph);
    let sidecar = json!({
        "schema": 1,
        "regularity": out.regularity,
        "provenance": out.provenance.name(),
        "vertex_map": out.vertex_map,
    });
    match &args.output {
        Some(path) => {
            std::fs::write(path, &instance)
                .map_err(|e| error(format!("cannot write {}: {e}", path.display())))?;
            let sidecar_path = args
                .sidecar
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("{}.json", path.display())));
            std::fs::write(&sidecar_path, format!("{sidecar}\n"))
                .map_err(|e| error(format!("cannot write {}: {e}", sidecar_path.display())))?;
        }
        None => {
            print!("{instance}");
            println!("{sidecar}");
        }
    }
    Ok(EXIT_YES)
}

fn cwd_command(command: CwdCommand) -> Result<i32, CliError> {
    match command {
        CwdCommand::Transform { expr, set, check } => {
            let text = read_file(&expr)?;
            let e = cwd::parse_expression(&text)
                .map_err(|err| error(format!("{}: {err}", expr.display())))?;
            let names: BTreeSet<String> = set
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            let transformed = cwd::transform_partial_complement(&e, &names)
                .map_err(|err| error(format!("{err}")))?;
            println!("{}", cwd::print_expression(&transformed));
            if check {
                let original = cwd::eval_expression(&e).map_err(|err| error(format!("{err}")))?;
                let ids = (0..original.vertex_count())
                    .filter(|&v| names.contains(original.name_of(v)));
                let s = VertexSet::from_iter(original.vertex_count(), ids).unwrap();
                let expected: BTreeSet<(String, String)> = original
                    .graph()
                    .partial_complement(&s)
                    .unwrap()
                    .edges()
                    .into_iter()
                    .map(|(u, v)| {
                        let (a, b) =
                            (original.name_of(u).to_string(), original.name_of(v).to_string());
                        if a <= b {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect();
                let got = cwd::eval_expression(&transformed)
                    .map_err(|err| error(format!("{err}")))?;
                if got.named_edges() != expected {
                    return Err(error("check failed: transformed expression evaluates wrong"));
                }
                eprintln!(
                    "check: output evaluates to the partial complement ({} vertices, |S| = {}, \
                     width {} <= 3 * {})",
                    original.vertex_count(),
                    s.len(),
                    transformed.width(),
                    e.width()
                );
            }
            Ok(EXIT_YES)
        }
    }
}

fn mso_command(command: MsoCommand) -> Result<i32, CliError> {
    match command {
        MsoCommand::Check { formula, input, format } => {
            let f = mso1::parse_formula(&read_file(&formula)?)
                .map_err(|e| error(format!("{}: {e}", formula.display())))?;
            let g = load_graph(&input, format)?;
            let start = Instant::now();
            let holds = mso1::model_check(&g, &f).map_err(|e| error(format!("{e}")))?;
            println!(
                "{}",
                json!({
                    "schema": 1,
                    "answer": if holds { "yes" } else { "no" },
                    "witness": serde_json::Value::Null,
                    "verified": false,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                })
            );
            Ok(if holds { EXIT_YES } else { EXIT_NO })
        }
        MsoCommand::Rewrite { formula } => {
            let f = mso1::parse_formula(&read_file(&formula)?)
                .map_err(|e| error(format!("{}: {e}", formula.display())))?;
            println!("{}", mso1::print_formula(&mso1::rewrite_partial_complement(&f)));
            Ok(EXIT_YES)
        }
    }
}
