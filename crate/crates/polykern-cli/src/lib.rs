//! Command-line front end for `polykern`.
//!
//! [`run`] parses the arguments, executes one subcommand and returns the
//! process exit code: 0 on success, 2 on a usage error, 1 on a structural or
//! algorithmic error, 3 when a cross-check against an oracle fails. Standard
//! output depends only on the inputs and the seed; wall times appear there
//! only with `--timing`.

#![forbid(unsafe_code)]
#![warn(missing_docs, rust_2018_idioms)]

#[cfg(doctest)]
mod book;
mod check;
mod report;
mod solve;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polykern::cwexpr::{parse_kexpr, KExpression};
use polykern::decomp::{modular_decomposition, nd_partition, split_decomposition};
use polykern::graph::generate::FAMILY_NAMES;
use polykern::graph::io::{parse_edge_list, write_edge_list};
use polykern::graph::{gen_family, FamilySpec, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

pub use report::{InstanceMeta, MethodResult, RunReport};
pub use solve::{Answer, Method, Problem};

/// Exit code for a usage error.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for a structural or algorithmic error.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for a disagreement with an oracle.
pub const EXIT_MISMATCH: i32 = 3;

/// A failed command, by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag combinations.
    Usage(String),
    /// Unreadable input, invalid structure or an algorithm error.
    Failure(String),
    /// A result disagreed with its oracle.
    Mismatch(String),
}

impl CliError {
    /// Process exit code.
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Mismatch(m) => m,
        }
    }
}

/// Standard output of a command, and the mismatch to report after it.
pub(crate) struct Output {
    pub text: String,
    pub mismatch: Option<String>,
}

impl From<String> for Output {
    fn from(text: String) -> Output {
        Output { text, mismatch: None }
    }
}

pub(crate) fn fail(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated tables with a header row.
    Csv,
    /// One JSON document.
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "polykern", version, about = "Decomposition-parameterized graph algorithms with oracle cross-checks")]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    format: Format,
    /// Include wall times in the output (makes it nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Solve {
    /// Edge-list file, or `-` for standard input.
    graph: PathBuf,
    /// Algorithm to run.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Also run the oracle and compare.
    #[arg(long)]
    verify: bool,
    /// Largest order the oracle runs on.
    #[arg(long)]
    oracle_cap: Option<usize>,
    /// Abort when a quotient's modules sit where its class forbids them.
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug, Clone)]
struct ExprSolve {
    /// Clique-width expression file.
    #[arg(long)]
    expr: PathBuf,
    /// Algorithm to run.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Also run the oracle and compare.
    #[arg(long)]
    verify: bool,
    /// Largest order the oracle runs on.
    #[arg(long)]
    oracle_cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a decomposition as JSON.
    Decompose {
        /// Edge-list file, or `-` for standard input.
        graph: PathBuf,
        /// `modular`, `split` or `nd`.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Print n, m and the width parameters.
    Params {
        /// Edge-list file, or `-` for standard input.
        graph: PathBuf,
    },
    /// Eccentricity of every vertex.
    Ecc(Solve),
    /// Diameter.
    Diameter(Solve),
    /// Gromov hyperbolicity.
    Hyp(Solve),
    /// Betweenness centrality of every vertex.
    Bc(Solve),
    /// Maximum matching.
    Match(Solve),
    /// Girth of the graph of an expression.
    Girth(ExprSolve),
    /// Triangle count of the graph of an expression.
    Triangles(ExprSolve),
    /// Generate an instance of a family as an edge list.
    Gen {
        /// Family name.
        #[arg(long)]
        family: String,
        /// Approximate order.
        #[arg(long)]
        n: usize,
        /// Random seed.
        #[arg(long)]
        seed: u64,
    },
    /// Run an algorithm against its oracle on generated instances.
    Check(check::CheckArgs),
    /// Time eccentricities on growing instances.
    Bench(check::BenchArgs),
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

pub(crate) struct Ctx {
    pub format: Format,
    pub timing: bool,
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let ctx = Ctx { format: cli.format, timing: cli.timing };
    let output: Output = match &cli.command {
        Command::Decompose { graph, method } => decompose(&read_graph(graph)?, method.unwrap_or(Method::Modular))?.into(),
        Command::Params { graph } => {
            let meta = InstanceMeta::of(&read_graph(graph)?);
            match ctx.format {
                Format::Csv => meta.to_csv(),
                Format::Json => report::json_line(&meta),
            }
            .into()
        }
        Command::Ecc(s) => solve_graph(&ctx, Problem::Ecc, s, err)?,
        Command::Diameter(s) => solve_graph(&ctx, Problem::Diameter, s, err)?,
        Command::Hyp(s) => solve_graph(&ctx, Problem::Hyp, s, err)?,
        Command::Bc(s) => solve_graph(&ctx, Problem::Bc, s, err)?,
        Command::Match(s) => solve_graph(&ctx, Problem::Match, s, err)?,
        Command::Girth(s) => solve_expr(&ctx, Problem::Girth, s, err)?,
        Command::Triangles(s) => solve_expr(&ctx, Problem::Triangles, s, err)?,
        Command::Gen { family, n, seed } => generate(&ctx, family, *n, *seed)?.into(),
        Command::Check(a) => check::check(&ctx, a, err)?,
        Command::Bench(a) => check::bench(&ctx, a, err)?,
    };
    out.write_all(output.text.as_bytes()).map_err(fail)?;
    match output.mismatch {
        Some(m) => Err(CliError::Mismatch(m)),
        None => Ok(()),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(fail)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read_text(path)?).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

fn read_expr(path: &Path) -> Result<KExpression, CliError> {
    parse_kexpr(&read_text(path)?).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

fn decompose(g: &Graph, method: Method) -> Result<String, CliError> {
    let value = match method {
        Method::Modular => modular_decomposition(g).to_json(),
        Method::Split => split_decomposition(g).to_json(),
        Method::Nd => {
            let p = nd_partition(g);
            serde_json::json!({ "nd": p.nd(), "classes": p.classes, "quotient": p.quotient })
        }
        other => return Err(CliError::Usage(format!("decompose supports modular, split and nd, not {}", other.name()))),
    };
    Ok(report::json_line(&value))
}

fn solve_graph(ctx: &Ctx, problem: Problem, s: &Solve, err: &mut dyn Write) -> Result<Output, CliError> {
    let input = solve::Input::graph(read_graph(&s.graph)?);
    let opts = solve::Options { strict: s.strict };
    report::single(ctx, problem, s.method, &input, opts, s.verify, s.oracle_cap, err)
}

fn solve_expr(ctx: &Ctx, problem: Problem, s: &ExprSolve, err: &mut dyn Write) -> Result<Output, CliError> {
    let input = solve::Input::expression(read_expr(&s.expr)?);
    report::single(ctx, problem, s.method, &input, solve::Options::default(), s.verify, s.oracle_cap, err)
}

fn generate(ctx: &Ctx, family: &str, n: usize, seed: u64) -> Result<String, CliError> {
    let spec = family_spec(family, n, &mut ChaCha8Rng::seed_from_u64(seed))?;
    let g = gen_family(&spec, seed).map_err(fail)?.graph;
    Ok(match ctx.format {
        Format::Csv => write_edge_list(&g),
        Format::Json => report::json_line(&serde_json::json!({ "spec": spec, "graph": g })),
    })
}

pub(crate) fn family_spec(family: &str, n: usize, rng: &mut ChaCha8Rng) -> Result<FamilySpec, CliError> {
    if !FAMILY_NAMES.contains(&family) {
        return Err(CliError::Usage(format!("unknown family {family:?}; expected one of {}", FAMILY_NAMES.join(", "))));
    }
    FamilySpec::random(family, n, rng).map_err(|e| CliError::Usage(e.to_string()))
}
