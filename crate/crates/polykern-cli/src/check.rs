//! `check` and `bench`: generated instances, oracle comparison and timing
//! tables.

use crate::report::{json_line, trial, MethodResult};
use crate::solve::{Input, Method, Options, Problem};
use crate::{family_spec, fail, CliError, Ctx, Format, Output};
use clap::Args;
use polykern::cwexpr::random_irredundant;
use polykern::graph::{gen_family, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::io::Write;
use std::time::Instant;

#[derive(Args, Debug)]
pub(crate) struct CheckArgs {
    /// Problem to check.
    #[arg(value_enum)]
    problem: Problem,
    /// Algorithm to compare against the oracle.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Generator family (graph problems).
    #[arg(long)]
    family: Option<String>,
    /// Approximate order of every instance.
    #[arg(long)]
    n: usize,
    /// Number of instances.
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Random seed.
    #[arg(long)]
    seed: u64,
    /// Largest order the oracle runs on.
    #[arg(long)]
    oracle_cap: Option<usize>,
    /// Abort when a quotient's modules sit where its class forbids them.
    #[arg(long)]
    strict: bool,
    /// Labels of generated expressions (girth, triangles).
    #[arg(long, default_value_t = 4)]
    width: usize,
}

#[derive(Args, Debug)]
pub(crate) struct BenchArgs {
    /// Generator family.
    #[arg(long, default_value = "distance-hereditary")]
    family: String,
    /// Orders, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000])]
    n: Vec<usize>,
    /// Eccentricity method.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Random seed.
    #[arg(long)]
    seed: u64,
    /// Largest order the all-pairs oracle runs on.
    #[arg(long, default_value_t = 10_000)]
    oracle_cap: usize,
}

/// The largest connected component, ties to the one with the smallest
/// vertex.
fn largest_component(g: &Graph) -> Graph {
    let comps = g.components();
    match comps.iter().max_by_key(|c| (c.len(), std::cmp::Reverse(c[0]))) {
        Some(c) if c.len() < g.n() => g.induced(c),
        _ => g.clone(),
    }
}

fn instance(problem: Problem, family: Option<&str>, n: usize, width: usize, rng: &mut ChaCha8Rng) -> Result<Input, CliError> {
    if !problem.takes_graph() {
        if width < 2 {
            return Err(CliError::Usage("--width must be at least 2".into()));
        }
        return Ok(Input::expression(random_irredundant(rng, n.max(1), width)));
    }
    let family = family.ok_or_else(|| CliError::Usage(format!("check {} needs --family", problem.name())))?;
    let spec = family_spec(family, n, rng)?;
    let g = gen_family(&spec, rng.gen()).map_err(fail)?.graph;
    Ok(Input::graph(if problem == Problem::Match { g } else { largest_component(&g) }))
}

pub(crate) fn check(ctx: &Ctx, a: &CheckArgs, err: &mut dyn Write) -> Result<Output, CliError> {
    let method = a.problem.resolve(a.method)?;
    if method == Method::Oracle {
        return Err(CliError::Usage("check compares a method against the oracle; pick a method".into()));
    }
    let cap = a.oracle_cap.unwrap_or_else(|| a.problem.default_oracle_cap());
    let opts = Options { strict: a.strict };
    let mut master = ChaCha8Rng::seed_from_u64(a.seed);
    let mut reports = Vec::with_capacity(a.trials);
    let mut csv = String::from("trial,n,m,method,result,oracle,agree\n");
    let (mut compared, mut mismatches) = (0usize, 0usize);
    for i in 0..a.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
        let input = instance(a.problem, a.family.as_deref(), a.n, a.width, &mut rng)?;
        let t = trial(ctx, a.problem, method, &input, opts, true, cap)?;
        let r = &t.report;
        let oracle_summary = t.oracle.as_ref().map_or(String::new(), |o| o.summary());
        let agree = match r.oracle_agrees {
            Some(true) => {
                compared += 1;
                "yes"
            }
            Some(false) => {
                compared += 1;
                mismatches += 1;
                "no"
            }
            None => "skipped",
        };
        csv.push_str(&format!(
            "{i},{},{},{},{},{oracle_summary},{agree}\n",
            r.instance.n,
            r.instance.m,
            method.name(),
            t.answer.summary()
        ));
        reports.push(t.report);
    }
    let _ = writeln!(err, "compared {compared} of {} trials, {mismatches} mismatches", a.trials);
    let text = match ctx.format {
        Format::Csv => csv,
        Format::Json => json_line(&json!({
            "problem": a.problem.name(),
            "method": method.name(),
            "family": a.family,
            "seed": a.seed,
            "trials": reports,
            "compared": compared,
            "mismatches": mismatches,
        })),
    };
    let mismatch = if mismatches > 0 {
        Some(format!("{mismatches} of {compared} compared trials disagree with the oracle"))
    } else if compared == 0 {
        Some(format!("no trial ran the oracle (cap {cap}); nothing was verified"))
    } else {
        None
    };
    Ok(Output { text, mismatch })
}

pub(crate) fn bench(ctx: &Ctx, a: &BenchArgs, err: &mut dyn Write) -> Result<Output, CliError> {
    let method = Problem::Ecc.resolve(a.method)?;
    let mut rows = Vec::new();
    let mut csv = String::from(if ctx.timing {
        "n,m,method,diameter,oracle,method_ms,oracle_ms\n"
    } else {
        "n,m,method,diameter,oracle\n"
    });
    let mut mismatches = 0;
    for &n in &a.n {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed ^ n as u64);
        let spec = family_spec(&a.family, n, &mut rng)?;
        let inst = gen_family(&spec, rng.gen()).map_err(fail)?;
        let g = largest_component(&inst.graph);
        let split = if g.n() == inst.graph.n() { inst.annotations.split_tree } else { None };
        let input = Input { graph: g, expr: None, split };
        let start = Instant::now();
        let (answer, _) = crate::solve::run_method(Problem::Ecc, method, &input, Options::default())?;
        let method_ms = start.elapsed().as_secs_f64() * 1e3;
        let (oracle, oracle_ms) = if input.graph.n() <= a.oracle_cap {
            let t = Instant::now();
            let want = crate::solve::run_oracle(Problem::Ecc, &input)?;
            let secs = t.elapsed().as_secs_f64() * 1e3;
            if want.agrees(&answer) {
                ("yes", Some(secs))
            } else {
                mismatches += 1;
                ("no", Some(secs))
            }
        } else {
            ("skipped", None)
        };
        let diam = answer.summary().trim_start_matches("diam=").to_string();
        let (nn, m) = (input.graph.n(), input.graph.m());
        let _ = writeln!(
            err,
            "n={nn} {}: {method_ms:.1} ms, oracle: {}",
            method.name(),
            oracle_ms.map_or("skipped".to_string(), |t| format!("{t:.1} ms"))
        );
        csv.push_str(&format!("{nn},{m},{},{diam},{oracle}", method.name()));
        if ctx.timing {
            csv.push_str(&format!(",{method_ms:.3},{}", oracle_ms.map_or(String::new(), |t| format!("{t:.3}"))));
        }
        csv.push('\n');
        rows.push(json!({
            "n": nn,
            "m": m,
            "method": MethodResult {
                method: method.name().into(),
                value: json!(diam),
                stats: serde_json::Value::Null,
                wall_ms: ctx.timing.then_some(method_ms),
            },
            "oracle": oracle,
            "oracle_ms": if ctx.timing { json!(oracle_ms) } else { serde_json::Value::Null },
        }));
    }
    let text = match ctx.format {
        Format::Csv => csv,
        Format::Json => json_line(&json!({ "family": a.family, "seed": a.seed, "rows": rows })),
    };
    let mismatch = (mismatches > 0).then(|| format!("{mismatches} orders disagree with the oracle"));
    Ok(Output { text, mismatch })
}
