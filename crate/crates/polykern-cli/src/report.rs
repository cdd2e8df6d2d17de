//! Run reports and single-instance execution.

use crate::solve::{run_method, run_oracle, Input, Method, Options, Problem};
use crate::{CliError, Ctx, Format, Output};
use polykern::decomp::{effective_q, modular_decomposition, nd_partition, split_decomposition};
use polykern::graph::Graph;
use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::time::Instant;

/// Order, size and width parameters of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceMeta {
    /// Vertices.
    pub n: usize,
    /// Edges.
    pub m: usize,
    /// Connected components.
    pub components: usize,
    /// Modular width.
    pub mw: usize,
    /// Split width.
    pub sw: usize,
    /// Number of twin classes.
    pub nd: usize,
    /// Largest small prime quotient, floored at 7.
    pub effective_q: usize,
}

impl InstanceMeta {
    /// Computes every parameter of `g`.
    pub fn of(g: &Graph) -> InstanceMeta {
        if g.n() == 0 {
            return InstanceMeta { n: 0, m: 0, components: 0, mw: 0, sw: 0, nd: 0, effective_q: 0 };
        }
        let md = modular_decomposition(g);
        InstanceMeta {
            n: g.n(),
            m: g.m(),
            components: g.components().len(),
            mw: md.modular_width(),
            sw: split_decomposition(g).split_width(),
            nd: nd_partition(g).nd(),
            effective_q: effective_q(&md),
        }
    }

    /// Two-column `param,value` table.
    pub fn to_csv(&self) -> String {
        let rows = [
            ("n", self.n),
            ("m", self.m),
            ("components", self.components),
            ("mw", self.mw),
            ("sw", self.sw),
            ("nd", self.nd),
            ("effective_q", self.effective_q),
        ];
        let mut out = String::from("param,value\n");
        for (k, v) in rows {
            out.push_str(&format!("{k},{v}\n"));
        }
        out
    }
}

/// One algorithm's result inside a [`RunReport`].
#[derive(Debug, Clone, Serialize)]
pub struct MethodResult {
    /// Method name.
    pub method: String,
    /// The answer.
    pub value: Value,
    /// Counters kept by the method.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub stats: Value,
    /// Wall time in milliseconds, with `--timing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Everything known about one run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    /// Problem name.
    pub problem: String,
    /// Instance parameters.
    #[serde(flatten)]
    pub instance: InstanceMeta,
    /// Results, the oracle last when it ran.
    pub results: Vec<MethodResult>,
    /// Total wall time in milliseconds, with `--timing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
    /// Whether the method agreed with the oracle; absent when the oracle
    /// did not run.
    pub oracle_agrees: Option<bool>,
}

pub(crate) fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// A method run and, when requested and within the cap, the oracle run.
pub(crate) struct Trial {
    pub report: RunReport,
    pub answer: crate::Answer,
    pub oracle: Option<crate::Answer>,
}

/// Runs `method` and optionally the oracle on one input.
pub(crate) fn trial(
    ctx: &Ctx,
    problem: Problem,
    method: Method,
    input: &Input,
    opts: Options,
    oracle: bool,
    cap: usize,
) -> Result<Trial, CliError> {
    let start = Instant::now();
    let (answer, stats) = run_method(problem, method, input, opts)?;
    let timing = |t: Instant| ctx.timing.then(|| ms(t));
    let mut results =
        vec![MethodResult { method: method.name().into(), value: answer.to_json(), stats, wall_ms: timing(start) }];
    let mut oracle_agrees = None;
    let mut oracle_answer = None;
    if oracle && method != Method::Oracle && input.graph.n() <= cap {
        let t = Instant::now();
        let want = run_oracle(problem, input)?;
        results.push(MethodResult { method: "oracle".into(), value: want.to_json(), stats: Value::Null, wall_ms: timing(t) });
        oracle_agrees = Some(answer.agrees(&want));
        oracle_answer = Some(want);
    }
    let instance = if ctx.format == Format::Json {
        InstanceMeta::of(&input.graph)
    } else {
        InstanceMeta { n: input.graph.n(), m: input.graph.m(), components: 0, mw: 0, sw: 0, nd: 0, effective_q: 0 }
    };
    let report = RunReport { problem: problem.name().into(), instance, results, wall_ms: timing(start), oracle_agrees };
    Ok(Trial { report, answer, oracle: oracle_answer })
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn single(
    ctx: &Ctx,
    problem: Problem,
    method: Option<Method>,
    input: &Input,
    opts: Options,
    verify: bool,
    cap: Option<usize>,
    err: &mut dyn Write,
) -> Result<Output, CliError> {
    let method = problem.resolve(method)?;
    let cap = cap.unwrap_or_else(|| problem.default_oracle_cap());
    let n = input.graph.n();
    if method == Method::Oracle && n > cap {
        return Err(CliError::Failure(format!("n = {n} exceeds the oracle cap {cap}; raise it with --oracle-cap")));
    }
    let t = trial(ctx, problem, method, input, opts, verify, cap)?;
    let mut mismatch = None;
    if verify && method != Method::Oracle {
        let _ = match t.report.oracle_agrees {
            None => writeln!(err, "oracle skipped: n = {n} exceeds the cap {cap}"),
            Some(true) => writeln!(err, "oracle agrees"),
            Some(false) => {
                mismatch = Some(format!("{} disagrees with the oracle", method.name()));
                Ok(())
            }
        };
    }
    let text = match ctx.format {
        Format::Csv => t.answer.to_text(problem),
        Format::Json => json_line(&t.report),
    };
    Ok(Output { text, mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meta_of_small_graphs() {
        let meta = InstanceMeta::of(&Graph::path(4).disjoint_union(&Graph::complete(2)));
        assert_eq!((meta.n, meta.m, meta.components), (6, 4, 2));
        assert_eq!((meta.mw, meta.sw, meta.effective_q), (4, 2, 7));
        assert_eq!(InstanceMeta::of(&Graph::empty(0)).n, 0);
        assert!(meta.to_csv().starts_with("param,value\nn,6\n"));
    }
}
