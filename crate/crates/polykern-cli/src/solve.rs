//! Problems, methods and their answers.

use crate::{fail, CliError};
use clap::ValueEnum;
use polykern::cwexpr::{dp_girth, dp_triangle_count, eval_kexpr, KExpression};
use polykern::decomp::{modular_decomposition, nd_partition, split_decomposition, SplitTree};
use polykern::dist::{
    betweenness_nd, betweenness_split, eccentricities_modular, eccentricities_qq3, eccentricities_split,
    hyperbolicity_nd, hyperbolicity_qq3, hyperbolicity_split,
};
use polykern::graph::{
    oracle_betweenness, oracle_cycle_stats, oracle_eccentricities, oracle_hyperbolicity_capped,
    oracle_maximum_matching, rational_to_string, Distance, Graph, HalfInteger, Rational,
};
use polykern::matching::{
    max_matching_modular_with, max_matching_qq3_with, Matching, ModularOptions, Qq3Options, StructurePolicy,
};
use serde_json::{json, Value};

/// What to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    /// Eccentricity of every vertex.
    Ecc,
    /// Diameter.
    Diameter,
    /// Gromov hyperbolicity.
    Hyp,
    /// Betweenness centrality.
    Bc,
    /// Maximum matching.
    Match,
    /// Girth of an expression's graph.
    Girth,
    /// Triangles of an expression's graph.
    Triangles,
}

impl Problem {
    /// Subcommand name.
    pub fn name(self) -> &'static str {
        match self {
            Problem::Ecc => "ecc",
            Problem::Diameter => "diameter",
            Problem::Hyp => "hyp",
            Problem::Bc => "bc",
            Problem::Match => "match",
            Problem::Girth => "girth",
            Problem::Triangles => "triangles",
        }
    }

    /// Methods accepted, the default first. `oracle` is always accepted.
    pub fn methods(self) -> &'static [Method] {
        use Method::*;
        match self {
            Problem::Ecc | Problem::Diameter => &[Split, Modular, Qq3],
            Problem::Hyp => &[Split, Nd, Qq3],
            Problem::Bc => &[Split, Nd],
            Problem::Match => &[Qq3, Modular],
            Problem::Girth | Problem::Triangles => &[Cw],
        }
    }

    /// Largest order the oracle runs on unless overridden.
    pub fn default_oracle_cap(self) -> usize {
        match self {
            Problem::Ecc | Problem::Diameter => 20_000,
            Problem::Hyp => 40,
            Problem::Bc => 200,
            Problem::Match => 500,
            Problem::Girth | Problem::Triangles => 5_000,
        }
    }

    /// Whether the input is a graph rather than an expression.
    pub fn takes_graph(self) -> bool {
        !matches!(self, Problem::Girth | Problem::Triangles)
    }

    /// Resolves `--method`, rejecting methods the problem has no
    /// implementation for.
    pub fn resolve(self, method: Option<Method>) -> Result<Method, CliError> {
        let allowed = self.methods();
        match method {
            None => Ok(allowed[0]),
            Some(m) if m == Method::Oracle || allowed.contains(&m) => Ok(m),
            Some(m) => {
                let names: Vec<&str> = allowed.iter().map(|m| m.name()).collect();
                Err(CliError::Usage(format!(
                    "{} has no {} method; expected one of {}, oracle",
                    self.name(),
                    m.name(),
                    names.join(", ")
                )))
            }
        }
    }
}

/// Algorithm choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Split decomposition.
    Split,
    /// Modular decomposition.
    Modular,
    /// Twin classes.
    Nd,
    /// Modular decomposition with structured prime quotients.
    Qq3,
    /// Clique-width expression dynamic program.
    Cw,
    /// Brute-force reference.
    Oracle,
}

impl Method {
    /// Flag value.
    pub fn name(self) -> &'static str {
        match self {
            Method::Split => "split",
            Method::Modular => "modular",
            Method::Nd => "nd",
            Method::Qq3 => "qq3",
            Method::Cw => "cw",
            Method::Oracle => "oracle",
        }
    }
}

/// Solver switches.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Structure violations in the matching dispatch are errors.
    pub strict: bool,
}

/// A graph, with the expression it came from and a known split tree when
/// available.
pub struct Input {
    /// The graph.
    pub graph: Graph,
    /// Source expression.
    pub expr: Option<KExpression>,
    /// Split tree to use instead of computing one.
    pub split: Option<SplitTree>,
}

impl Input {
    /// A bare graph.
    pub fn graph(graph: Graph) -> Input {
        Input { graph, expr: None, split: None }
    }

    /// The graph of an expression.
    pub fn expression(expr: KExpression) -> Input {
        Input { graph: eval_kexpr(&expr).graph, expr: Some(expr), split: None }
    }

    fn split_tree(&self) -> std::borrow::Cow<'_, SplitTree> {
        match &self.split {
            Some(st) => std::borrow::Cow::Borrowed(st),
            None => std::borrow::Cow::Owned(split_decomposition(&self.graph)),
        }
    }
}

/// A computed result.
#[derive(Debug, Clone, PartialEq)]
pub enum Answer {
    /// Per-vertex eccentricities.
    Ecc(Vec<Distance>),
    /// A distance: the diameter or the girth.
    Distance(Distance),
    /// Hyperbolicity.
    Hyp(HalfInteger),
    /// Per-vertex betweenness.
    Bc(Vec<Rational>),
    /// A matching.
    Match(Matching),
    /// A count.
    Count(String),
}

fn dist_json(d: Distance) -> Value {
    match d {
        Distance::Finite(k) => json!(k),
        Distance::Unreachable => Value::Null,
    }
}

impl Answer {
    /// Equality up to the freedom the problem allows: matchings agree when
    /// their cardinalities do.
    pub fn agrees(&self, other: &Answer) -> bool {
        match (self, other) {
            (Answer::Match(a), Answer::Match(b)) => a.cardinality() == b.cardinality(),
            _ => self == other,
        }
    }

    /// JSON value.
    pub fn to_json(&self) -> Value {
        match self {
            Answer::Ecc(e) => Value::Array(e.iter().map(|&d| dist_json(d)).collect()),
            Answer::Distance(d) => dist_json(*d),
            Answer::Hyp(h) => json!(h.to_string()),
            Answer::Bc(b) => Value::Array(b.iter().map(|r| json!(rational_to_string(r))).collect()),
            Answer::Match(f) => json!({ "pairs": f.pairs(), "cardinality": f.cardinality() }),
            Answer::Count(c) => json!(c),
        }
    }

    /// Plain-text rendering for `problem`.
    pub fn to_text(&self, problem: Problem) -> String {
        let mut out = String::new();
        match self {
            Answer::Ecc(e) => {
                out.push_str("vertex,ecc\n");
                for (v, d) in e.iter().enumerate() {
                    out.push_str(&format!("{v},{d}\n"));
                }
            }
            Answer::Bc(b) => {
                out.push_str("vertex,betweenness\n");
                for (v, r) in b.iter().enumerate() {
                    out.push_str(&format!("{v},{}\n", rational_to_string(r)));
                }
            }
            Answer::Match(f) => {
                for (u, v) in f.pairs() {
                    out.push_str(&format!("{u} {v}\n"));
                }
                out.push_str(&format!("cardinality {}\n", f.cardinality()));
            }
            Answer::Distance(d) => out.push_str(&format!("{}\n{d}\n", problem.name())),
            Answer::Hyp(h) => out.push_str(&format!("hyperbolicity\n{h}\n")),
            Answer::Count(c) => out.push_str(&format!("{}\n{c}\n", problem.name())),
        }
        out
    }

    /// A short summary for tables.
    pub fn summary(&self) -> String {
        match self {
            Answer::Ecc(e) => {
                let max = e.iter().max().copied().unwrap_or(Distance::Finite(0));
                format!("diam={max}")
            }
            Answer::Distance(d) => d.to_string(),
            Answer::Hyp(h) => h.to_string(),
            Answer::Bc(b) => {
                let total: Rational = b.iter().cloned().sum();
                format!("sum={}", rational_to_string(&total))
            }
            Answer::Match(f) => f.cardinality().to_string(),
            Answer::Count(c) => c.clone(),
        }
    }
}

fn diameter(e: &[Distance]) -> Distance {
    e.iter().max().copied().unwrap_or(Distance::Finite(0))
}

/// Runs `method` (not the oracle) on `input`. The second value is a JSON
/// object of counters, when the method keeps any.
pub fn run_method(problem: Problem, method: Method, input: &Input, opts: Options) -> Result<(Answer, Value), CliError> {
    if method == Method::Oracle {
        return Ok((run_oracle(problem, input)?, Value::Null));
    }
    let g = &input.graph;
    let none = Value::Null;
    Ok(match (problem, method) {
        (Problem::Ecc | Problem::Diameter, _) => {
            let e = match method {
                Method::Split => eccentricities_split(g, &input.split_tree()),
                Method::Modular => eccentricities_modular(g, &modular_decomposition(g)),
                _ => eccentricities_qq3(g, &modular_decomposition(g)),
            }
            .map_err(fail)?;
            if problem == Problem::Diameter {
                (Answer::Distance(diameter(&e)), none)
            } else {
                (Answer::Ecc(e), none)
            }
        }
        (Problem::Hyp, _) => {
            let h = match method {
                Method::Split => hyperbolicity_split(g, &input.split_tree()),
                Method::Nd => hyperbolicity_nd(g, &nd_partition(g)),
                _ => hyperbolicity_qq3(g, &modular_decomposition(g)),
            }
            .map_err(fail)?;
            (Answer::Hyp(h), none)
        }
        (Problem::Bc, _) => {
            let b = match method {
                Method::Split => betweenness_split(g, &input.split_tree()),
                _ => betweenness_nd(g, &nd_partition(g)),
            }
            .map_err(fail)?;
            (Answer::Bc(b), none)
        }
        (Problem::Match, Method::Modular) => {
            let (f, stats) = max_matching_modular_with(g, &modular_decomposition(g), ModularOptions::default()).map_err(fail)?;
            (Answer::Match(f), serde_json::to_value(stats).map_err(fail)?)
        }
        (Problem::Match, _) => {
            let policy = if opts.strict { StructurePolicy::Strict } else { StructurePolicy::Fallback };
            let (f, stats) =
                max_matching_qq3_with(g, &modular_decomposition(g), Qq3Options { policy, audit: false }).map_err(fail)?;
            (Answer::Match(f), serde_json::to_value(stats).map_err(fail)?)
        }
        (Problem::Girth | Problem::Triangles, _) => {
            let expr = input.expr.as_ref().ok_or_else(|| CliError::Usage("the cw method needs an expression".into()))?;
            if problem == Problem::Girth {
                (Answer::Distance(dp_girth(expr).map_err(fail)?), none)
            } else {
                (Answer::Count(dp_triangle_count(expr).map_err(fail)?.to_string()), none)
            }
        }
    })
}

/// Runs the brute-force oracle for `problem`.
pub fn run_oracle(problem: Problem, input: &Input) -> Result<Answer, CliError> {
    let g = &input.graph;
    Ok(match problem {
        Problem::Ecc => Answer::Ecc(oracle_eccentricities(g)),
        Problem::Diameter => Answer::Distance(diameter(&oracle_eccentricities(g))),
        Problem::Hyp => Answer::Hyp(oracle_hyperbolicity_capped(g, usize::MAX).map_err(fail)?),
        Problem::Bc => Answer::Bc(oracle_betweenness(g).map_err(fail)?),
        Problem::Match => Answer::Match(oracle_maximum_matching(g)),
        Problem::Girth => Answer::Distance(oracle_cycle_stats(g).girth),
        Problem::Triangles => Answer::Count(oracle_cycle_stats(g).triangles.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use polykern::matching::Matching;

    #[test]
    fn resolve_defaults_and_rejects() {
        assert_eq!(Problem::Match.resolve(None).unwrap(), Method::Qq3);
        assert_eq!(Problem::Bc.resolve(Some(Method::Oracle)).unwrap(), Method::Oracle);
        assert!(matches!(Problem::Hyp.resolve(Some(Method::Modular)), Err(CliError::Usage(_))));
        assert!(matches!(Problem::Girth.resolve(Some(Method::Split)), Err(CliError::Usage(_))));
    }

    #[test]
    fn matchings_agree_by_cardinality() {
        let a = Answer::Match(Matching::from_pairs(4, &[(0, 1), (2, 3)]).unwrap());
        let b = Answer::Match(Matching::from_pairs(4, &[(0, 3), (1, 2)]).unwrap());
        let c = Answer::Match(Matching::from_pairs(4, &[(0, 1)]).unwrap());
        assert!(a.agrees(&b));
        assert!(!a.agrees(&c));
    }

    #[test]
    fn unreachable_is_null_in_json() {
        let e = Answer::Ecc(vec![Distance::Finite(1), Distance::Unreachable]);
        assert_eq!(e.to_json(), json!([1, null]));
        assert_eq!(Answer::Distance(Distance::Unreachable).to_text(Problem::Girth), "girth\ninf\n");
        assert_eq!(Answer::Hyp(HalfInteger::HALF).to_json(), json!("1/2"));
    }

    #[test]
    fn every_method_agrees_with_the_oracle_on_a_small_graph() {
        let input = Input::graph(Graph::cycle(6));
        for problem in [Problem::Ecc, Problem::Diameter, Problem::Hyp, Problem::Bc, Problem::Match] {
            let want = run_oracle(problem, &input).unwrap();
            for &m in problem.methods() {
                let (got, _) = run_method(problem, m, &input, Options::default()).unwrap();
                assert!(got.agrees(&want), "{} {}", problem.name(), m.name());
            }
        }
    }
}
