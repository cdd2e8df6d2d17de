use polykern::cwexpr::P4_EXPRESSION;
use polykern_cli::{run, EXIT_FAILURE, EXIT_MISMATCH, EXIT_USAGE};
use std::path::Path;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn polykern(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("polykern").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// C5 as an edge list.
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(polykern(&["--help"]).code, 0);
    assert!(polykern(&["--version"]).out.starts_with("polykern"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.el", C5);
    assert_eq!(polykern(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(polykern(&["hyp", "--method", "modular", &g]).code, EXIT_USAGE);
    assert_eq!(polykern(&["gen", "--family", "no-such", "--n", "5", "--seed", "1"]).code, EXIT_USAGE);
    assert_eq!(polykern(&["decompose", "--method", "qq3", &g]).code, EXIT_USAGE);
    assert_eq!(polykern(&["check", "ecc", "--n", "10", "--seed", "1"]).code, EXIT_USAGE);
}

#[test]
fn failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.el");
    let r = polykern(&["ecc", missing.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_FAILURE);
    assert!(r.err.starts_with("error:"));
    let forest = write(dir.path(), "forest.el", "4 2\n0 1\n2 3\n");
    assert_eq!(polykern(&["ecc", &forest]).code, EXIT_FAILURE);
    let bad = write(dir.path(), "bad.el", "3 1\n0 9\n");
    assert_eq!(polykern(&["params", &bad]).code, EXIT_FAILURE);
    let g = write(dir.path(), "c5.el", C5);
    assert_eq!(polykern(&["hyp", "--method", "oracle", "--oracle-cap", "3", &g]).code, EXIT_FAILURE);
}

#[test]
fn csv_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.el", C5);
    let ecc = polykern(&["ecc", &g]);
    assert_eq!(ecc.code, 0);
    assert_eq!(ecc.out, "vertex,ecc\n0,2\n1,2\n2,2\n3,2\n4,2\n");
    assert_eq!(polykern(&["diameter", &g]).out, "diameter\n2\n");
    assert_eq!(polykern(&["hyp", &g]).out, "hyperbolicity\n1/2\n");
    let params = polykern(&["params", &g]).out;
    assert!(params.starts_with("param,value\nn,5\nm,5\ncomponents,1\nmw,5\nsw,5\nnd,5\n"));
    let bc = polykern(&["bc", "--method", "nd", &g]).out;
    assert_eq!(bc.lines().nth(1), Some("0,1"));
    let m = polykern(&["match", &g]).out;
    assert!(m.ends_with("cardinality 2\n"));
    assert_eq!(m.lines().count(), 3);
}

#[test]
fn expressions_and_verification() {
    let dir = tempfile::tempdir().unwrap();
    let e = write(dir.path(), "p4.kx", P4_EXPRESSION);
    let r = polykern(&["girth", "--expr", &e, "--verify"]);
    assert_eq!((r.code, r.out.as_str()), (0, "girth\ninf\n"));
    assert_eq!(r.err, "oracle agrees\n");
    assert_eq!(polykern(&["triangles", "--expr", &e]).out, "triangles\n0\n");
}

#[test]
fn json_outputs_parse() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.el", C5);
    let r = polykern(&["diameter", "--format", "json", "--verify", &g]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["problem"], "diameter");
    assert_eq!(v["mw"], 5);
    assert_eq!(v["oracle_agrees"], true);
    assert_eq!(v["results"][0]["value"], 2);
    assert!(v["results"][0].get("wall_ms").is_none());
    let timed: serde_json::Value =
        serde_json::from_str(&polykern(&["diameter", "--format", "json", "--timing", &g]).out).unwrap();
    assert!(timed["results"][0]["wall_ms"].is_number());
    for method in ["modular", "split", "nd"] {
        let d = polykern(&["decompose", "--method", method, &g]);
        assert_eq!(d.code, 0, "{method}");
        serde_json::from_str::<serde_json::Value>(&d.out).unwrap();
    }
    let m: serde_json::Value = serde_json::from_str(&polykern(&["match", "--format", "json", &g]).out).unwrap();
    assert_eq!(m["results"][0]["value"]["cardinality"], 2);
}

#[test]
fn gen_round_trips_through_params() {
    let dir = tempfile::tempdir().unwrap();
    let a = polykern(&["gen", "--family", "thick-spider", "--n", "30", "--seed", "5"]);
    let b = polykern(&["gen", "--family", "thick-spider", "--n", "30", "--seed", "5"]);
    assert_eq!(a.out, b.out);
    let g = write(dir.path(), "spider.el", &a.out);
    let params = polykern(&["params", &g]);
    assert_eq!(params.code, 0);
    let json = polykern(&["gen", "--format", "json", "--family", "cycle", "--n", "9", "--seed", "2"]);
    let v: serde_json::Value = serde_json::from_str(&json.out).unwrap();
    assert!(v["spec"].is_object());
}

#[test]
fn check_reports_agreement_and_vacuous_runs() {
    let r = polykern(&["check", "match", "--family", "thin-spider", "--n", "40", "--trials", "4", "--seed", "3"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.lines().next(), Some("trial,n,m,method,result,oracle,agree"));
    assert_eq!(r.out.lines().filter(|l| l.ends_with(",yes")).count(), 4);
    assert_eq!(r.err, "compared 4 of 4 trials, 0 mismatches\n");
    let capped = polykern(&["check", "bc", "--family", "cograph", "--n", "30", "--trials", "2", "--seed", "3", "--oracle-cap", "1"]);
    assert_eq!(capped.code, EXIT_MISMATCH);
    let cw = polykern(&["check", "triangles", "--n", "25", "--trials", "3", "--seed", "8", "--width", "3"]);
    assert_eq!(cw.code, 0, "{}", cw.err);
    assert_eq!(polykern(&["check", "girth", "--n", "5", "--seed", "1", "--width", "1"]).code, EXIT_USAGE);
    assert_eq!(polykern(&["check", "ecc", "--method", "oracle", "--family", "cycle", "--n", "5", "--seed", "1"]).code, EXIT_USAGE);
}

#[test]
fn bench_keeps_times_off_stdout() {
    let r = polykern(&["bench", "--n", "200,400", "--seed", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().next(), Some("n,m,method,diameter,oracle"));
    assert!(r.out.lines().skip(1).all(|l| l.ends_with(",yes")));
    assert!(r.err.contains(" ms"));
    let timed = polykern(&["--timing", "bench", "--n", "200", "--seed", "1"]);
    assert_eq!(timed.out.lines().next(), Some("n,m,method,diameter,oracle,method_ms,oracle_ms"));
}
