//! Command-line surface. [`run`] returns the exit code and the buffered stdout.
//!
//! Exit codes: 0 success, 1 a check suite failed, 2 invalid input.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{run_suite, SuiteConfig, DEFAULT_SEED};
use crate::degraphs::{assaf_graph, component_reports, to_dot, VertexFilter};
use crate::descent_sets::{is_realizable, leading_term, leading_yam_word};
use crate::error::{Error, Result};
use crate::limits;
use crate::qsym_schur::{hall_littlewood_f, hl_schur, macdonald_f, r_polynomial_f, r_schur, schur_from_f};
use crate::rsk_yam::{generate_yam, YamFilters};
use crate::shapes::{Cell, Diagram, Partition};

/// `p:4,3,2` (bottom row first) or `c:0,0;1,0;0,1`. Whitespace is ignored.
pub fn parse_diagram_spec(text: &str) -> Result<Diagram> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(body) = s.strip_prefix("p:") {
        return Ok(Diagram::from_partition(&parse_partition(body)?));
    }
    let Some(body) = s.strip_prefix("c:") else {
        return Err(Error::Parse(format!("diagram must start with p: or c:, got {text:?}")));
    };
    let mut cells = Vec::new();
    for item in body.split(';').filter(|t| !t.is_empty()) {
        let (x, y) = item
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("cell {item:?} is not x,y")))?;
        let coord = |t: &str| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad coordinate {t:?}")));
        cells.push(Cell::new(coord(x)?, coord(y)?));
    }
    Diagram::new(cells)
}

/// Comma-separated weakly decreasing positive parts; empty text is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let parts = s
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

#[derive(Parser, Debug)]
#[command(name = "yamhall", about = "Schur expansions over arbitrary diagrams, checked by brute force")]
pub struct Cli {
    /// Lift the size caps on brute-force enumerations.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a polynomial in the Schur or fundamental basis.
    Expand(ExpandArgs),
    /// List Yamanouchi words of a given content.
    Words(WordsArgs),
    /// Build the Assaf graph of a diagram.
    Graph(GraphArgs),
    /// Whether a descent set is attained by an inversion-free filling.
    Realizable(DescentArgs),
    /// Leading Yamanouchi word and Schur index for a realizable descent set.
    Leading(DescentArgs),
    /// Run a named verification suite.
    Check(CheckArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Poly {
    Hl,
    Mac,
    R,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Basis {
    Schur,
    Fundamental,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long, value_enum)]
    poly: Poly,
    #[arg(long)]
    diagram: String,
    #[arg(long, value_enum, default_value = "schur")]
    basis: Basis,
    /// Descent set, required for `--poly r`.
    #[arg(long)]
    descents: Option<String>,
}

#[derive(Args, Debug)]
struct WordsArgs {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    diagram: Option<String>,
    #[arg(long)]
    no_jam: bool,
    #[arg(long)]
    inv0: bool,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long)]
    diagram: String,
    #[arg(long, conflicts_with = "descents")]
    inv0: bool,
    #[arg(long)]
    descents: Option<String>,
    /// Write Graphviz DOT here (`-` for stdout) instead of the JSON summary.
    #[arg(long)]
    dot: Option<String>,
    /// Per-component Schur expansions.
    #[arg(long)]
    report: bool,
}

#[derive(Args, Debug)]
struct DescentArgs {
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    descents: String,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

/// Parse `args` (program name first) and execute. Never prints.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let previous = limits::override_enabled();
    if cli.force {
        limits::set_override(true);
    }
    let result = execute(cli.command);
    limits::set_override(previous);
    match result {
        Ok((code, out)) => (code, out),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn json_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn execute(cmd: Command) -> Result<(i32, String)> {
    match cmd {
        Command::Expand(a) => expand(a).map(|v| (0, json_line(&v))),
        Command::Words(a) => words(a).map(|v| (0, json_line(&v))),
        Command::Graph(a) => graph(a),
        Command::Realizable(a) => {
            let delta = parse_diagram_spec(&a.diagram)?;
            let gamma = parse_diagram_spec(&a.descents)?;
            Ok((0, json_line(&json!({ "realizable": is_realizable(&gamma, &delta)? }))))
        }
        Command::Leading(a) => {
            let delta = parse_diagram_spec(&a.diagram)?;
            let gamma = parse_diagram_spec(&a.descents)?;
            let w = leading_yam_word(&gamma, &delta)?;
            let mu = leading_term(&gamma, &delta)?;
            Ok((0, json_line(&json!({ "word": w.to_string(), "partition": mu.parts() }))))
        }
        Command::Check(a) => {
            let cfg = SuiteConfig { max_n: a.max_n, samples: a.samples, seed: a.seed };
            let o = run_suite(&a.suite, &cfg)?;
            let v = json!({
                "suite": o.suite,
                "criterion": o.criterion,
                "passed": o.passed,
                "gating": o.gating,
                "cases": o.cases,
                "failures": o.failures,
                "notes": o.notes,
            });
            Ok((if o.passed || !o.gating { 0 } else { 1 }, json_line(&v)))
        }
    }
}

fn expand(a: ExpandArgs) -> Result<Value> {
    let delta = parse_diagram_spec(&a.diagram)?;
    let gamma = a.descents.as_deref().map(parse_diagram_spec).transpose()?;
    if gamma.is_some() && !matches!(a.poly, Poly::R) {
        return Err(Error::Parse("--descents only applies to --poly r".into()));
    }
    let need_gamma = || gamma.clone().ok_or(Error::DiagramRequired("--poly r needs --descents"));
    Ok(match (a.poly, a.basis) {
        (Poly::Hl, Basis::Fundamental) => hall_littlewood_f(&delta)?.to_json(),
        (Poly::Mac, Basis::Fundamental) => macdonald_f(&delta)?.to_json(),
        (Poly::R, Basis::Fundamental) => r_polynomial_f(&need_gamma()?, &delta)?.to_json(),
        (Poly::Hl, Basis::Schur) => hl_schur(&delta)?.to_json(),
        (Poly::Mac, Basis::Schur) => schur_from_f(&macdonald_f(&delta)?)?.to_json(),
        (Poly::R, Basis::Schur) => r_schur(&need_gamma()?, &delta)?.to_json(),
    })
}

fn words(a: WordsArgs) -> Result<Value> {
    let lambda = parse_partition(&a.shape)?;
    let delta = a.diagram.as_deref().map(parse_diagram_spec).transpose()?;
    let filters = YamFilters { no_jam: a.no_jam, inv_zero: a.inv0, ..Default::default() };
    let ws = generate_yam(&lambda, delta.as_ref(), &filters)?;
    Ok(Value::Array(ws.iter().map(|w| Value::String(w.to_string())).collect()))
}

fn graph(a: GraphArgs) -> Result<(i32, String)> {
    let delta = parse_diagram_spec(&a.diagram)?;
    let filter = match (&a.descents, a.inv0) {
        (Some(g), _) => VertexFilter::InvZeroDescents(parse_diagram_spec(g)?),
        (None, true) => VertexFilter::InvZero,
        (None, false) => VertexFilter::All,
    };
    let g = assaf_graph(&delta, &filter)?;
    let mut out = String::new();
    if let Some(path) = &a.dot {
        let dot = to_dot(&g);
        if path == "-" {
            out.push_str(&dot);
        } else {
            std::fs::write(path, dot).map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
        }
    } else {
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        out.push_str(&json_line(&json!({
            "diagram": delta.to_string(),
            "vertices": g.len(),
            "edges": g.edge_count(),
            "componentSizes": sizes,
        })));
    }
    if a.report {
        let reports = component_reports(&g)?;
        out.push_str(&json_line(&Value::Array(reports.iter().map(|r| r.to_json()).collect())));
    }
    Ok((0, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_grammar() {
        assert_eq!(parse_diagram_spec("p:3,3").unwrap().len(), 6);
        assert_eq!(parse_diagram_spec(" p: 3, 3 ").unwrap().len(), 6);
        let stair = parse_diagram_spec("c:0,0;1,1").unwrap();
        assert_eq!(stair.cells(), [Cell::new(1, 1), Cell::new(0, 0)]);
        assert_eq!(stair, parse_diagram_spec("c:1,1;0,0").unwrap());
        assert!(parse_diagram_spec("p:3,4").is_err());
        assert!(parse_diagram_spec("c:0,0;0,0").is_err());
        assert!(parse_diagram_spec("q:1").is_err());
        assert!(parse_diagram_spec("c:0").is_err());
        assert!(parse_diagram_spec("c:").unwrap().is_empty());
    }

    #[test]
    fn spec_round_trips_through_display() {
        for s in ["p:4,3,2", "c:1,1;0,0"] {
            assert_eq!(parse_diagram_spec(s).unwrap().to_string(), s);
        }
    }
}
