//! Text and JSON forms of the crate's data: graph edge lists, inline ideal
//! specs, Betti tables, and verification reports.
//!
//! Formats are deterministic: the same value always serializes to the same
//! bytes. See `docs/formats.md` in the repository root for the grammar.

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::linalg::FieldSpec;
use crate::monomial::{minimalize, Monomial, MonomialIdeal, Multidegree};
use crate::verify::VerificationReport;

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Parse the edge-list format:
///
/// ```text
/// # comment
/// n 5
/// e 1 4
/// e 2 4
/// ```
///
/// A leading `{` switches to the JSON form `{"n":5,"edges":[[1,4],[2,4]]}`.
pub fn parse_graph(src: &str) -> Result<SimpleGraph> {
    if src.trim_start().starts_with('{') {
        return parse_graph_json(src);
    }
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut parts = text.split_whitespace();
        match parts.next() {
            Some("n") => {
                let value = parts
                    .next()
                    .ok_or_else(|| Error::Parse { line, message: "expected `n <count>`".into() })?;
                let parsed = value.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid vertex count `{value}`"),
                })?;
                if n.replace(parsed).is_some() {
                    return Err(Error::Parse { line, message: "duplicate `n` line".into() });
                }
            }
            Some("e") => {
                if n.is_none() {
                    return Err(Error::Parse {
                        line,
                        message: "edge before the `n <count>` line".into(),
                    });
                }
                let mut endpoint = |what: &str| -> Result<usize> {
                    let value = parts.next().ok_or_else(|| Error::Parse {
                        line,
                        message: format!("edge line is missing its {what} endpoint"),
                    })?;
                    value.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("invalid vertex `{value}`"),
                    })
                };
                let u = endpoint("first")?;
                let v = endpoint("second")?;
                edges.push((u, v, line));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive `{other}` (expected `n` or `e`)"),
                });
            }
            None => {}
        }
        if parts.next().is_some() {
            return Err(Error::Parse { line, message: "trailing tokens".into() });
        }
    }
    let n = n.ok_or_else(|| Error::Parse { line: 0, message: "missing `n <count>` line".into() })?;
    let mut g = SimpleGraph::new(n, []).map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
    // re-add edges one at a time so diagnostics can carry line numbers
    let mut acc = Vec::new();
    for (u, v, line) in edges {
        acc.push((u, v));
        g = SimpleGraph::new(n, acc.iter().copied())
            .map_err(|e| Error::Parse { line, message: e.to_string() })?;
    }
    Ok(g)
}

pub fn render_graph(g: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn parse_graph_json(src: &str) -> Result<SimpleGraph> {
    let raw: GraphJson = serde_json::from_str(src)
        .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    SimpleGraph::new(raw.n, raw.edges)
}

pub fn graph_to_json(g: &SimpleGraph) -> serde_json::Value {
    serde_json::json!({ "n": g.n(), "edges": g.edges() })
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

/// Parse the inline ideal spec `I = x1*x2, x2*x3 @ n=3` (the leading `I =`
/// is optional). `0` and `1` denote the zero and unit ideals:
/// `0 @ n=3`, `1 @ n=3`. Exponents use `^`: `x1^2*x3 @ n=3`. A leading `{`
/// switches to the JSON form `{"n":3,"generators":[[1,1,0],[0,1,1]]}`.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    if src.trim_start().starts_with('{') {
        return parse_ideal_json(src);
    }
    let text = src.trim();
    let text = text.strip_prefix("I").map(|rest| rest.trim_start().strip_prefix('=').unwrap_or(rest).trim_start()).unwrap_or(text);
    let (body, ambient) = text.rsplit_once('@').ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing `@ n=<count>` suffix".into(),
    })?;
    let ambient = ambient.trim();
    let n: usize = ambient
        .strip_prefix("n")
        .and_then(|rest| rest.trim_start().strip_prefix('='))
        .map(str::trim)
        .ok_or_else(|| Error::Parse { line: 1, message: format!("expected `n=<count>`, got `{ambient}`") })?
        .parse()
        .map_err(|_| Error::Parse { line: 1, message: format!("invalid ambient `{ambient}`") })?;
    let body = body.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if body == "0" {
        return Ok(MonomialIdeal::zero(n));
    }
    if body == "1" {
        return Ok(MonomialIdeal::unit(n));
    }
    let mut gens = Vec::new();
    for term in body.split(',') {
        gens.push(parse_monomial(term.trim(), n)?);
    }
    minimalize(n, gens)
}

fn parse_monomial(term: &str, n: usize) -> Result<Monomial> {
    if term == "1" {
        return Ok(Monomial::unit(n));
    }
    let mut exps = vec![0u32; n];
    for factor in term.split('*') {
        let factor = factor.trim();
        let rest = factor.strip_prefix('x').ok_or_else(|| Error::Parse {
            line: 1,
            message: format!("expected a variable like `x2`, got `{factor}`"),
        })?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e.parse::<u32>().map_err(|_| Error::Parse {
                line: 1,
                message: format!("invalid exponent in `{factor}`"),
            })?),
            None => (rest, 1),
        };
        let v: usize = var.parse().map_err(|_| Error::Parse {
            line: 1,
            message: format!("invalid variable index in `{factor}`"),
        })?;
        if v == 0 || v > n {
            return Err(Error::Parse {
                line: 1,
                message: format!("variable x{v} outside ambient n={n}"),
            });
        }
        exps[v - 1] += exp;
    }
    Ok(Monomial::new(Multidegree::new(exps)))
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

fn parse_ideal_json(src: &str) -> Result<MonomialIdeal> {
    let raw: IdealJson = serde_json::from_str(src)
        .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    let gens = raw
        .generators
        .into_iter()
        .map(|exps| {
            if exps.len() != raw.n {
                return Err(Error::AmbientMismatch { left: raw.n, right: exps.len() });
            }
            Ok(Monomial::new(Multidegree::new(exps)))
        })
        .collect::<Result<Vec<_>>>()?;
    minimalize(raw.n, gens)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> serde_json::Value {
    let gens: Vec<&[u32]> =
        ideal.generators().iter().map(|g| g.degree().exponents()).collect();
    serde_json::json!({ "n": ideal.ambient(), "generators": gens })
}

// ---------------------------------------------------------------------------
// Betti tables
// ---------------------------------------------------------------------------

pub fn table_to_json(table: &BettiTable) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = table
        .iter()
        .map(|(i, a, v)| serde_json::json!({ "i": i, "a": a.exponents(), "value": v }))
        .collect();
    serde_json::json!({ "entries": entries })
}

pub fn graded_rows(table: &BettiTable) -> Vec<(usize, u32, usize)> {
    table
        .graded_positions()
        .into_iter()
        .map(|(i, j)| (i, j, table.graded(i, j)))
        .collect()
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

pub fn report_to_json(report: &VerificationReport, timing: bool) -> serde_json::Value {
    let violations: Vec<serde_json::Value> = report
        .violations
        .iter()
        .map(|v| {
            serde_json::json!({
                "position": v.position,
                "expected": v.expected,
                "actual": v.actual,
            })
        })
        .collect();
    let mut value = serde_json::json!({
        "claim": report.claim,
        "instance": report.instance,
        "pass": report.pass,
        "violations": violations,
    });
    if timing {
        value["wall_ms"] = serde_json::json!(report.wall_ms);
    }
    value
}

pub fn render_report(report: &VerificationReport, timing: bool) -> String {
    let mut out = format!(
        "claim {}: {}\ninstance: {}\n",
        report.claim,
        if report.pass { "PASS" } else { "FAIL" },
        report.instance
    );
    for v in &report.violations {
        out.push_str(&format!(
            "  violation at {}: expected {}, got {}\n",
            v.position, v.expected, v.actual
        ));
    }
    if timing {
        out.push_str(&format!("wall time: {:.1} ms\n", report.wall_ms));
    }
    out
}

// ---------------------------------------------------------------------------
// Field flags
// ---------------------------------------------------------------------------

/// Parse `q` (rationals) or `p:<prime>` (prime field).
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    match text {
        "q" | "Q" => Ok(FieldSpec::Rationals),
        other => {
            let p = other
                .strip_prefix("p:")
                .or_else(|| other.strip_prefix("P:"))
                .ok_or_else(|| Error::Parse {
                    line: 0,
                    message: format!("invalid field `{other}` (expected `q` or `p:<prime>`)"),
                })?;
            let p: u64 = p.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("invalid prime `{p}`"),
            })?;
            FieldSpec::prime(p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let src = "# fixture\nn 5\ne 1 4\ne 2 4\ne 2 5\ne 3 5\n";
        let g = parse_graph(src).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(1, 4), (2, 4), (2, 5), (3, 5)]);
        assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
        let json = graph_to_json(&g).to_string();
        assert_eq!(parse_graph(&json).unwrap(), g);
    }

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let err = parse_graph("n 3\ne 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph("n 3\ne 1 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph("e 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_graph("n 3\nq 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn ideal_spec_round_trip() {
        let i = parse_ideal("I = x1*x2, x2*x3 @ n=3").unwrap();
        assert_eq!(i.to_string(), "(x1*x2, x2*x3)");
        assert_eq!(parse_ideal("x1*x2, x2*x3 @ n=3").unwrap(), i);
        assert_eq!(parse_ideal(&ideal_to_json(&i).to_string()).unwrap(), i);
        assert!(parse_ideal("0 @ n=4").unwrap().is_zero());
        assert!(parse_ideal("1 @ n=4").unwrap().is_unit());
        let sq = parse_ideal("x1^2*x3 @ n=3").unwrap();
        assert!(!sq.is_squarefree());
        assert_eq!(sq.to_string(), "(x1^2*x3)");
    }

    #[test]
    fn ideal_spec_rejects_garbage() {
        assert!(parse_ideal("x1*x2").is_err());
        assert!(parse_ideal("y1 @ n=2").is_err());
        assert!(parse_ideal("x9 @ n=2").is_err());
        assert!(parse_ideal("x1 @ m=2").is_err());
    }

    #[test]
    fn field_flags() {
        assert_eq!(parse_field("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(parse_field("p:32003").unwrap(), FieldSpec::Prime(32003));
        assert!(parse_field("p:32001").is_err());
        assert!(parse_field("r").is_err());
    }
}
