//! Line-oriented text formats for graphs, tournaments, certificates and
//! census exports.
//!
//! ```text
//! graph                 bitournament
//! v a b c               left u1 u2
//! e a b                 right v1
//! e b c                 arc u1 v1
//!                       arc v1 u2
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::kernel::{Graph, Side, VertexId};
use crate::oracle::RealizabilityCensus;
use crate::recognize::Certificate;
use crate::tournament::BipartiteTournament;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex {id}")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: unknown vertex {id}")]
    UnknownVertex { line: usize, id: String },
    #[error("line {line}: arc {tail} {head} lies within one side")]
    ArcWithinSide {
        line: usize,
        tail: String,
        head: String,
    },
    #[error("line {line}: vertex {id} is on both sides")]
    BothSides { line: usize, id: String },
    #[error("missing arc between {0} and {1}")]
    MissingArc(String, String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn parse_id(line: usize, word: &str) -> Result<VertexId, ParseError> {
    word.parse()
        .map_err(|_| syntax(line, format!("invalid vertex identifier {word:?}")))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    header: &str,
) -> Result<usize, ParseError> {
    match lines.next() {
        Some((line, words)) if words == [header] => Ok(line),
        Some((line, _)) => Err(syntax(line, format!("expected header `{header}`"))),
        None => Err(syntax(
            1,
            format!("empty input, expected header `{header}`"),
        )),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "graph")?;
    let mut vertices: BTreeSet<VertexId> = BTreeSet::new();
    let mut edges = Vec::new();
    for (line, words) in lines {
        match words[0] {
            "v" => {
                for w in &words[1..] {
                    let id = parse_id(line, w)?;
                    if !vertices.insert(id) {
                        return Err(ParseError::DuplicateVertex {
                            line,
                            id: w.to_string(),
                        });
                    }
                }
            }
            "e" => {
                if words.len() != 3 {
                    return Err(syntax(line, "edge line needs exactly two endpoints"));
                }
                let a = parse_id(line, words[1])?;
                let b = parse_id(line, words[2])?;
                for v in [&a, &b] {
                    if !vertices.contains(v) {
                        return Err(ParseError::UnknownVertex {
                            line,
                            id: v.to_string(),
                        });
                    }
                }
                if a == b {
                    return Err(syntax(line, format!("self-loop at {a}")));
                }
                edges.push((a, b));
            }
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        }
    }
    Ok(Graph::new(vertices, edges).expect("vertices and edges were validated"))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::from("graph\n");
    if !g.is_empty() {
        let names: Vec<&str> = g.ids().iter().map(VertexId::as_str).collect();
        writeln!(out, "v {}", names.join(" ")).unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "e {} {}", g.id(i), g.id(j)).unwrap();
    }
    out
}

pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.ids() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", g.id(i), g.id(j)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn parse_tournament(text: &str) -> Result<BipartiteTournament, ParseError> {
    let mut lines = content_lines(text);
    let mut last = expect_header(&mut lines, "bitournament")?;
    let mut side_of: BTreeMap<VertexId, Side> = BTreeMap::new();
    let mut arcs: BTreeMap<(VertexId, VertexId), bool> = BTreeMap::new();
    for (line, words) in lines {
        last = line;
        match words[0] {
            "left" | "right" => {
                let side = if words[0] == "left" {
                    Side::Left
                } else {
                    Side::Right
                };
                for w in &words[1..] {
                    let id = parse_id(line, w)?;
                    match side_of.get(&id) {
                        Some(&s) if s == side => {
                            return Err(ParseError::DuplicateVertex {
                                line,
                                id: w.to_string(),
                            })
                        }
                        Some(_) => {
                            return Err(ParseError::BothSides {
                                line,
                                id: w.to_string(),
                            })
                        }
                        None => {
                            side_of.insert(id, side);
                        }
                    }
                }
            }
            "arc" => {
                if words.len() != 3 {
                    return Err(syntax(line, "arc line needs a tail and a head"));
                }
                let tail = parse_id(line, words[1])?;
                let head = parse_id(line, words[2])?;
                let side = |v: &VertexId| {
                    side_of
                        .get(v)
                        .copied()
                        .ok_or_else(|| ParseError::UnknownVertex {
                            line,
                            id: v.to_string(),
                        })
                };
                let (st, sh) = (side(&tail)?, side(&head)?);
                if st == sh {
                    return Err(ParseError::ArcWithinSide {
                        line,
                        tail: tail.to_string(),
                        head: head.to_string(),
                    });
                }
                let (key, forward) = if st == Side::Left {
                    ((tail, head), true)
                } else {
                    ((head, tail), false)
                };
                if arcs.contains_key(&key) {
                    return Err(syntax(
                        line,
                        format!("pair {} {} oriented twice", key.0, key.1),
                    ));
                }
                arcs.insert(key, forward);
            }
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        }
    }
    let members = |s: Side| -> Vec<VertexId> {
        side_of
            .iter()
            .filter(|(_, &x)| x == s)
            .map(|(v, _)| v.clone())
            .collect()
    };
    let (left, right) = (members(Side::Left), members(Side::Right));
    if left.is_empty() || right.is_empty() {
        return Err(syntax(last, "both sides must be nonempty"));
    }
    let mut forward = Vec::with_capacity(left.len() * right.len());
    for u in &left {
        for v in &right {
            match arcs.get(&(u.clone(), v.clone())) {
                Some(&f) => forward.push(f),
                None => return Err(ParseError::MissingArc(u.to_string(), v.to_string())),
            }
        }
    }
    Ok(BipartiteTournament::from_matrix(left, right, forward).expect("validated"))
}

pub fn emit_tournament(d: &BipartiteTournament) -> String {
    let join = |ids: &[VertexId]| {
        ids.iter()
            .map(VertexId::as_str)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::from("bitournament\n");
    writeln!(out, "left {}", join(d.left())).unwrap();
    writeln!(out, "right {}", join(d.right())).unwrap();
    for (tail, head) in d.arcs() {
        writeln!(out, "arc {tail} {head}").unwrap();
    }
    out
}

/// A parsed input file of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Graph(Graph),
    Tournament(BipartiteTournament),
}

/// Parse a file, choosing the grammar from its header line.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    match content_lines(text).next() {
        Some((_, words)) if words == ["graph"] => parse_graph(text).map(Document::Graph),
        Some((_, words)) if words == ["bitournament"] => {
            parse_tournament(text).map(Document::Tournament)
        }
        Some((line, _)) => Err(syntax(line, "expected header `graph` or `bitournament`")),
        None => Err(syntax(1, "empty input")),
    }
}

pub fn emit_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "decision {}", cert.decision).unwrap();
    writeln!(out, "reason {}", cert.reason).unwrap();
    if !cert.side_assignment.is_empty() {
        let join = |s: Side| {
            cert.side_vertices(s)
                .iter()
                .map(VertexId::as_str)
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(out, "sides {} | {}", join(Side::Left), join(Side::Right)).unwrap();
    }
    if let Some(p) = cert.params {
        writeln!(out, "params {} {} {} {}", p.a1, p.b1, p.a2, p.b2).unwrap();
    }
    out
}

/// Census rows `code_hex,count,m,n` under a header, in code order.
pub fn emit_census_csv(census: &RealizabilityCensus) -> String {
    let mut out = String::from("code_hex,count,m,n\n");
    for (code, count) in &census.counts {
        writeln!(out, "{},{count},{},{}", code.to_hex(), census.m, census.n).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::recognize;

    #[test]
    fn parse_k2() {
        let g = parse_graph("graph\nv a b\ne a b\n").unwrap();
        assert_eq!(g, Graph::build(&["a", "b"], &[("a", "b")]).unwrap());
    }

    #[test]
    fn graph_round_trip_normalizes() {
        let text = "# comment\ngraph\nv c a\nv b   # trailing\n\ne b a\ne c b\n";
        let g = parse_graph(text).unwrap();
        let emitted = emit_graph(&g);
        assert_eq!(emitted, "graph\nv a b c\ne a b\ne b c\n");
        assert_eq!(parse_graph(&emitted).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("graph\nv a\ne a b\n"),
            Err(ParseError::UnknownVertex {
                line: 3,
                id: "b".into()
            })
        );
        assert_eq!(
            parse_graph("graph\nv a a\n"),
            Err(ParseError::DuplicateVertex {
                line: 2,
                id: "a".into()
            })
        );
        assert!(matches!(
            parse_graph("graph\nx a\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("grph\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("graph\nv a\ne a a\n"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn tournament_round_trip() {
        let text =
            "bitournament\nleft u1 u2\nright v1 v2\narc u1 v1\narc v1 u2\narc u2 v2\narc v2 u1\n";
        let d = parse_tournament(text).unwrap();
        // Arcs come out in row-major pair order.
        let normalized =
            "bitournament\nleft u1 u2\nright v1 v2\narc u1 v1\narc v2 u1\narc v1 u2\narc u2 v2\n";
        assert_eq!(emit_tournament(&d), normalized);
        assert_eq!(parse_tournament(&emit_tournament(&d)).unwrap(), d);
    }

    #[test]
    fn tournament_errors() {
        let missing = "bitournament\nleft u1 u2\nright v1 v2\narc u1 v1\narc v1 u2\narc u2 v2\n";
        assert_eq!(
            parse_tournament(missing),
            Err(ParseError::MissingArc("u1".into(), "v2".into()))
        );
        let within = "bitournament\nleft u1 u2\nright v1\narc u1 u2\n";
        assert!(matches!(
            parse_tournament(within),
            Err(ParseError::ArcWithinSide { line: 4, .. })
        ));
        let both = "bitournament\nleft a\nright a\n";
        assert!(matches!(
            parse_tournament(both),
            Err(ParseError::BothSides { line: 3, .. })
        ));
        let dup = "bitournament\nleft a a\nright b\narc a b\n";
        assert!(matches!(
            parse_tournament(dup),
            Err(ParseError::DuplicateVertex { line: 2, .. })
        ));
        let twice = "bitournament\nleft a\nright b\narc a b\narc b a\n";
        assert!(matches!(
            parse_tournament(twice),
            Err(ParseError::Syntax { line: 5, .. })
        ));
    }

    #[test]
    fn dot_output() {
        let g = Graph::build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let dot = emit_dot(&g);
        assert!(dot.starts_with("graph G {\n"));
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_end().ends_with("\";") && !l.contains("--"))
                .count(),
            4
        );
    }

    #[test]
    fn certificate_blocks() {
        let p4 = Graph::indexed(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            emit_certificate(&recognize(&p4)),
            "decision NO\nreason TooFewComponents\n"
        );
        let g = parse_graph("graph\nv a b c d e\ne a b\ne b c\ne d e\n").unwrap();
        assert_eq!(
            emit_certificate(&recognize(&g)),
            "decision YES\nreason OK_Two\nsides a b c | d e\nparams 1 1 0 2\n"
        );
    }

    #[test]
    fn document_dispatch() {
        assert!(matches!(
            parse_document("# x\ngraph\n"),
            Ok(Document::Graph(_))
        ));
        assert!(matches!(
            parse_document("bitournament\nleft a\nright b\narc a b\n"),
            Ok(Document::Tournament(_))
        ));
        assert!(parse_document("").is_err());
    }
}
