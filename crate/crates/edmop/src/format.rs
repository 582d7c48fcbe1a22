//! Plain-text family files.
//!
//! ```text
//! family 2 7
//! graph 0
//! 0 1
//! 0 2
//! graph 1 d=5
//! 0 3
//! ```
//!
//! The header gives the member count and the order. Each member starts
//! with `graph <k>`, optionally carrying the step of its arithmetic outer
//! cycle, and lists its edges one per line with the smaller endpoint first,
//! sorted. `#` starts a comment. Fields are separated by single spaces and
//! the file ends with a newline.

use std::fmt::Write as _;

use edmop_core::{Edge, Family, Graph, Member};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; 0 for problems with the file as a whole.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("missing trailing newline")]
    NoTrailingNewline,
    #[error("fields must be separated by single spaces")]
    Spacing,
    #[error("expected `family <t> <n>`")]
    BadHeader,
    #[error("expected `graph <k> [d=<d>]`")]
    BadMemberHeader,
    #[error("expected member {expected}, found {found}")]
    MemberOrder { expected: usize, found: usize },
    #[error("expected `<u> <v>`")]
    BadEdge,
    #[error("edge line before the first member")]
    EdgeOutsideMember,
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("self-loop at {0}")]
    SelfLoop(usize),
    #[error("edge {0} {1} is not written smaller endpoint first")]
    Unsorted(usize, usize),
    #[error("edge {0} is out of lexicographic order")]
    OutOfOrder(Edge),
    #[error("duplicate edge {0}")]
    Duplicate(Edge),
    #[error("header announces {expected} members, found {found}")]
    MemberCount { expected: usize, found: usize },
    #[error("order must be positive")]
    ZeroOrder,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn emit_family(f: &Family) -> String {
    let mut out = String::new();
    writeln!(out, "family {} {}", f.len(), f.order()).unwrap();
    for (k, m) in f.members().iter().enumerate() {
        match m.step {
            Some(d) => writeln!(out, "graph {k} d={d}").unwrap(),
            None => writeln!(out, "graph {k}").unwrap(),
        }
        for e in m.graph.edges() {
            writeln!(out, "{} {}", e.lo(), e.hi()).unwrap();
        }
    }
    out
}

fn fields(line: &str, no: usize) -> Result<Vec<&str>, ParseError> {
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.iter().any(|p| p.is_empty()) || line.contains('\t') {
        return Err(err(no, ParseErrorKind::Spacing));
    }
    Ok(parts)
}

fn number(s: &str) -> Option<usize> {
    // reject signs and leading zeros so every value has one spelling
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

struct Pending {
    graph: Graph,
    step: Option<usize>,
    last: Option<Edge>,
}

/// Parses a family file. With `strict`, edges must be written as emitted
/// (smaller endpoint first, sorted); otherwise they are normalized.
/// Duplicate edges are rejected either way.
pub fn parse_family(text: &str, strict: bool) -> Result<Family, ParseError> {
    if text.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    if !text.ends_with('\n') {
        return Err(err(text.lines().count(), ParseErrorKind::NoTrailingNewline));
    }
    let mut header: Option<(usize, usize)> = None;
    let mut members: Vec<Member> = Vec::new();
    let mut current: Option<Pending> = None;
    let finish = |p: Pending, members: &mut Vec<Member>| {
        members.push(Member { graph: p.graph, step: p.step });
    };
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = match raw.find('#') {
            Some(at) => raw[..at].trim_end_matches(' '),
            None => raw,
        };
        if line.is_empty() {
            continue;
        }
        let parts = fields(line, no)?;
        let Some((t, n)) = header else {
            match parts.as_slice() {
                ["family", t, n] => {
                    let (t, n) = number(t).zip(number(n)).ok_or(err(no, ParseErrorKind::BadHeader))?;
                    if n == 0 {
                        return Err(err(no, ParseErrorKind::ZeroOrder));
                    }
                    header = Some((t, n));
                }
                _ => return Err(err(no, ParseErrorKind::BadHeader)),
            }
            continue;
        };
        if parts[0] == "graph" {
            let (k, step) = match parts.as_slice() {
                [_, k] => (number(k), None),
                [_, k, d] => match d.strip_prefix("d=").and_then(number) {
                    Some(d) => (number(k), Some(d)),
                    None => return Err(err(no, ParseErrorKind::BadMemberHeader)),
                },
                _ => return Err(err(no, ParseErrorKind::BadMemberHeader)),
            };
            let k = k.ok_or(err(no, ParseErrorKind::BadMemberHeader))?;
            if let Some(p) = current.take() {
                finish(p, &mut members);
            }
            if k != members.len() {
                return Err(err(no, ParseErrorKind::MemberOrder { expected: members.len(), found: k }));
            }
            if k >= t {
                return Err(err(no, ParseErrorKind::MemberCount { expected: t, found: k + 1 }));
            }
            current = Some(Pending { graph: Graph::new(n).expect("n > 0"), step, last: None });
            continue;
        }
        let [u, v] = parts.as_slice() else {
            return Err(err(no, ParseErrorKind::BadEdge));
        };
        let (u, v) = number(u).zip(number(v)).ok_or(err(no, ParseErrorKind::BadEdge))?;
        let p = current.as_mut().ok_or(err(no, ParseErrorKind::EdgeOutsideMember))?;
        for w in [u, v] {
            if w >= n {
                return Err(err(no, ParseErrorKind::OutOfRange { vertex: w, order: n }));
            }
        }
        if u == v {
            return Err(err(no, ParseErrorKind::SelfLoop(u)));
        }
        if strict && u > v {
            return Err(err(no, ParseErrorKind::Unsorted(u, v)));
        }
        let e = Edge::new(u, v);
        if !p.graph.add_edge(u, v).expect("checked range") {
            return Err(err(no, ParseErrorKind::Duplicate(e)));
        }
        if strict && p.last.is_some_and(|last| last > e) {
            return Err(err(no, ParseErrorKind::OutOfOrder(e)));
        }
        p.last = Some(e);
    }
    let Some((t, n)) = header else {
        return Err(err(0, ParseErrorKind::Empty));
    };
    if let Some(p) = current.take() {
        finish(p, &mut members);
    }
    if members.len() != t {
        return Err(err(0, ParseErrorKind::MemberCount { expected: t, found: members.len() }));
    }
    Ok(Family::new(n, members).expect("members built with order n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use edmop_core::doubling::base_family;

    #[test]
    fn base_family_text() {
        let text = emit_family(&base_family());
        assert_eq!(text, "family 1 4\ngraph 0 d=1\n0 1\n0 2\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_family(&text, true).unwrap(), base_family());
    }

    #[test]
    fn unsorted_edge() {
        let text = "family 1 5\ngraph 0\n4 2\n";
        assert_eq!(parse_family(text, true).unwrap_err(), err(3, ParseErrorKind::Unsorted(4, 2)));
        let f = parse_family(text, false).unwrap();
        assert!(f.member(0).has_edge(2, 4));
        assert_eq!(emit_family(&f), "family 1 5\ngraph 0\n2 4\n");
    }

    #[test]
    fn out_of_order_edges() {
        let text = "family 1 5\ngraph 0\n1 2\n0 4\n";
        assert_eq!(parse_family(text, true).unwrap_err().line, 4);
        assert_eq!(parse_family(text, false).unwrap().member(0).edge_count(), 2);
    }

    #[test]
    fn duplicates_rejected_in_both_modes() {
        for strict in [true, false] {
            let e = parse_family("family 1 3\ngraph 0\n0 1\n1 0\n", strict).unwrap_err();
            assert_eq!(e.line, 4);
            assert!(matches!(e.kind, ParseErrorKind::Duplicate(_) | ParseErrorKind::Unsorted(..)));
        }
        let e = parse_family("family 1 3\ngraph 0\n0 1\n1 0\n", false).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Duplicate(Edge::new(0, 1)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a triangle\nfamily 1 3 # one member\n\ngraph 0\n0 1\n0 2 #\n1 2\n";
        let f = parse_family(text, true).unwrap();
        assert_eq!(f.member(0).edge_count(), 3);
    }

    #[test]
    fn malformed_lines_carry_numbers() {
        let cases: [(&str, usize, ParseErrorKind); 10] = [
            ("", 0, ParseErrorKind::Empty),
            ("family 1 3", 1, ParseErrorKind::NoTrailingNewline),
            ("family  1 3\n", 1, ParseErrorKind::Spacing),
            ("families 1 3\n", 1, ParseErrorKind::BadHeader),
            ("family 1 3\n0 1\n", 2, ParseErrorKind::EdgeOutsideMember),
            ("family 1 3\ngraph 1\n", 2, ParseErrorKind::MemberOrder { expected: 0, found: 1 }),
            ("family 1 3\ngraph 0 e=1\n", 2, ParseErrorKind::BadMemberHeader),
            ("family 1 3\ngraph 0\n0 3\n", 3, ParseErrorKind::OutOfRange { vertex: 3, order: 3 }),
            ("family 1 3\ngraph 0\n1 1\n", 3, ParseErrorKind::SelfLoop(1)),
            ("family 2 3\ngraph 0\n0 1\n", 0, ParseErrorKind::MemberCount { expected: 2, found: 1 }),
        ];
        for (text, line, kind) in cases {
            assert_eq!(parse_family(text, true).unwrap_err(), err(line, kind), "{text:?}");
        }
        assert_eq!(parse_family("family 1 3\ngraph 0\n0 01\n", true).unwrap_err().kind, ParseErrorKind::BadEdge);
        assert_eq!(parse_family("family 1 3\ngraph 0\n0 1 2\n", true).unwrap_err().kind, ParseErrorKind::BadEdge);
    }

    #[test]
    fn empty_members_round_trip() {
        let f = Family::from_graphs(4, vec![Graph::new(4).unwrap(), Graph::new(4).unwrap()]).unwrap();
        let text = emit_family(&f);
        assert_eq!(text, "family 2 4\ngraph 0\ngraph 1\n");
        assert_eq!(parse_family(&text, true).unwrap(), f);
    }
}
