//! Plain-text edge lists.
//!
//! ```text
//! # optional comment
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first content line holds the vertex count, each further line one edge
//! as two whitespace-separated 0-based ids. `#` starts a comment. Several
//! documents in one file are separated by blank lines.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Tree, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing vertex count header")]
    MissingHeader,
    #[error("line {line}: malformed integer {token:?}")]
    MalformedInteger { line: usize, token: String },
    #[error("line {line}: expected exactly two vertex ids")]
    MalformedEdge { line: usize },
    #[error("vertex count must be at least 1")]
    EmptyGraph,
    #[error("line {line}: vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("a tree on {n} vertices has {expected} edges, found {found}")]
    WrongEdgeCount {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge set is disconnected")]
    Disconnected,
}

impl ParseError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::MissingHeader => "missing-header",
            ParseError::MalformedInteger { .. } => "malformed-integer",
            ParseError::MalformedEdge { .. } => "malformed-edge",
            ParseError::EmptyGraph => "empty-graph",
            ParseError::VertexOutOfRange { .. } => "vertex-out-of-range",
            ParseError::SelfLoop { .. } => "self-loop",
            ParseError::DuplicateEdge { .. } => "duplicate-edge",
            ParseError::WrongEdgeCount { .. } => "wrong-edge-count",
            ParseError::Disconnected => "disconnected",
        }
    }
}

fn parse_int(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::MalformedInteger {
        line,
        token: token.to_string(),
    })
}

/// Content lines with 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_lines<'a, I>(mut lines: I) -> Result<Graph, ParseError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n = parse_int(header_line, tokens.next().ok_or(ParseError::MissingHeader)?)?;
    if tokens.next().is_some() {
        return Err(ParseError::MissingHeader);
    }
    if n == 0 {
        return Err(ParseError::EmptyGraph);
    }
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(ParseError::MalformedEdge { line });
        };
        let (u, v) = (parse_int(line, a)?, parse_int(line, b)?);
        if let Some(&vertex) = [u, v].iter().find(|&&w| w >= n) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(key);
    }
    Ok(Graph::new(n, edges).expect("edges validated above"))
}

fn to_tree(g: Graph) -> Result<Tree, ParseError> {
    Tree::from_graph(g).map_err(|e| match e {
        GraphError::WrongEdgeCount { n, expected, found } => {
            ParseError::WrongEdgeCount { n, expected, found }
        }
        GraphError::Disconnected => ParseError::Disconnected,
        other => unreachable!("graph already validated: {other}"),
    })
}

/// Parses a simple graph (no tree requirement).
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_lines(content_lines(text))
}

pub fn parse_edgelist(text: &str) -> Result<Tree, ParseError> {
    to_tree(parse_graph(text)?)
}

/// Parses blank-line separated tree documents.
pub fn parse_edgelists(text: &str) -> Result<Vec<Tree>, ParseError> {
    let mut docs: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            if !docs.last().is_some_and(Vec::is_empty) {
                docs.push(Vec::new());
            }
            continue;
        }
        let content = raw.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            docs.last_mut().expect("never empty").push((i + 1, content));
        }
    }
    docs.into_iter()
        .filter(|d| !d.is_empty())
        .map(|d| to_tree(parse_lines(d.into_iter())?))
        .collect()
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_edgelists<'a, I>(trees: I) -> String
where
    I: IntoIterator<Item = &'a Tree>,
{
    trees
        .into_iter()
        .map(|t| write_edgelist(t))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_star};

    #[test]
    fn parses_path_and_star() {
        assert_eq!(parse_edgelist("4\n0 1\n1 2\n2 3").unwrap(), make_path(4).unwrap());
        assert_eq!(parse_edgelist("4\n0 1\n0 2\n0 3\n").unwrap(), make_star(4).unwrap());
        assert_eq!(
            parse_edgelist("# a comment\n 4 \n3 2 # tail\n\n1 2\n1 0\n").unwrap(),
            make_path(4).unwrap()
        );
        assert_eq!(parse_edgelist("1\n").unwrap(), make_path(1).unwrap());
    }

    #[test]
    fn error_codes() {
        let code = |text: &str| parse_edgelist(text).unwrap_err().code();
        assert_eq!(code("4\n0 1\n2 3\n1 0"), "duplicate-edge");
        assert_eq!(code("4\n0 x\n"), "malformed-integer");
        assert_eq!(code("4\n0 -1\n"), "malformed-integer");
        assert_eq!(code("4\n0 4\n"), "vertex-out-of-range");
        assert_eq!(code("4\n2 2\n"), "self-loop");
        assert_eq!(code("4\n0 1\n1 2\n"), "wrong-edge-count");
        assert_eq!(code("4\n0 1\n1 2\n0 2\n"), "disconnected");
        assert_eq!(code(""), "missing-header");
        assert_eq!(code("4 5\n"), "missing-header");
        assert_eq!(code("0\n"), "empty-graph");
        assert_eq!(code("3\n0 1 2\n"), "malformed-edge");
    }

    #[test]
    fn duplicate_reports_its_line() {
        assert_eq!(
            parse_edgelist("4\n0 1\n2 3\n1 0"),
            Err(ParseError::DuplicateEdge { line: 4, u: 0, v: 1 })
        );
    }

    #[test]
    fn general_graphs() {
        let c4 = parse_graph("4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(c4.edges().len(), 4);
        assert_eq!(parse_graph("3\n").unwrap().edges().len(), 0);
    }

    #[test]
    fn multi_document_round_trip() {
        let trees = vec![make_path(1).unwrap(), make_path(4).unwrap(), make_star(5).unwrap()];
        let text = write_edgelists(&trees);
        assert_eq!(parse_edgelists(&text).unwrap(), trees);
    }
}
