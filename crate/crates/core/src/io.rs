//! Edge-list and graph6 text formats.
//!
//! Edge list: the first line holds the vertex count `n`, every further line
//! an edge `u v` with 0-based indices. Blank lines and lines starting with
//! `#` are skipped.
//!
//! graph6 is the standard format, restricted to `n <= 62` (single size byte).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("graph6 byte {offset}: {message}")]
    Byte { offset: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error("graph6 supports at most {GRAPH6_MAX_ORDER} vertices, got {0}")]
    Graph6Order(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::EdgeList => "edgelist",
            Format::Graph6 => "graph6",
        })
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> Result<String, ParseError> {
    match format {
        Format::EdgeList => Ok(to_edge_list(g)),
        Format::Graph6 => to_graph6(g),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines.next().ok_or(ParseError::Empty)?;
    let n: usize = header.parse().map_err(|_| ParseError::Line {
        line: first,
        message: format!("expected vertex count, found `{header}`"),
    })?;

    let mut g = Graph::new(n);
    for (line, l) in lines {
        let bad = |message: String| ParseError::Line { line, message };
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(bad(format!("expected `u v`, found `{l}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| bad(format!("invalid vertex `{s}`")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        g.add_edge(u, v).map_err(|e| match e {
            GraphError::SelfLoop(_) => bad(format!("self-loop at vertex {u}")),
            other => bad(other.to_string()),
        })?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (offset_base, bytes) = match bytes.strip_prefix(b">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, bytes),
    };
    let (&head, body) = bytes.split_first().ok_or(ParseError::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(ParseError::Byte {
            offset: offset_base,
            message: format!("invalid size byte {head:#04x}"),
        });
    }
    if head == 126 {
        return Err(ParseError::Byte {
            offset: offset_base,
            message: format!("multi-byte sizes (n > {GRAPH6_MAX_ORDER}) are not supported"),
        });
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::Byte {
            offset: offset_base,
            message: format!(
                "{n} vertices need {expected} data bytes, found {}",
                body.len()
            ),
        });
    }
    if let Some(k) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::Byte {
            offset: offset_base + 1 + k,
            message: format!("invalid data byte {:#04x}", body[k]),
        });
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v).expect("upper-triangle bits are distinct");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(ParseError::Graph6Order(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite;
    use proptest::prelude::*;

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(to_edge_list(&g), "3\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            parse_edge_list("2\n0 0\n"),
            Err(ParseError::Line {
                line: 2,
                message: "self-loop at vertex 0".into()
            })
        );
        assert!(matches!(
            parse_edge_list("3\n0 1\n1 5\n"),
            Err(ParseError::Line { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1 2\n"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("x\n"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 a\n"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1\n1 0\n"),
            Err(ParseError::Line { line: 3, .. })
        ));
        assert_eq!(parse_edge_list("\n\n"), Err(ParseError::Empty));
    }

    #[test]
    fn graph6_known_strings() {
        // A-C, A-E, B-D, D-E encodes as "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
        assert_eq!(to_graph6(&Graph::new(0)).unwrap(), "?");
        assert_eq!(
            to_graph6(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap(),
            "A_"
        );

        let d = parse_graph6("D?{").unwrap();
        assert_eq!(d.order(), 5);
        assert_eq!(to_graph6(&d).unwrap(), "D?{");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            parse_graph6("D?"),
            Err(ParseError::Byte { offset: 0, .. })
        ));
        assert!(matches!(parse_graph6("D?{{"), Err(ParseError::Byte { .. })));
        assert!(matches!(
            parse_graph6("\x20"),
            Err(ParseError::Byte { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("D? "),
            Err(ParseError::Byte { offset: 2, .. })
        ));
        assert!(matches!(parse_graph6("~?@A"), Err(ParseError::Byte { .. })));
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert!(to_graph6(&Graph::new(63)).is_err());
    }

    #[test]
    fn header_is_accepted() {
        let g = complete_bipartite(3, 2);
        let s = format!(">>graph6<<{}", to_graph6(&g).unwrap());
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let edges = pairs.iter().zip(mask).filter(|(_, b)| *b).map(|(e, _)| *e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trips(g in arb_graph()) {
            for format in [Format::EdgeList, Format::Graph6] {
                let text = serialize_graph(&g, format).unwrap();
                prop_assert_eq!(&parse_graph(&text, format).unwrap(), &g);
            }
        }
    }
}
