//! Text formats: the edge-list format and graph6.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. Anything after `#`
//! on a line is a comment. A comment of the form `#@ label <v> <text>`
//! attaches a label to vertex `v`; the emitter writes these for labeled
//! graphs and the parser reads them back.

use std::fmt::Write as _;

use crate::error::{Error, FormatError, Result};
use crate::graph::{Graph, GraphBuilder};

const LABEL_DIRECTIVE: &str = "#@ label ";

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder = GraphBuilder::new(0);
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut found = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if let Some(rest) = raw.trim_start().strip_prefix(LABEL_DIRECTIVE) {
            let (v, label) = rest.split_once(' ').unwrap_or((rest, ""));
            let v = v.trim().parse::<usize>().map_err(|_| FormatError::MalformedEdge {
                line,
                reason: format!("bad label directive `{raw}`"),
            })?;
            labels.push((line, v, label.to_string()));
            continue;
        }
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                let parsed: Option<Vec<usize>> =
                    fields.iter().map(|f| f.parse::<usize>().ok()).collect();
                match parsed.as_deref() {
                    Some(&[n, m]) => {
                        header = Some((n, m));
                        builder = GraphBuilder::new(n);
                    }
                    _ => {
                        return Err(FormatError::MalformedHeader {
                            line,
                            reason: format!("expected `n m`, got `{content}`"),
                        }
                        .into())
                    }
                }
            }
            Some((n, _)) => {
                let parsed: Option<Vec<usize>> =
                    fields.iter().map(|f| f.parse::<usize>().ok()).collect();
                let (u, v) = match parsed.as_deref() {
                    Some(&[u, v]) => (u, v),
                    _ => {
                        return Err(FormatError::MalformedEdge {
                            line,
                            reason: format!("expected `u v`, got `{content}`"),
                        }
                        .into())
                    }
                };
                for vertex in [u, v] {
                    if vertex >= n {
                        return Err(FormatError::VertexOutOfRange { line, vertex, n }.into());
                    }
                }
                if u == v {
                    return Err(FormatError::SelfLoop { line, vertex: u }.into());
                }
                if builder.add_edge(u, v).is_err() {
                    return Err(FormatError::DuplicateEdge {
                        line,
                        u: u.min(v),
                        v: u.max(v),
                    }
                    .into());
                }
                found += 1;
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(FormatError::MalformedHeader {
            line: 1,
            reason: "missing header".into(),
        }
        .into());
    };
    if found != m {
        return Err(FormatError::EdgeCountMismatch { expected: m, found }.into());
    }
    for (line, v, label) in labels {
        if v >= n {
            return Err(FormatError::VertexOutOfRange { line, vertex: v, n }.into());
        }
        builder.set_label(v, label);
    }
    Ok(builder.build())
}

/// Writes the edge-list format, including label directives when present.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "{LABEL_DIRECTIVE}{v} {l}");
        }
    }
    out
}

/// Parses one graph6 string (surrounding whitespace and an optional
/// `>>graph6<<` header are ignored). Supports up to 64 vertices.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6Empty.into());
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::Graph6Byte { offset, byte }.into());
        }
    }
    let (n, data) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] < 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(FormatError::Graph6TooLarge { n: 258_048 }.into());
    };
    if n > 64 {
        return Err(FormatError::Graph6TooLarge { n }.into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(FormatError::Graph6Length {
            expected,
            found: data.len(),
        }
        .into());
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(FormatError::Graph6Padding.into());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses one graph6 string per nonblank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

/// Encodes a graph in graph6 (labels are not representable and are dropped).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 258_048, "graph6 encoder supports at most 258047 vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Reads either format: a first data line of two integers means edge list,
/// otherwise graph6.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() == 2 => parse_edge_list(text),
        Some(_) => parse_graph6(text),
        None => Err(Error::Format(FormatError::Graph6Empty)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3, generate(FamilySpec::Path(3)).unwrap());
        let k1 = parse_edge_list("1 0").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(
            parse_edge_list("3 2\n0 1\n0 1"),
            Err(FormatError::DuplicateEdge { line: 3, u: 0, v: 1 }.into())
        );
    }

    #[test]
    fn edge_list_diagnostics_are_distinct() {
        assert!(matches!(
            parse_edge_list("x 2\n"),
            Err(Error::Format(FormatError::MalformedHeader { line: 1, .. }))
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::Format(FormatError::MalformedHeader { .. }))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3"),
            Err(Error::Format(FormatError::VertexOutOfRange { line: 2, vertex: 3, n: 3 }))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 1"),
            Err(Error::Format(FormatError::SelfLoop { line: 2, vertex: 1 }))
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1"),
            Err(Error::Format(FormatError::EdgeCountMismatch { expected: 2, found: 1 }))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2"),
            Err(Error::Format(FormatError::MalformedEdge { line: 2, .. }))
        ));
    }

    #[test]
    fn comments_and_labels() {
        let text = "# a path\n3 2 # header\n0 1\n\n1 2 # tail\n#@ label 0 (a,b)\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.label(0), "(a,b)");
        assert_eq!(g.label(1), "1");
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn graph6_examples() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(to_graph6(&g), "D?{");
        let k2 = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(parse_graph6(&to_graph6(&k2)).unwrap(), k2);
        assert_eq!(parse_graph6(""), Err(FormatError::Graph6Empty.into()));
        assert_eq!(parse_graph6("\n"), Err(FormatError::Graph6Empty.into()));
    }

    #[test]
    fn graph6_errors() {
        // K2 is "A_"; "A`" sets a padding bit
        assert_eq!(parse_graph6("A`"), Err(FormatError::Graph6Padding.into()));
        assert!(matches!(
            parse_graph6("A!"),
            Err(Error::Format(FormatError::Graph6Byte { offset: 1, .. }))
        ));
        assert!(matches!(
            parse_graph6("D?"),
            Err(Error::Format(FormatError::Graph6Length { expected: 2, found: 1 }))
        ));
        let big = to_graph6(&generate(FamilySpec::Path(65)).unwrap());
        assert_eq!(parse_graph6(&big), Err(FormatError::Graph6TooLarge { n: 65 }.into()));
        let ok = to_graph6(&generate(FamilySpec::Cycle(64)).unwrap());
        assert_eq!(parse_graph6(&ok).unwrap(), generate(FamilySpec::Cycle(64)).unwrap());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_auto("2 1\n0 1").unwrap().size(), 1);
        assert_eq!(parse_auto("A_\n").unwrap().size(), 1);
    }
}
