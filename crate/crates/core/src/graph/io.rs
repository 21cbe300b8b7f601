//! Edge-list text and graph6.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let nums = parse_pair(header)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::undirected(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected two integers, got {line:?}")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("not a vertex number: {s:?}")))
    };
    Ok((num(parts[0])?, num(parts[1])?))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Decodes one graph6 line. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} outside the graph6 range")));
    }
    let (n, rest) = decode_n(bytes)?;
    let needed = n * n.saturating_sub(1) / 2;
    let expected_len = needed.div_ceil(6);
    if rest.len() != expected_len {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, {n} vertices need {expected_len}",
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    // padding bits must be zero
    if (needed..expected_len * 6).any(bit) {
        return Err(Error::Parse("nonzero graph6 padding".into()));
    }
    Graph::undirected(n, &edges)
}

fn decode_n(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let short = || Error::Parse("truncated graph6 size field".into());
    let value = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] => {
            let field = rest.get(..6).ok_or_else(short)?;
            Ok((value(field), &rest[6..]))
        }
        [126, rest @ ..] => {
            let field = rest.get(..3).ok_or_else(short)?;
            Ok((value(field), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Encodes an undirected graph as graph6, without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    if g.is_directed() {
        return Err(Error::InvalidGraph("graph6 encodes undirected graphs only".into()));
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else if n < 1 << 36 {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        return Err(Error::InvalidGraph(format!("{n} vertices exceed graph6 range")));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Guesses the format from content: graph6 if the first significant line is
/// a single token of graph6 bytes that is not a number.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let looks_numeric = first
        .split_whitespace()
        .all(|t| t.chars().all(|c| c.is_ascii_digit()));
    if first.starts_with(GRAPH6_HEADER) || !looks_numeric {
        parse_graph6(first)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::undirected(10, &edges).unwrap()
    }

    #[test]
    fn known_graph6_strings() {
        // K4 and the path 0-1-2 as produced by standard encoders
        let k4 = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        let p3 = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3).unwrap(), "Bg");
        assert_eq!(to_graph6(&Graph::undirected(0, &[]).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn graph6_round_trip() {
        let p = petersen();
        let s = to_graph6(&p).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), p);
        let big_edges: Vec<_> = (0..100).map(|i| (i, (i + 1) % 100)).collect();
        let c100 = Graph::undirected(100, &big_edges).unwrap();
        let s = to_graph6(&c100).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), c100);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let p = petersen();
        let text = to_edge_list(&p);
        assert!(text.starts_with("10 15\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), p);
        assert_eq!(parse_auto(&text).unwrap(), p);
        assert_eq!(parse_auto(&to_graph6(&p).unwrap()).unwrap(), p);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }
}
