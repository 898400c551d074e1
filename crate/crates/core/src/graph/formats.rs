//! Text formats: adjacency lists, graph6 and LCF notation.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("LCF: {0}")]
    Lcf(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn line_err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

/// Parses lines of the form `u: v1 v2 ...` (0-based ids).
///
/// Blank lines and lines starting with `#` are ignored. Every vertex needs
/// its own line; an edge may be listed from one or both ends.
pub fn parse_adjlist(text: &str) -> Result<Graph, ParseError> {
    let mut rows: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let (head, rest) = body
            .split_once(':')
            .ok_or_else(|| line_err(line, "expected `vertex: neighbours`"))?;
        let head: usize = head
            .trim()
            .parse()
            .map_err(|_| line_err(line, format!("bad vertex id {:?}", head.trim())))?;
        let mut nbrs = Vec::new();
        for tok in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| line_err(line, format!("bad neighbour id {tok:?}")))?;
            nbrs.push(v);
        }
        rows.push((line, head, nbrs));
    }

    let n = rows.len();
    let mut heads = BTreeSet::new();
    for &(line, head, _) in &rows {
        if head >= n {
            return Err(line_err(line, format!("vertex {head} out of range for {n} vertex lines")));
        }
        if !heads.insert(head) {
            return Err(line_err(line, format!("vertex {head} listed twice")));
        }
    }

    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (line, head, nbrs) in &rows {
        let mut local = BTreeSet::new();
        for &v in nbrs {
            if v >= n {
                return Err(line_err(*line, format!("dangling vertex id {v}")));
            }
            if v == *head {
                return Err(line_err(*line, format!("self-loop at vertex {v}")));
            }
            if !local.insert(v) {
                return Err(line_err(*line, format!("duplicate edge {{{head}, {v}}}")));
            }
            let key = if *head < v { (*head, v) } else { (v, *head) };
            edges.entry(key).or_insert(*line);
        }
    }
    // Order edges by first mention for a stable arc numbering.
    let mut ordered: Vec<_> = edges.into_iter().collect();
    ordered.sort_by_key(|&(e, line)| (line, e));
    Ok(Graph::from_edges(n, ordered.into_iter().map(|(e, _)| e))?)
}

/// Renders the adjacency-list format accepted by [`parse_adjlist`].
pub fn to_adjlist(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        out.push_str(&format!("{v}:"));
        for w in g.neighbors(v) {
            out.push_str(&format!(" {w}"));
        }
        out.push('\n');
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string (optional `>>graph6<<` header, surrounding
/// whitespace ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(G6_HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::Graph6(format!("byte {:#04x} at offset {pos} outside 63..=126", bytes[pos])));
    }

    let (n, body) = decode_order(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(ParseError::Graph6(format!("truncated: need {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(ParseError::Graph6(format!("{} trailing bytes", body.len() - need)));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), ParseError> {
    let word = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(ParseError::Graph6("truncated 36-bit size header".into()));
        }
        return Ok((word(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(ParseError::Graph6("truncated 18-bit size header".into()));
    }
    Ok((word(&bytes[1..4]), &bytes[4..]))
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Builds a cubic graph from LCF notation such as `[5,-5]^7`.
///
/// Vertices `0..N` form a Hamiltonian cycle and vertex `i` gets a chord to
/// `i + j[i mod m] (mod N)`. The chord list must be self-consistent.
pub fn parse_lcf(spec: &str) -> Result<Graph, ParseError> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let (list, reps) = match compact.split_once('^') {
        Some((l, r)) => {
            let r: usize = r.parse().map_err(|_| ParseError::Lcf(format!("bad exponent {r:?}")))?;
            (l, r)
        }
        None => (compact.as_str(), 1),
    };
    let inner = list
        .strip_prefix('[')
        .and_then(|l| l.strip_suffix(']'))
        .ok_or_else(|| ParseError::Lcf("expected `[j1,j2,...]^r`".into()))?;
    let jumps: Vec<i64> = inner
        .split(',')
        .map(|t| t.parse::<i64>().map_err(|_| ParseError::Lcf(format!("bad offset {t:?}"))))
        .collect::<Result<_, _>>()?;
    if jumps.is_empty() || reps == 0 {
        return Err(ParseError::Lcf("empty offset list".into()));
    }
    let n = jumps.len() * reps;
    if n < 4 {
        return Err(ParseError::Lcf(format!("{n} vertices is too few for a cubic graph")));
    }
    if n % 2 == 1 {
        return Err(ParseError::Lcf(format!("odd vertex count {n}: total degree would be odd")));
    }
    let ni = n as i64;
    let mut chord = vec![0usize; n];
    for (i, slot) in chord.iter_mut().enumerate() {
        let j = jumps[i % jumps.len()].rem_euclid(ni);
        if j == 0 || j == 1 || j == ni - 1 {
            return Err(ParseError::Lcf(format!(
                "offset {} at vertex {i} is 0 or a cycle neighbour",
                jumps[i % jumps.len()]
            )));
        }
        *slot = ((i as i64 + j) % ni) as usize;
    }
    for (i, &t) in chord.iter().enumerate() {
        if chord[t] != i {
            return Err(ParseError::Lcf(format!(
                "chord collision: {i} -> {t} but {t} -> {}",
                chord[t]
            )));
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).filter(|&i| i < chord[i]).map(|i| (i, chord[i])));
    Ok(Graph::from_edges(n, edges)?)
}
