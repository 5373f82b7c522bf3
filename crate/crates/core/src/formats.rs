//! Graph file formats: the short graph6 encoding (one graph per line) and a
//! plain edge-list text format, plus a sniffing reader that accepts either.

use crate::canon::{pair_count, pair_list};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the single-byte graph6 size field can carry.
pub const GRAPH6_MAX: usize = 62;

/// Decodes one graph6 line. Only the short form is accepted: a size byte
/// `n + 63`, then the upper triangle column-major, six bits per byte,
/// most-significant bit first, zero-padded.
///
/// ```
/// use ecci::formats::read_graph6;
/// let p4 = read_graph6("Ch").unwrap();
/// assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
/// ```
pub fn read_graph6(line: &str) -> Result<Graph> {
    let err = |offset: usize, reason: String| Err(Error::Graph6 { offset, reason });
    let bytes = line.as_bytes();
    let Some(&size) = bytes.first() else {
        return err(0, "empty line".into());
    };
    if size == b'~' {
        return err(0, "multi-byte size fields are not supported (n <= 62)".into());
    }
    if !(63..=126).contains(&size) {
        return err(0, format!("size byte {size} outside the printable range 63..=126"));
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return err(0, "a graph needs at least one vertex".into());
    }
    let np = pair_count(n);
    let need = np.div_ceil(6);
    if bytes.len() - 1 != need {
        return err(
            bytes.len().min(1 + need),
            format!("expected {need} data bytes for n = {n}, got {}", bytes.len() - 1),
        );
    }
    let pairs = pair_list(n);
    let mut edges = Vec::new();
    for (t, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return err(1 + t, format!("data byte {b} outside the printable range 63..=126"));
        }
        let chunk = b - 63;
        for s in 0..6 {
            let bit = chunk >> (5 - s) & 1;
            let k = 6 * t + s;
            if k < np {
                if bit == 1 {
                    edges.push(pairs[k]);
                }
            } else if bit == 1 {
                return err(1 + t, "nonzero padding bit".into());
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes a graph as one graph6 line; inverse of [`read_graph6`].
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX {
        return Err(Error::TooManyVertices { n, max: GRAPH6_MAX });
    }
    let np = pair_count(n);
    let pairs = pair_list(n);
    let mut out = vec![n as u8 + 63];
    for t in 0..np.div_ceil(6) {
        let mut chunk = 0u8;
        for s in 0..6 {
            let k = 6 * t + s;
            if k < np && g.has_edge(pairs[k].0, pairs[k].1) {
                chunk |= 1 << (5 - s);
            }
        }
        out.push(chunk + 63);
    }
    Ok(String::from_utf8(out).expect("printable bytes"))
}

/// Reads the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based endpoints. Blank lines are skipped and `#` starts a comment.
pub fn read_edgelist(text: &str) -> Result<Graph> {
    let err = |line: usize, reason: String| Err(Error::EdgeList { line, reason });
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, s)| !s.is_empty());
    let last_line = text.lines().count();

    let Some((header_no, header)) = lines.next() else {
        return err(last_line.max(1), "missing header line \"n m\"".into());
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n_str, m_str] = fields[..] else {
        return err(header_no, format!("expected header \"n m\", got \"{header}\""));
    };
    let parse = |s: &str, what: &str, line: usize| {
        s.parse::<usize>()
            .map_err(|_| Error::EdgeList { line, reason: format!("{what} \"{s}\" is not a count") })
    };
    let n = parse(n_str, "vertex count", header_no)?;
    let m = parse(m_str, "edge count", header_no)?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let Some((no, row)) = lines.next() else {
            return err(
                last_line.max(1),
                format!("expected {m} edges, found {}", edges.len()),
            );
        };
        let fields: Vec<&str> = row.split_whitespace().collect();
        let [u_str, v_str] = fields[..] else {
            return err(no, format!("expected an edge \"u v\", got \"{row}\""));
        };
        let u = parse(u_str, "endpoint", no)?;
        let v = parse(v_str, "endpoint", no)?;
        if u >= n || v >= n {
            return err(no, format!("endpoint {} out of range for n = {n}", u.max(v)));
        }
        if u == v {
            return err(no, format!("self-loop at vertex {u}"));
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return err(no, format!("duplicate edge {u} {v}"));
        }
        edges.push(e);
    }
    if let Some((no, row)) = lines.next() {
        return err(no, format!("unexpected content after {m} edges: \"{row}\""));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the edge-list format; inverse of [`read_edgelist`].
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocFormat {
    Graph6,
    EdgeList,
}

/// A parsed input file: either one edge-list graph or a stream of graph6
/// lines.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub source: String,
    pub format: DocFormat,
    pub graphs: Vec<Graph>,
}

/// Parses a graph file, deciding the format from the first significant
/// line: an edge-list header starts with a digit, a graph6 line cannot.
pub fn read_document(source: &str, text: &str) -> Result<GraphDocument> {
    let significant = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .find(|s| !s.is_empty());
    let edgelist = significant
        .is_some_and(|s| s.chars().next().is_some_and(|c| c.is_ascii_digit()));
    if edgelist {
        return Ok(GraphDocument {
            source: source.to_string(),
            format: DocFormat::EdgeList,
            graphs: vec![read_edgelist(text)?],
        });
    }
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = read_graph6(line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::Graph6 {
                offset,
                reason: format!("{reason} (line {})", i + 1),
            },
            other => other,
        })?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(Error::Graph6 { offset: 0, reason: "no graphs in input".into() });
    }
    Ok(GraphDocument { source: source.to_string(), format: DocFormat::Graph6, graphs })
}
