//! Interchange formats: the JSON graph schema, DOT export, and a graph6
//! reader for interop with external catalogs.

use crate::embedding::OpEmbedding;
use crate::graph::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// The JSON graph schema: `{"n": 4, "edges": [[0,1],[1,2]]}`, 0-based.
/// Serialization is canonical (edges sorted with `u < v`), so a
/// parse/serialize round trip is byte-exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Serializes a graph to the canonical JSON form.
pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph serializes")
}

/// Parses the JSON graph schema.
pub fn from_json(s: &str) -> Result<Graph> {
    let parsed: GraphJson =
        serde_json::from_str(s).map_err(|e| Error::BadInput(format!("graph json: {e}")))?;
    parsed.to_graph()
}

/// Plain DOT export.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT export of an embedding: the outer cycle is laid out as a regular
/// polygon (`pos` hints), chords drawn inside.
pub fn embedding_to_dot(e: &OpEmbedding) -> String {
    let n = e.n();
    let mut out = String::from("graph {\n  layout=neato;\n  node [shape=circle];\n");
    for (i, &v) in e.outer().iter().enumerate() {
        let angle = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        let (x, y) = (2.0 * angle.cos(), 2.0 * angle.sin());
        out.push_str(&format!("  {v} [pos=\"{x:.4},{y:.4}!\"];\n"));
    }
    for i in 0..n {
        let (a, b) = (e.outer()[i], e.outer()[(i + 1) % n]);
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    for &(u, v) in e.chords() {
        out.push_str(&format!("  {u} -- {v} [style=dashed];\n"));
    }
    out.push_str("}\n");
    out
}

// ---- graph6 -----------------------------------------------------------------
//
// Bit layout (orders up to 62): one byte `n + 63`, then the upper
// triangle of the adjacency matrix read column by column (x_{0,1},
// x_{0,2}, x_{1,2}, x_{0,3}, ...), packed big-endian six bits per byte
// with 63 added, zero-padded to a byte boundary.

/// Parses a graph6 string (orders 1..=62).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(Error::BadInput("empty graph6 string".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::BadInput(
            "graph6 orders above 62 are not supported".into(),
        ));
    }
    let n = (bytes[0] as usize)
        .checked_sub(63)
        .ok_or_else(|| Error::BadInput("bad graph6 header".into()))?;
    if n == 0 || n > 62 {
        return Err(Error::BadInput(format!("graph6 order {n} outside 1..=62")));
    }
    let need_bits = n * (n - 1) / 2;
    let need_bytes = need_bits.div_ceil(6);
    if bytes.len() < 1 + need_bytes {
        return Err(Error::BadInput("graph6 string too short".into()));
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for &b in &bytes[1..1 + need_bytes] {
        let v = b
            .checked_sub(63)
            .ok_or_else(|| Error::BadInput("bad graph6 byte".into()))?;
        if v >= 64 {
            return Err(Error::BadInput("bad graph6 byte".into()));
        }
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Writes the graph6 form (orders 1..=62).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::BadInput(format!("graph6 order {n} outside 1..=62")));
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = vec![(n + 63) as u8];
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push(v + 63);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}
