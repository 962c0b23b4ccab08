//! graph6 / digraph6 text and JSONL report records.
//!
//! Both text formats encode the order as `N(n)` (one byte `n + 63` below 63,
//! otherwise `~` plus three 6-bit groups, or `~~` plus six) followed by the
//! adjacency bits packed big-endian into 6-bit groups offset by 63.
//! graph6 lists the upper triangle column by column; digraph6 (prefix `&`)
//! lists the full matrix row by row. Parsing is strict: padding bits must be
//! zero, trailing bytes are rejected, and digraph6 diagonals must be empty.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph, MAX_ORDER};

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

fn encode_size(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 258_048 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Reads `N(n)` at `pos`; returns `(n, next position)`.
fn decode_size(bytes: &[u8], pos: usize) -> Result<(usize, usize)> {
    let group = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            None => parse_err(i, "truncated order field"),
            Some(&c) if (63..=126).contains(&c) => Ok((c - 63) as usize),
            Some(&c) => parse_err(i, format!("byte {c:#04x} outside 63..=126")),
        }
    };
    let first = group(pos)?;
    if first < 63 {
        return Ok((first, pos + 1));
    }
    if bytes.get(pos + 1) == Some(&b'~') {
        let mut n = 0;
        for k in 0..6 {
            n = (n << 6) | group(pos + 2 + k)?;
        }
        Ok((n, pos + 8))
    } else {
        let mut n = 0;
        for k in 0..3 {
            n = (n << 6) | group(pos + 1 + k)?;
        }
        Ok((n, pos + 4))
    }
}

fn pack_bits(bits: impl Iterator<Item = bool>, out: &mut String) {
    let mut acc = 0u8;
    let mut k = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        k += 1;
        if k == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
}

/// Unpacks exactly `nbits` bits from `bytes[pos..]`, which must hold exactly
/// `ceil(nbits / 6)` groups with zero padding.
fn unpack_bits(bytes: &[u8], pos: usize, nbits: usize) -> Result<Vec<bool>> {
    let groups = nbits.div_ceil(6);
    if bytes.len() < pos + groups {
        return parse_err(bytes.len(), format!("truncated payload: expected {groups} data bytes"));
    }
    if bytes.len() > pos + groups {
        return parse_err(pos + groups, "trailing bytes after payload");
    }
    let mut bits = Vec::with_capacity(groups * 6);
    for (k, &c) in bytes[pos..].iter().enumerate() {
        if !(63..=126).contains(&c) {
            return parse_err(pos + k, format!("byte {c:#04x} outside 63..=126"));
        }
        let v = c - 63;
        for s in (0..6).rev() {
            bits.push(v >> s & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return parse_err(bytes.len() - 1, "nonzero padding bits");
    }
    bits.truncate(nbits);
    Ok(bits)
}

fn check_order(n: usize, offset: usize) -> Result<()> {
    if n > MAX_ORDER {
        parse_err(offset, format!("order {n} exceeds supported maximum {MAX_ORDER}"))
    } else {
        Ok(())
    }
}

fn trim_line(line: &str) -> &[u8] {
    line.trim_end_matches(['\n', '\r']).as_bytes()
}

pub fn parse_digraph6(line: &str) -> Result<Digraph> {
    let bytes = trim_line(line);
    match bytes.first() {
        Some(b'&') => {}
        Some(_) => return parse_err(0, "digraph6 line must start with '&'"),
        None => return parse_err(0, "empty line"),
    }
    let (n, pos) = decode_size(bytes, 1)?;
    check_order(n, 1)?;
    let bits = unpack_bits(bytes, pos, n * n)?;
    let mut d = Digraph::empty(n)?;
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return parse_err(pos + (i * n + j) / 6, format!("loop at vertex {i}"));
                }
                d.set_arc(i, j);
            }
        }
    }
    Ok(d)
}

pub fn emit_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut s = String::from("&");
    encode_size(n, &mut s);
    pack_bits((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| d.has_arc(i, j)), &mut s);
    s
}

pub fn parse_graph6(line: &str) -> Result<UndirectedGraph> {
    let bytes = trim_line(line);
    if bytes.is_empty() {
        return parse_err(0, "empty line");
    }
    if bytes[0] == b'&' || bytes[0] == b':' {
        return parse_err(0, "not a graph6 line");
    }
    let (n, pos) = decode_size(bytes, 0)?;
    check_order(n, 0)?;
    let bits = unpack_bits(bytes, pos, n * n.saturating_sub(1) / 2)?;
    let mut g = UndirectedGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &UndirectedGraph) -> String {
    let n = g.order();
    let mut s = String::new();
    encode_size(n, &mut s);
    pack_bits((1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j)), &mut s);
    s
}

/// A parsed line of either format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphText {
    Directed(Digraph),
    Undirected(UndirectedGraph),
}

/// Dispatches on the `&` prefix.
pub fn parse_line(line: &str) -> Result<GraphText> {
    if line.starts_with('&') {
        parse_digraph6(line).map(GraphText::Directed)
    } else {
        parse_graph6(line).map(GraphText::Undirected)
    }
}

/// One campaign or classification result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ReportRecord {
    /// Canonical code, hex.
    pub code: String,
    pub order: usize,
    /// `None` when the condition is vacuous.
    pub condition_slack: Option<i64>,
    pub hamiltonian: bool,
    pub family_tag: Option<String>,
    pub shard_id: usize,
    pub elapsed_micros: u64,
}

const RECORD_FIELDS: [&str; 7] = [
    "code",
    "order",
    "conditionSlack",
    "hamiltonian",
    "familyTag",
    "shardId",
    "elapsedMicros",
];

pub fn write_report_record(r: &ReportRecord) -> String {
    serde_json::to_string(r).expect("record fields always serialize")
}

/// Every field is mandatory; nullable ones must be present as `null`.
pub fn read_report_record(line: &str) -> Result<ReportRecord> {
    let v: serde_json::Value =
        serde_json::from_str(line.trim_end()).map_err(|e| Error::Serialization(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Serialization("record is not a JSON object".into()))?;
    for f in RECORD_FIELDS {
        if !obj.contains_key(f) {
            return Err(Error::Serialization(format!("missing field `{f}`")));
        }
    }
    serde_json::from_value(v).map_err(|e| Error::Serialization(e.to_string()))
}
