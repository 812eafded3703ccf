//! graph6 text encoding (single-byte header variant, n <= 62).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix read column by column (`x_{0,1}; x_{0,2} x_{1,2}; ...`),
//! packed big-endian into 6-bit groups, each group offset by 63 into the
//! printable range. Trailing pad bits must be zero.

use super::Graph;
use crate::error::{Error, Result};

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= super::MAX_VERTICES);
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let &header = bytes.first().ok_or_else(|| Error::invalid("empty graph6 string"))?;
    if !(63..=126).contains(&header) {
        return Err(Error::invalid(format!("bad graph6 header byte {header:#04x}")));
    }
    let n = (header - 63) as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::invalid(format!(
            "graph6 string for n={n} must have {expect} bytes, got {}",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0;
    for &byte in &bytes[1..] {
        if !(63..=126).contains(&byte) {
            return Err(Error::invalid(format!("graph6 byte {byte:#04x} out of range")));
        }
        let group = byte - 63;
        for k in 0..6 {
            let value = group >> (5 - k) & 1;
            if bit >= nbits {
                if value != 0 {
                    return Err(Error::invalid("nonzero padding bits in graph6 string"));
                }
                continue;
            }
            if value != 0 {
                let (i, j) = bit_position(bit);
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major bit layout: bit index -> (row, column).
fn bit_position(mut bit: usize) -> (usize, usize) {
    let mut j = 1;
    while bit >= j {
        bit -= j;
        j += 1;
    }
    (bit, j)
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        decode_graph6(&text).map_err(serde::de::Error::custom)
    }
}
