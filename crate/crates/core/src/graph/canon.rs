//! Canonical labeling by permutation minimization.
//!
//! The canonical representative of an isomorphism class is the relabeling
//! whose graph6 bit stream (upper triangle, column major) is lexicographically
//! smallest. Found by depth-first placement of vertices into positions
//! 0, 1, ... with two prunes:
//!
//! * prefix pruning — a partial placement whose bit prefix already exceeds
//!   the incumbent cannot lead to a smaller string;
//! * twin skipping — if an automorphism swaps two candidates (equal
//!   neighborhoods apart from each other), their subtrees are identical and
//!   only one is explored.
//!
//! Exponential in the worst case, but instant at the n <= 12 scale this
//! crate enforces for canonical work.

use super::{encode_graph6, Graph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Canonicalization is quadratic-bit bounded: C(12,2) = 66 bits fits u128.
pub const MAX_CANON_VERTICES: usize = 12;

/// The graph6 string of the lexicographically minimal relabeling; equal
/// exactly for isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn graph(&self) -> Result<Graph> {
        super::decode_graph6(&self.0)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({:?})", self.0)
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(encode_graph6(&canonical_representative(g)?)))
}

/// The minimal relabeling itself.
pub fn canonical_representative(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::limit(format!(
            "canonical labeling supports n <= {MAX_CANON_VERTICES}, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let total_bits = (n * (n - 1) / 2) as u32;
    let mut search = CanonSearch {
        g,
        n,
        total_bits,
        best: u128::MAX,
        placed: Vec::with_capacity(n),
        placed_mask: 0,
    };
    search.descend(0);
    // Rebuild the graph from the winning bit string.
    let mut out = Graph::empty(n)?;
    let mut bit = total_bits;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if search.best >> bit & 1 != 0 {
                out.insert_edge(i, j);
            }
        }
    }
    Ok(out)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    match (canonical_form(a), canonical_form(b)) {
        (Ok(ca), Ok(cb)) => ca == cb,
        _ => false,
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    best: u128,
    placed: Vec<usize>,
    placed_mask: u64,
}

impl CanonSearch<'_> {
    fn descend(&mut self, prefix: u128) {
        let depth = self.placed.len();
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        // Candidates with their column bits, cheapest column first so the
        // incumbent becomes sharp early.
        let mut candidates: Vec<(u128, usize)> = (0..self.n)
            .filter(|&v| self.placed_mask >> v & 1 == 0)
            .map(|v| {
                let mut col = 0u128;
                for &p in &self.placed {
                    col = (col << 1) | u128::from(self.g.has_edge(v, p));
                }
                (col, v)
            })
            .collect();
        candidates.sort_unstable_by_key(|&(col, v)| (col, self.g.degree(v), v));

        let mut tried: Vec<usize> = Vec::new();
        'next: for &(col, v) in &candidates {
            for &t in &tried {
                if self.twins(t, v) {
                    continue 'next; // swapping t and v is an automorphism
                }
            }
            tried.push(v);
            let next_prefix = (prefix << depth) | col;
            let bits_filled = (depth * (depth + 1) / 2) as u32;
            if next_prefix > self.best >> (self.total_bits - bits_filled) {
                // candidates are sorted by column, so later ones only get worse
                return;
            }
            self.placed.push(v);
            self.placed_mask |= 1 << v;
            self.descend(next_prefix);
            self.placed_mask &= !(1 << v);
            self.placed.pop();
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let nu = self.g.neighbor_mask(u) & !(1 << v);
        let nv = self.g.neighbor_mask(v) & !(1 << u);
        nu == nv
    }
}
