//! Exhaustive enumeration of graphs up to isomorphism.
//!
//! Level k is built from level k-1 by appending one vertex with every
//! possible neighborhood and deduplicating by canonical form. Every class on
//! k vertices arises this way from some class on k-1 vertices, so the sweep
//! is complete; the cost scales with the class counts (1, 2, 4, 11, 34, 156,
//! 1044, 12346, ...) rather than with 2^C(n,2).

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Default ceiling for enumeration requests.
pub const DEFAULT_ENUM_CAP: usize = 8;

/// All graphs on `n` vertices, one representative per isomorphism class,
/// in canonical-form order. `cap` guards against runaway requests; pass
/// [`DEFAULT_ENUM_CAP`] unless the caller knows better.
pub fn enumerate_graphs(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n > cap {
        return Err(Error::limit(format!(
            "enumeration of graphs on {n} vertices exceeds the configured cap {cap}"
        )));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let mut level: Vec<(CanonicalForm, Graph)> = {
        let g = Graph::empty(1)?;
        vec![(canonical_form(&g)?, g)]
    };
    for k in 2..=n {
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut next = Vec::new();
        for (_, g) in &level {
            for neighborhood in 0..(1u64 << (k - 1)) {
                let extended = g.append_vertex(neighborhood)?;
                let form = canonical_form(&extended)?;
                if seen.insert(form.clone()) {
                    next.push((form, extended));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level.into_iter().map(|(form, _)| form.graph().expect("canonical form decodes")).collect())
}
