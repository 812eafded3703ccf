//! Exact classical invariants with certificates: independence number,
//! matching number, chromatic number, clique cover number.
//!
//! Everything here is exact branch-and-bound or backtracking, sized for the
//! n <= 12 desk scale. Witnesses are deterministic: ties are broken toward
//! the lexicographically smallest vertex (or edge) set.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};

/// The invariant bundle behind the guessing-number sandwich
/// `n - cp(G) <= gn(G, s) <= n - alpha(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n: usize,
    /// Independence number alpha(G).
    pub alpha: usize,
    /// Maximum matching size alpha'(G).
    pub alpha_prime: usize,
    /// Clique cover number cp(G) = chi(complement).
    pub cp: usize,
    /// Chromatic number chi(G).
    pub chi: usize,
    /// n - cp(G), a lower bound on gn(G, s) for every s.
    pub gn_lower: usize,
    /// n - alpha(G), an upper bound on gn(G, s) for every s.
    pub gn_upper: usize,
}

/// A partition of the vertex set into cliques; witnesses `cp(G) <= classes.len()`
/// and hence `gn(G, s) >= n - classes.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub classes: Vec<Vec<usize>>,
}

impl CliqueCover {
    /// Check the certificate against a graph: classes disjoint, covering,
    /// each inducing a clique.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = 0u64;
        for class in &self.classes {
            for (i, &u) in class.iter().enumerate() {
                if u >= g.n() {
                    return Err(Error::internal(format!("clique cover names vertex {u} out of range")));
                }
                if seen >> u & 1 != 0 {
                    return Err(Error::internal(format!("clique cover repeats vertex {u}")));
                }
                seen |= 1 << u;
                for &v in &class[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Err(Error::internal(format!(
                            "clique cover class contains non-edge ({u}, {v})"
                        )));
                    }
                }
            }
        }
        if seen != g.vertex_mask() {
            return Err(Error::internal("clique cover misses vertices"));
        }
        Ok(())
    }
}

/// Independence number with the lexicographically smallest maximum
/// independent set as witness.
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    let total = mis_size(g, g.vertex_mask());
    let mut witness = Vec::with_capacity(total);
    let mut available = g.vertex_mask();
    let mut need = total;
    for v in 0..g.n() {
        if available >> v & 1 == 0 {
            continue;
        }
        let rest = available & !g.closed_neighbor_mask(v);
        if 1 + mis_size(g, rest) == need {
            witness.push(v);
            available = rest;
            need -= 1;
        } else {
            available &= !(1 << v);
        }
    }
    debug_assert_eq!(witness.len(), total);
    (total, witness)
}

/// Maximum independent set size within `candidates`.
fn mis_size(g: &Graph, candidates: u64) -> usize {
    if candidates == 0 {
        return 0;
    }
    // Branch on a vertex of maximum degree within the candidate set; if it
    // has no candidate neighbors the whole component-less residue is
    // independent.
    let mut best_v = usize::MAX;
    let mut best_deg = 0;
    for v in bits(candidates) {
        let d = (g.neighbor_mask(v) & candidates).count_ones();
        if best_v == usize::MAX || d > best_deg {
            best_v = v;
            best_deg = d;
        }
    }
    if best_deg == 0 {
        return candidates.count_ones() as usize;
    }
    let with = 1 + mis_size(g, candidates & !g.closed_neighbor_mask(best_v));
    let without = mis_size(g, candidates & !(1 << best_v));
    with.max(without)
}

/// Maximum matching size with the lexicographically smallest maximum
/// matching (as an edge list) as witness.
pub fn max_matching(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let total = matching_size(g, g.vertex_mask());
    let mut witness = Vec::with_capacity(total);
    let mut available = g.vertex_mask();
    let mut need = total;
    'grow: while need > 0 {
        for (u, v) in g.edges() {
            if available >> u & 1 == 0 || available >> v & 1 == 0 {
                continue;
            }
            let rest = available & !(1 << u) & !(1 << v);
            if 1 + matching_size(g, rest) == need {
                witness.push((u, v));
                available = rest;
                need -= 1;
                continue 'grow;
            }
        }
        unreachable!("matching witness construction stalled");
    }
    (total, witness)
}

fn matching_size(g: &Graph, available: u64) -> usize {
    // first available vertex with an available neighbor
    let mut pick = None;
    for u in bits(available) {
        if g.neighbor_mask(u) & available != 0 {
            pick = Some(u);
            break;
        }
    }
    let Some(u) = pick else { return 0 };
    // either u stays unmatched or it is matched to one of its neighbors
    let mut best = matching_size(g, available & !(1 << u));
    for v in bits(g.neighbor_mask(u) & available) {
        best = best.max(1 + matching_size(g, available & !(1 << u) & !(1 << v)));
    }
    best
}

/// Chromatic number with a minimum proper coloring (colors `0..k`).
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    if g.n() == 0 {
        return (0, Vec::new());
    }
    if g.m() == 0 {
        return (1, vec![0; g.n()]);
    }
    let mut colors = vec![usize::MAX; g.n()];
    for k in 1..=g.n() {
        if color_with(g, k, 0, 0, &mut colors) {
            return (k, colors);
        }
    }
    unreachable!("every graph is n-colorable");
}

fn color_with(g: &Graph, k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
    if v == g.n() {
        return true;
    }
    // allowing at most one fresh color kills color-permutation symmetry
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|u| u >= v || colors[u] != c) {
            colors[v] = c;
            if color_with(g, k, v + 1, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Clique cover number via the complement's chromatic number, with the color
/// classes of the complement coloring as the certificate partition.
pub fn clique_cover(g: &Graph) -> (usize, CliqueCover) {
    let (k, coloring) = chromatic_number(&g.complement());
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in coloring.iter().enumerate() {
        classes[c].push(v);
    }
    let cover = CliqueCover { classes };
    debug_assert!(cover.validate(g).is_ok());
    (k, cover)
}

/// Vertices adjacent to all others.
pub fn dominating_vertices(g: &Graph) -> Vec<usize> {
    g.dominating_vertices()
}

/// All invariants at once, plus the guessing-number sandwich they induce.
pub fn gn_bounds(g: &Graph) -> Bounds {
    let n = g.n();
    let (alpha, _) = independence_number(g);
    let (alpha_prime, _) = max_matching(g);
    let (cp, _) = clique_cover(g);
    let (chi, _) = chromatic_number(g);
    debug_assert!(alpha <= cp, "independent sets meet each clique at most once");
    debug_assert!(n <= 2 * alpha_prime + alpha);
    Bounds { n, alpha, alpha_prime, cp, chi, gn_lower: n - cp, gn_upper: n - alpha }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join};

    /// Oracle: independence number by exhaustive subset check (n <= 20-ish).
    fn alpha_exhaustive(g: &Graph) -> usize {
        let mut best = 0;
        for mask in 0u64..(1 << g.n()) {
            let ok = bits(mask).all(|v| g.neighbor_mask(v) & mask == 0);
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    /// Oracle: matching number by exhaustive edge-subset enumeration.
    fn matching_exhaustive(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for mask in 0u64..(1 << edges.len()) {
            let mut seen = 0u64;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    continue;
                }
                if seen >> u & 1 != 0 || seen >> v & 1 != 0 {
                    ok = false;
                    break;
                }
                seen |= (1 << u) | (1 << v);
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn independence_examples() {
        // alpha(K_k (+) E_{n-k}) = n - k
        let g = join(&Graph::complete(2).unwrap(), &Graph::empty(4).unwrap()).unwrap();
        assert_eq!(independence_number(&g).0, 4);
        assert_eq!(independence_number(&Graph::empty(5).unwrap()).0, 5);
        // frozen from the exhaustive 32-subset check
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(alpha_exhaustive(&c5), 2);
        assert_eq!(independence_number(&c5), (2, vec![0, 2]));
    }

    #[test]
    fn independence_matches_oracle_small() {
        for n in 0..=5 {
            for g in crate::graph::enumerate_graphs(n, 8).unwrap() {
                assert_eq!(independence_number(&g).0, alpha_exhaustive(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn independence_witness_is_valid_and_lex_smallest() {
        let g = Graph::cycle(6).unwrap();
        let (size, w) = independence_number(&g);
        assert_eq!(size, 3);
        assert_eq!(w, vec![0, 2, 4]);
        for (i, &u) in w.iter().enumerate() {
            for &v in &w[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn matching_examples() {
        let k2 = Graph::complete(2).unwrap();
        let two_k2 = disjoint_union(&k2, &k2).unwrap();
        assert_eq!(max_matching(&two_k2).0, 2);
        assert_eq!(max_matching(&Graph::star(5).unwrap()).0, 1);
        // frozen from the exhaustive matching enumeration
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(matching_exhaustive(&c5), 2);
        assert_eq!(max_matching(&c5), (2, vec![(0, 1), (2, 3)]));
    }

    #[test]
    fn matching_matches_oracle_small() {
        for n in 0..=5 {
            for g in crate::graph::enumerate_graphs(n, 8).unwrap() {
                assert_eq!(max_matching(&g).0, matching_exhaustive(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn chromatic_and_cover_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()).0, 4);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).0, 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).0, 0);

        // cp(K_k (+) E_{n-k}) = n - k
        let g = join(&Graph::complete(2).unwrap(), &Graph::empty(4).unwrap()).unwrap();
        let (cp, cover) = clique_cover(&g);
        assert_eq!(cp, 4);
        cover.validate(&g).unwrap();

        assert_eq!(clique_cover(&Graph::complete(6).unwrap()).0, 1);

        // C_5 plus a chord: clique cover of size n - 3 = 2
        let g = Graph::cycle(5).unwrap().add_edge(0, 2).unwrap();
        let (cp, cover) = clique_cover(&g);
        assert_eq!(cp, 2);
        cover.validate(&g).unwrap();
    }

    #[test]
    fn cover_equals_complement_chromatic_small() {
        for n in 1..=5 {
            for g in crate::graph::enumerate_graphs(n, 8).unwrap() {
                let (cp, cover) = clique_cover(&g);
                assert_eq!(cp, chromatic_number(&g.complement()).0);
                cover.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn coloring_is_proper() {
        for g in crate::graph::enumerate_graphs(5, 8).unwrap() {
            let (k, colors) = chromatic_number(&g);
            assert!(colors.iter().all(|&c| c < k));
            for (u, v) in g.edges() {
                assert_ne!(colors[u], colors[v]);
            }
        }
    }

    #[test]
    fn bounds_examples() {
        let b = gn_bounds(&Graph::complete(4).unwrap());
        assert_eq!((b.gn_lower, b.gn_upper), (3, 3));

        // frozen from exhaustive checks: alpha(C_5) = 2, cp(C_5) = 3
        let b = gn_bounds(&Graph::cycle(5).unwrap());
        assert_eq!((b.gn_lower, b.gn_upper), (2, 3));

        let b = gn_bounds(&Graph::complete_bipartite(3, 3).unwrap());
        assert_eq!((b.gn_lower, b.gn_upper), (3, 3));
    }

    #[test]
    fn dominating_vertex_detection() {
        assert_eq!(dominating_vertices(&Graph::star(4).unwrap()), vec![0]);
        assert_eq!(dominating_vertices(&Graph::complete(3).unwrap()), vec![0, 1, 2]);
        assert!(dominating_vertices(&Graph::cycle(5).unwrap()).is_empty());
    }
}
