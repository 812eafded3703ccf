//! Simple undirected graphs on the vertex set `{0, .., n-1}`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps the order
//! at 62 vertices (the single-byte graph6 range; far beyond the n <= 12 the
//! search kernels are meant for). Graphs are immutable after construction: every
//! operation returns a fresh value, so everything here is safe to share
//! across threads.

mod canon;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_graphs, DEFAULT_ENUM_CAP};
pub use graph6::{decode_graph6, encode_graph6};

use crate::error::{Error, Result};

/// Largest vertex count representable (graph6 single-byte header range).
pub const MAX_VERTICES: usize = 62;

/// A simple undirected graph: symmetric, irreflexive adjacency over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edge-free graph on `n` vertices (`n = 0` gives the null graph).
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "graph order {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph `K_n`; rejects `n = 0`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::invalid("complete graph requires at least one vertex"));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Cycle `C_n`; rejects `n < 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle requires at least 3 vertices, got {n}")));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.insert_edge(v, (v + 1) % n);
        }
        Ok(g)
    }

    /// Complete bipartite `K_{p,q}` with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
        if p == 0 || q == 0 {
            return Err(Error::invalid("complete bipartite graph requires both sides nonempty"));
        }
        let mut g = Graph::empty(p + q)?;
        for u in 0..p {
            for v in p..(p + q) {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Star `K_{1,t}` with the center labeled 0; `star(0)` is a single vertex.
    pub fn star(t: usize) -> Result<Graph> {
        if t == 0 {
            return Graph::empty(1);
        }
        Graph::complete_bipartite(1, t)
    }

    /// `K*_{a,a}`: complete bipartite `K_{a,a}` with the edge `x_1 y_1`
    /// subdivided by a new degree-2 vertex.
    ///
    /// Labeling: `x_1..x_a = 0..a-1`, `y_1..y_a = a..2a-1`, subdivision
    /// vertex `v_0 = 2a`. Has `2a+1` vertices and `a^2 + 1` edges;
    /// `k_star(2)` is a 5-cycle.
    pub fn k_star(a: usize) -> Result<Graph> {
        if a < 2 {
            return Err(Error::invalid(format!("k_star requires a >= 2, got {a}")));
        }
        let mut g = Graph::empty(2 * a + 1)?;
        for i in 0..a {
            for j in 0..a {
                if i == 0 && j == 0 {
                    continue; // x_1 y_1 is the subdivided edge
                }
                g.insert_edge(i, a + j);
            }
        }
        let v0 = 2 * a;
        g.insert_edge(0, v0);
        g.insert_edge(a, v0);
        Ok(g)
    }

    /// Build from an explicit edge list; validates indices and rejects loops.
    /// Duplicate edges are tolerated (the adjacency is a set).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u} not allowed")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 != 0
    }

    /// Open neighborhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a bitmask.
    pub fn closed_neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All vertices as a bitmask.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !((1u64 << (u + 1)) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertex pairs that are not edges, `u < v`, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with the edge `{u, v}` added; rejects existing edges,
    /// loops, and bad indices.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("cannot add loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::invalid(format!("edge ({u}, {v}) already present")));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// New graph with the edge `{u, v}` removed; rejects absent edges.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!("edge ({u}, {v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// New graph with vertex `v` removed; the remaining vertices are
    /// relabeled downward, preserving order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = Graph::empty(self.n - 1)?;
        let old = |w: usize| if w < v { w } else { w + 1 };
        for a in 0..g.n {
            for b in (a + 1)..g.n {
                if self.has_edge(old(a), old(b)) {
                    g.insert_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Replace the edge `{u, v}` by a path `u - w - v` through a new vertex
    /// `w = n` appended at the end.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!("edge ({u}, {v}) not present, cannot subdivide")));
        }
        let mut g = self.delete_edge(u, v)?;
        g = g.append_vertex(0)?;
        let w = g.n - 1;
        g.insert_edge(u, w);
        g.insert_edge(v, w);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Append a vertex adjacent to every existing vertex.
    pub fn add_dominating_vertex(&self) -> Result<Graph> {
        self.append_vertex(self.vertex_mask())
    }

    /// Append a new last vertex whose neighborhood is the given bitmask.
    pub fn append_vertex(&self, neighborhood: u64) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "graph order {} exceeds the supported maximum {MAX_VERTICES}",
                self.n + 1
            )));
        }
        debug_assert_eq!(neighborhood & !self.vertex_mask(), 0);
        let mut adj = self.adj.clone();
        adj.push(neighborhood);
        for v in 0..self.n {
            if neighborhood >> v & 1 != 0 {
                adj[v] |= 1 << self.n;
            }
        }
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn apply_permutation(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    /// Sorted degree sequence (ascending).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// True if `pattern` embeds into `self` as a (not necessarily induced)
    /// subgraph: an injective vertex map carrying edges to edges.
    pub fn has_subgraph(&self, pattern: &Graph) -> bool {
        if pattern.n > self.n || pattern.m() > self.m() {
            return false;
        }
        // Map pattern vertices in decreasing-degree order; high-degree
        // vertices fail fastest.
        let mut order: Vec<usize> = pattern.vertices().collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
        let mut image = vec![usize::MAX; pattern.n];
        let mut used = 0u64;
        self.embed(pattern, &order, 0, &mut image, &mut used)
    }

    fn embed(
        &self,
        pattern: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        'candidates: for c in 0..self.n {
            if *used >> c & 1 != 0 || self.degree(c) < pattern.degree(p) {
                continue;
            }
            for q in pattern.neighbors(p) {
                let iq = image[q];
                if iq != usize::MAX && !self.has_edge(c, iq) {
                    continue 'candidates;
                }
            }
            image[p] = c;
            *used |= 1 << c;
            if self.embed(pattern, order, depth + 1, image, used) {
                return true;
            }
            image[p] = usize::MAX;
            *used &= !(1 << c);
        }
        false
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::invalid(format!("vertex {v} out of range for graph on {} vertices", self.n)))
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }
}

/// Join `G ⊕ H`: disjoint copies plus all cross edges. `H`'s vertices are
/// shifted up by `n(G)`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    for u in 0..g.n {
        for v in g.n..(g.n + h.n) {
            out.insert_edge(u, v);
        }
    }
    Ok(out)
}

/// Disjoint union `G + H`; `H`'s vertices are shifted up by `n(G)`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = Graph::empty(g.n + h.n)?;
    for (u, v) in g.edges() {
        out.insert_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.insert_edge(g.n + u, g.n + v);
    }
    Ok(out)
}

/// Parse the plain edge-list format: first non-comment line is `n`, each
/// following line one edge `u v`. Lines may alternatively be separated by
/// semicolons, so `"3; 0 1; 1 2"` works inline.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .split(|c| c == '\n' || c == ';')
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::invalid("empty edge list"))?
        .parse()
        .map_err(|_| Error::invalid("edge list must start with the vertex count"))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(Error::invalid(format!("bad edge line: {line:?}"))),
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::invalid(format!("bad vertex index {s:?}")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edges(n, &edges)
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", encode_graph6(self))
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterate the set bits of a mask in increasing order.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    BitIter(mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(Graph::complete(3).unwrap().m(), 3);
        assert_eq!(Graph::complete(1).unwrap().m(), 0);
        assert_eq!(Graph::complete(5).unwrap().m(), 10);
        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn empty_and_null() {
        let e4 = Graph::empty(4).unwrap();
        assert_eq!((e4.n(), e4.m()), (4, 0));
        let null = Graph::empty(0).unwrap();
        assert_eq!((null.n(), null.m()), (0, 0));
        // join with the null graph is the identity
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(join(&k2, &null).unwrap(), k2);
    }

    #[test]
    fn standard_families() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.m(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        assert!(Graph::cycle(2).is_err());

        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().m(), 9);
        assert_eq!(Graph::star(4).unwrap().m(), 4);
        assert_eq!(Graph::star(0).unwrap().n(), 1);
    }

    #[test]
    fn join_edge_count_formula() {
        let k2 = Graph::complete(2).unwrap();
        let e7 = Graph::empty(7).unwrap();
        let g = join(&k2, &e7).unwrap();
        assert_eq!((g.n(), g.m()), (9, 1 + 14));

        let k6 = Graph::complete(6).unwrap();
        let fig1 = join(&k6, &e7).unwrap();
        assert_eq!((fig1.n(), fig1.m()), (13, 57));

        let e1 = Graph::empty(1).unwrap();
        assert_eq!(join(&e1, &e1).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn disjoint_union_basics() {
        let c5 = Graph::cycle(5).unwrap();
        let g = disjoint_union(&c5, &Graph::empty(2).unwrap()).unwrap();
        assert_eq!((g.n(), g.m()), (7, 5));
        assert_eq!(disjoint_union(&c5, &Graph::empty(0).unwrap()).unwrap(), c5);
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(disjoint_union(&k2, &k2).unwrap().m(), 2);
    }

    #[test]
    fn k_star_shape() {
        assert!(Graph::k_star(1).is_err());
        let g = Graph::k_star(3).unwrap();
        assert_eq!((g.n(), g.m()), (7, 10));
        let g4 = Graph::k_star(4).unwrap();
        assert_eq!((g4.n(), g4.m()), (9, 17));
        // degree pattern: v_0 has degree 2; x_1, y_1 have degree a; rest a
        let a = 4;
        assert_eq!(g4.degree(2 * a), 2);
        assert_eq!(g4.degree(0), a);
        assert_eq!(g4.degree(a), a);
        for v in 1..a {
            assert_eq!(g4.degree(v), a);
            assert_eq!(g4.degree(a + v), a);
        }
        assert!(!g4.has_edge(0, a));
    }

    #[test]
    fn k_star_2_is_a_5_cycle() {
        let g = Graph::k_star(2).unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn subdividing_k22_gives_c5() {
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        let g = k22.subdivide_edge(0, 2).unwrap();
        assert!(is_isomorphic(&g, &Graph::cycle(5).unwrap()));
    }

    #[test]
    fn edge_mutations() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.non_edges().is_empty());
        assert!(k4.add_edge(0, 1).is_err());
        assert!(k4.add_edge(0, 0).is_err());
        assert!(k4.add_edge(0, 9).is_err());
        assert!(k4.delete_edge(0, 1).is_ok());

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.non_edges(), vec![(0, 2)]);
        assert_eq!(p3.add_edge(0, 2).unwrap().m(), 3);
    }

    #[test]
    fn delete_vertex_relabels() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = c5.delete_vertex(4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(c5.delete_vertex(5).is_err());
    }

    #[test]
    fn dominating_vertex_ops() {
        let star3 = Graph::empty(3).unwrap().add_dominating_vertex().unwrap();
        assert!(is_isomorphic(&star3, &Graph::star(3).unwrap()));
        assert_eq!(Graph::star(4).unwrap().dominating_vertices(), vec![0]);
        assert_eq!(Graph::complete(3).unwrap().dominating_vertices(), vec![0, 1, 2]);
        assert!(Graph::cycle(5).unwrap().dominating_vertices().is_empty());
    }

    #[test]
    fn complement_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (1, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.m() + g.complement().m(), 10);
    }

    #[test]
    fn subgraph_embedding() {
        let c5 = Graph::cycle(5).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(c5.has_subgraph(&p3));
        assert!(!c5.has_subgraph(&Graph::complete(3).unwrap()));
        // 2K_2 embeds into C_5 (non-induced is enough)
        let k2 = Graph::complete(2).unwrap();
        let m2 = disjoint_union(&k2, &k2).unwrap();
        assert!(c5.has_subgraph(&m2));
        // every graph contains the null graph
        assert!(k2.has_subgraph(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let inline = parse_edge_list("3; 0 1; 1 2").unwrap();
        assert_eq!(inline, g);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n0 0").is_err());
        assert!(parse_edge_list("2\n0 5").is_err());
        assert!(parse_edge_list("x\n0 1").is_err());
    }
}
