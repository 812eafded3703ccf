//! Guessing games: protocols, fixed-point codes, and exact guessing numbers.
//!
//! A protocol assigns every vertex a guessing function of its neighbors'
//! colors; its fixed points are the colorings on which every guess is right.
//! Fixed-point sets are exactly the *codes* — sets of colorings in which
//! each vertex's color is determined by its neighborhood — so the guessing
//! number `gn(G, s) = log_s (maximum code size)`.

mod search;

pub use search::SEARCH_CAP;

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Hard cap on s^n for protocol evaluation (full enumeration of colorings).
pub const INSTANCE_CAP: u64 = 1 << 20;

/// A graph paired with an alphabet size, the arena for one guessing game.
#[derive(Clone, Debug)]
pub struct GuessingInstance {
    graph: Graph,
    s: u32,
    pow: Vec<u64>,
}

impl GuessingInstance {
    /// Requires `s >= 2` and `s^n <= 2^20`.
    pub fn new(graph: Graph, s: u32) -> Result<GuessingInstance> {
        if s < 2 {
            return Err(Error::invalid(format!("alphabet size must be at least 2, got {s}")));
        }
        let mut pow = vec![1u64];
        for _ in 0..graph.n() {
            let next = pow.last().unwrap().checked_mul(s as u64);
            match next {
                Some(p) if p <= INSTANCE_CAP => pow.push(p),
                _ => {
                    return Err(Error::limit(format!(
                        "s^n = {s}^{} exceeds the coloring cap {INSTANCE_CAP}",
                        graph.n()
                    )))
                }
            }
        }
        Ok(GuessingInstance { graph, s, pow })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// s^n, the number of colorings.
    pub fn coloring_count(&self) -> u64 {
        self.pow[self.graph.n()]
    }

    /// Color of vertex `v` in the base-s encoded coloring `index`.
    pub fn color_of(&self, index: u64, v: usize) -> u32 {
        (index / self.pow[v] % self.s as u64) as u32
    }

    pub fn decode(&self, index: u64) -> Coloring {
        Coloring { colors: (0..self.graph.n()).map(|v| self.color_of(index, v)).collect() }
    }

    pub fn encode(&self, coloring: &Coloring) -> Result<u64> {
        if coloring.colors.len() != self.graph.n() {
            return Err(Error::invalid(format!(
                "coloring has {} entries, graph has {} vertices",
                coloring.colors.len(),
                self.graph.n()
            )));
        }
        let mut index = 0u64;
        for (v, &c) in coloring.colors.iter().enumerate() {
            if c >= self.s {
                return Err(Error::invalid(format!("color {c} at vertex {v} exceeds alphabet {}", self.s)));
            }
            index += c as u64 * self.pow[v];
        }
        Ok(index)
    }

    /// Base-s key of the colors on `N(v)` (neighbors in increasing order),
    /// the lookup index into a protocol table.
    fn neighborhood_key(&self, index: u64, v: usize) -> u64 {
        let mut key = 0u64;
        let mut scale = 1u64;
        for u in self.graph.neighbors(v) {
            key += self.color_of(index, u) as u64 * scale;
            scale *= self.s as u64;
        }
        key
    }
}

/// An assignment of one color to every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
}

/// A set of colorings in which every vertex's color is determined by its
/// neighborhood — equivalently, a pairwise conflict-free set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Code {
    pub words: Vec<Coloring>,
}

impl Code {
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Check the defining property: no two words agree on some `N(v)` yet
    /// differ at `v`.
    pub fn validate(&self, inst: &GuessingInstance) -> Result<()> {
        for w in &self.words {
            inst.encode(w)?;
        }
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                if conflicts(a, b, inst.graph())? {
                    return Err(Error::invalid(format!(
                        "codewords {a:?} and {b:?} conflict: some vertex sees equal neighborhoods but differs"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// True when some vertex sees identical neighborhood colors in `c1` and `c2`
/// but has different colors there — the pairwise obstruction to being a code.
pub fn conflicts(c1: &Coloring, c2: &Coloring, g: &Graph) -> Result<bool> {
    if c1.colors.len() != c2.colors.len() || c1.colors.len() != g.n() {
        return Err(Error::invalid(format!(
            "coloring lengths {} and {} must both equal the vertex count {}",
            c1.colors.len(),
            c2.colors.len(),
            g.n()
        )));
    }
    Ok((0..g.n()).any(|v| {
        c1.colors[v] != c2.colors[v] && g.neighbors(v).all(|u| c1.colors[u] == c2.colors[u])
    }))
}

/// Exact guessing number as the pair (max fixed points, alphabet); the float
/// rendering is derived presentation only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuessingNumber {
    /// The maximum code size, s^gn.
    pub max_fixed_points: u64,
    pub s: u32,
}

impl GuessingNumber {
    /// log_s of the code size.
    pub fn value(&self) -> f64 {
        (self.max_fixed_points as f64).ln() / (self.s as f64).ln()
    }

    /// Compare the exact value against a rational threshold `p/q`:
    /// `gn >= p/q  <=>  max_fixed_points^q >= s^p` in exact integer arithmetic.
    pub fn at_least(&self, p: i64, q: i64) -> bool {
        use num_bigint::BigUint;
        assert!(q > 0, "threshold denominator must be positive");
        if p <= 0 {
            return true; // gn >= 0 always
        }
        let lhs = BigUint::from(self.max_fixed_points).pow(q as u32);
        let rhs = BigUint::from(self.s).pow(p as u32);
        lhs >= rhs
    }
}

impl std::fmt::Display for GuessingNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "log_{}({}) = {:.4}", self.s, self.max_fixed_points, self.value())
    }
}

/// A maximum code, found by branch-and-bound over the conflict relation.
pub fn max_code(inst: &GuessingInstance) -> Result<Code> {
    let indices = search::max_code_indices(inst)?;
    let words = indices.iter().map(|&i| inst.decode(i)).collect();
    let code = Code { words };
    debug_assert!(code.validate(inst).is_ok());
    Ok(code)
}

/// Exact `gn(G, s)` via [`max_code`].
pub fn gn_exact(inst: &GuessingInstance) -> Result<GuessingNumber> {
    let code = max_code(inst)?;
    Ok(GuessingNumber { max_fixed_points: code.size() as u64, s: inst.s() })
}

/// One guessing function per vertex, stored as a dense lookup table from
/// base-s neighborhood keys to the guessed color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Protocol {
    pub s: u32,
    pub tables: Vec<Vec<u32>>,
}

impl Protocol {
    /// All-zero tables: every vertex always guesses color 0.
    pub fn constant_zero(inst: &GuessingInstance) -> Protocol {
        let g = inst.graph();
        let tables =
            (0..g.n()).map(|v| vec![0u32; inst.pow[g.degree(v)] as usize]).collect();
        Protocol { s: inst.s(), tables }
    }

    /// Shape check: one table per vertex, table `v` of length `s^deg(v)`,
    /// entries within the alphabet.
    pub fn validate(&self, inst: &GuessingInstance) -> Result<()> {
        let g = inst.graph();
        if self.s != inst.s() {
            return Err(Error::invalid(format!(
                "protocol alphabet {} does not match instance alphabet {}",
                self.s,
                inst.s()
            )));
        }
        if self.tables.len() != g.n() {
            return Err(Error::invalid(format!(
                "protocol has {} tables, graph has {} vertices",
                self.tables.len(),
                g.n()
            )));
        }
        for (v, table) in self.tables.iter().enumerate() {
            let expect = inst.pow[g.degree(v)];
            if table.len() as u64 != expect {
                return Err(Error::invalid(format!(
                    "table for vertex {v} has {} entries, expected s^deg = {expect}",
                    table.len()
                )));
            }
            if table.iter().any(|&c| c >= self.s) {
                return Err(Error::invalid(format!("table for vertex {v} guesses outside the alphabet")));
            }
        }
        Ok(())
    }

    /// The guess of vertex `v` on the coloring `index`.
    pub fn guess(&self, inst: &GuessingInstance, index: u64, v: usize) -> u32 {
        self.tables[v][inst.neighborhood_key(index, v) as usize]
    }
}

/// Number of colorings on which every vertex guesses itself, by full
/// enumeration of the s^n colorings.
pub fn count_fixed_points(protocol: &Protocol, inst: &GuessingInstance) -> Result<u64> {
    protocol.validate(inst)?;
    let g = inst.graph();
    let mut count = 0u64;
    for index in 0..inst.coloring_count() {
        if (0..g.n()).all(|v| protocol.guess(inst, index, v) == inst.color_of(index, v)) {
            count += 1;
        }
    }
    Ok(count)
}

/// Turn a code into a protocol whose fixed points include every codeword:
/// wherever some codeword realizes a neighborhood, guess that codeword's
/// color (well defined by the code property); unconstrained entries default
/// to color 0.
pub fn protocol_from_code(code: &Code, inst: &GuessingInstance) -> Result<Protocol> {
    code.validate(inst)?;
    let g = inst.graph();
    let mut protocol = Protocol::constant_zero(inst);
    for word in &code.words {
        let index = inst.encode(word)?;
        for v in 0..g.n() {
            let key = inst.neighborhood_key(index, v) as usize;
            let entry = &mut protocol.tables[v][key];
            debug_assert!(*entry == 0 || *entry == word.colors[v], "code property violated");
            *entry = word.colors[v];
        }
    }
    Ok(protocol)
}

/// Extend a protocol on `G - v` to one on `G`, where `w`'s closed
/// neighborhood (apart from `v` itself) lies inside `N(v)`.
///
/// The two vertices act as one virtual vertex colored `c(w) + c(v) mod s`:
/// every other vertex reads that sum in place of `c(w)`, while `w` and `v`
/// each recover their own color by subtracting the other's. Every fixed
/// point of the inner protocol lifts `s` ways, so the count multiplies by
/// exactly `s`.
pub fn merge_strategy_extension(
    g: &Graph,
    v: usize,
    w: usize,
    inner: &Protocol,
) -> Result<Protocol> {
    let n = g.n();
    if v >= n || w >= n || v == w {
        return Err(Error::invalid(format!("need two distinct vertices, got v={v}, w={w}")));
    }
    // N[w] \ {v} must lie inside N(v); in particular w ~ v.
    let uncovered = (g.closed_neighbor_mask(w) & !(1 << v)) & !g.neighbor_mask(v);
    if uncovered != 0 {
        return Err(Error::invalid(format!(
            "closed neighborhood of w={w} is not contained in the neighborhood of v={v}"
        )));
    }
    let reduced = g.delete_vertex(v)?;
    let s = inner.s;
    let inner_inst = GuessingInstance::new(reduced, s)?;
    inner.validate(&inner_inst)?;
    let inst = GuessingInstance::new(g.clone(), s)?;

    let old = |u: usize| if u < v { u } else { u - 1 };
    let su = s as u64;

    let mut tables: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 0..n {
        let neighbors: Vec<usize> = g.neighbors(i).collect();
        let mut table = vec![0u32; inst.pow[neighbors.len()] as usize];
        for (key, slot) in table.iter_mut().enumerate() {
            // colors of N(i) under this key
            let color_at = |u: usize| -> u32 {
                let pos = neighbors.binary_search(&u).expect("u is a neighbor of i");
                (key as u64 / su.pow(pos as u32) % su) as u32
            };
            let source = if i == v || i == w { w } else { i };
            // key into the inner table of old(source), over N_{G-v}(old(source))
            let mut inner_key = 0u64;
            let mut scale = 1u64;
            for u in g.neighbors(source).filter(|&u| u != v) {
                let mut c = color_at(u) as u64;
                if u == w && i != v && i != w {
                    // virtual color: the merged pair is read as c(w) + c(v)
                    c = (c + color_at(v) as u64) % su;
                }
                inner_key += c * scale;
                scale *= su;
            }
            let inner_guess = inner.tables[old(source)][inner_key as usize] as u64;
            *slot = if i == v {
                ((inner_guess + su - color_at(w) as u64) % su) as u32
            } else if i == w {
                ((inner_guess + su - color_at(v) as u64) % su) as u32
            } else {
                inner_guess as u32
            };
        }
        tables.push(table);
    }
    let protocol = Protocol { s, tables };
    debug_assert!(protocol.validate(&inst).is_ok());
    Ok(protocol)
}
