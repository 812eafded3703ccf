//! Maximum-code search kernel.
//!
//! A code is an independent set in the conflict relation over all s^n
//! colorings, i.e. a clique in the complementary compatibility graph. The
//! search is a branch-and-bound maximum clique with a greedy-coloring bound,
//! warm-started with the clique-cover code of size s^(n-cp) and stopped
//! early once the incumbent hits the certified optimum s^(n-alpha).

use super::GuessingInstance;
use crate::error::{Error, Result};
use crate::invariants;

/// Colorings beyond this count would make the compatibility matrix
/// unreasonably large; the protocol-side operations go further (see
/// [`super::INSTANCE_CAP`]).
pub const SEARCH_CAP: u64 = 1 << 14;

pub fn max_code_indices(inst: &GuessingInstance) -> Result<Vec<u64>> {
    let words = inst.coloring_count();
    if words > SEARCH_CAP {
        return Err(Error::limit(format!(
            "max-code search needs s^n <= {SEARCH_CAP}, got {words}; only protocol evaluation is available at this size"
        )));
    }
    let m = words as usize;
    let g = inst.graph();
    let n = g.n();

    // digit table: colors[i * n + v] = color of vertex v in coloring i
    let mut colors = vec![0u32; m * n.max(1)];
    for i in 0..m {
        for v in 0..n {
            colors[i * n + v] = inst.color_of(i as u64, v);
        }
    }
    let conflict = |a: usize, b: usize| -> bool {
        (0..n).any(|v| {
            colors[a * n + v] != colors[b * n + v]
                && g.neighbors(v).all(|u| colors[a * n + u] == colors[b * n + u])
        })
    };

    let word_count = m.div_ceil(64).max(1);
    let mut comp = vec![vec![0u64; word_count]; m];
    for a in 0..m {
        for b in (a + 1)..m {
            if !conflict(a, b) {
                comp[a][b / 64] |= 1 << (b % 64);
                comp[b][a / 64] |= 1 << (a % 64);
            }
        }
    }

    let (alpha, _) = invariants::independence_number(g);
    let (_, cover) = invariants::clique_cover(g);
    let target = inst.s().pow((n - alpha) as u32) as u64;

    let seed = cover_code_indices(inst, &cover.classes);
    debug_assert!(is_clique(&comp, &seed));
    debug_assert_eq!(seed[0], 0, "the cover code contains the all-zero coloring");

    let mut search = CliqueSearch { comp: &comp, best: seed, target: target as usize, done: false };
    if search.best.len() < search.target {
        // Pointwise translation of colorings (mod s) is an automorphism of
        // the conflict relation and acts transitively, so some maximum code
        // contains the all-zero coloring: root the search at word 0.
        let mut r = vec![0usize];
        search.expand(&mut r, comp[0].clone());
    }

    let mut indices: Vec<u64> = search.best.iter().map(|&i| i as u64).collect();
    indices.sort_unstable();
    Ok(indices)
}

/// The code of size s^(n - cp) induced by a clique cover: within each class
/// the colors must sum to 0 mod s, so each vertex is determined by the rest
/// of its class, all of which it can see.
fn cover_code_indices(inst: &GuessingInstance, classes: &[Vec<usize>]) -> Vec<usize> {
    let s = inst.s() as u64;
    let n = inst.graph().n();
    let mut free: Vec<usize> = Vec::new();
    let mut rep: Vec<(usize, Vec<usize>)> = Vec::new();
    for class in classes {
        let r = *class.last().expect("cover classes are nonempty");
        for &v in class {
            if v != r {
                free.push(v);
            }
        }
        rep.push((r, class[..class.len() - 1].to_vec()));
    }
    let mut out = Vec::new();
    let mut assignment = vec![0u64; free.len()];
    loop {
        let mut coloring = vec![0u64; n];
        for (k, &v) in free.iter().enumerate() {
            coloring[v] = assignment[k];
        }
        for (r, others) in &rep {
            let sum: u64 = others.iter().map(|&v| coloring[v]).sum();
            coloring[*r] = (s - sum % s) % s;
        }
        let mut index = 0u64;
        for v in (0..n).rev() {
            index = index * s + coloring[v];
        }
        out.push(index as usize);

        // odometer over the free vertices
        let mut k = 0;
        loop {
            if k == assignment.len() {
                out.sort_unstable();
                return out;
            }
            assignment[k] += 1;
            if assignment[k] < s {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

fn is_clique(comp: &[Vec<u64>], members: &[usize]) -> bool {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if comp[a][b / 64] >> (b % 64) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

struct CliqueSearch<'a> {
    comp: &'a [Vec<u64>],
    best: Vec<usize>,
    target: usize,
    done: bool,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: Vec<u64>) {
        if self.done {
            return;
        }
        if p.iter().all(|&w| w == 0) {
            if r.len() > self.best.len() {
                self.best = r.clone();
                if self.best.len() >= self.target {
                    self.done = true;
                }
            }
            return;
        }
        // Greedy coloring of p: a clique takes at most one vertex per color
        // class, so a vertex placed in class c bounds any clique through the
        // first c classes by r.len() + c.
        let order = self.color_order(&p);
        for &(v, color) in order.iter().rev() {
            if r.len() + color <= self.best.len() {
                return;
            }
            let mut next = vec![0u64; p.len()];
            for (w, slot) in next.iter_mut().enumerate() {
                *slot = p[w] & self.comp[v][w];
            }
            r.push(v);
            self.expand(r, next);
            r.pop();
            if self.done {
                return;
            }
            p[v / 64] &= !(1 << (v % 64));
        }
    }

    fn color_order(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = p.to_vec();
        let mut order = Vec::new();
        let mut color = 0;
        while let Some(first) = first_bit(&uncolored) {
            color += 1;
            let mut avail = uncolored.clone();
            let mut v = first;
            loop {
                clear_bit(&mut uncolored, v);
                clear_bit(&mut avail, v);
                order.push((v, color));
                for (w, slot) in avail.iter_mut().enumerate() {
                    *slot &= !self.comp[v][w];
                }
                match first_bit(&avail) {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }
        order
    }
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn clear_bit(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1 << (v % 64));
}
