//! Alphabet-independent upper bounds on the guessing number via the Shannon
//! polytope.
//!
//! Variables are joint entropies `h(S)`, one per subset of vertices, with
//! entropy normalized so a single vertex carries at most 1. The polytope is
//! cut out by the elemental Shannon inequalities (which generate the full
//! Shannon cone) plus the neighborhood-determination equalities: on a fixed
//! point, a vertex's color is a function of its neighbors' colors, so
//! `h(S + v) = h(S)` whenever `N(v)` is inside `S`. Maximizing `h(V)` bounds
//! `gn(G, s)` from above for every `s` at once.
//!
//! Determination equalities are not emitted as rows: they merge variables
//! outright (union-find over subsets), which shrinks the LP dramatically.

mod simplex;

pub use simplex::{Constraint, LpSolution};

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// 2^n - 1 set variables stays manageable up to here.
pub const MAX_LP_VERTICES: usize = 10;

/// A rational point of the Shannon polytope: one value per subset of
/// vertices, indexed by bitmask, `h(empty) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyVector {
    n: usize,
    values: Vec<BigRational>,
}

impl EntropyVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, set: u32) -> &BigRational {
        &self.values[set as usize]
    }

    /// Exact re-validation against every constraint family of the model:
    /// grounding, monotonicity, submodularity, singleton caps, and the
    /// determination equalities of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = self.n;
        if g.n() != n {
            return Err(Error::internal("entropy vector size does not match graph"));
        }
        let full = (1u32 << n) - 1;
        if !self.values[0].is_zero() {
            return Err(Error::internal("h(empty) must be 0"));
        }
        for set in 0..=full {
            if self.values[set as usize].is_negative() {
                return Err(Error::internal(format!("h({set:#b}) is negative")));
            }
            for i in 0..n {
                if set >> i & 1 == 0 {
                    // monotonicity, one element at a time
                    let bigger = set | 1 << i;
                    if self.values[set as usize] > self.values[bigger as usize] {
                        return Err(Error::internal(format!("monotonicity fails at {set:#b} + {i}")));
                    }
                }
            }
        }
        for i in 0..n {
            if self.values[1 << i] > BigRational::one() {
                return Err(Error::internal(format!("singleton cap fails at vertex {i}")));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let rest = full & !(1 << i) & !(1 << j);
                let mut s = rest;
                loop {
                    let si = s | 1 << i;
                    let sj = s | 1 << j;
                    let sij = s | 1 << i | 1 << j;
                    let lhs = &self.values[si as usize] + &self.values[sj as usize];
                    let rhs = &self.values[sij as usize] + &self.values[s as usize];
                    if lhs < rhs {
                        return Err(Error::internal(format!(
                            "submodularity fails at S={s:#b}, i={i}, j={j}"
                        )));
                    }
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & rest;
                }
            }
        }
        for v in 0..n {
            let nv = mask_of(g.neighbor_mask(v));
            let outside = full & !nv & !(1 << v);
            let mut t = outside;
            loop {
                let s = nv | t;
                if self.values[(s | 1 << v) as usize] != self.values[s as usize] {
                    return Err(Error::internal(format!(
                        "determination fails: h(S+{v}) != h(S) for S={s:#b}"
                    )));
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & outside;
            }
        }
        Ok(())
    }
}

/// Raw sizes of the constraint families, before variable merging.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyCounts {
    /// 2^n - 1 nonempty set variables.
    pub set_variables: usize,
    /// n elemental monotonicity rows `h(V) - h(V - i) >= 0`.
    pub monotonicity: usize,
    /// C(n,2) * 2^(n-2) elemental submodularity rows.
    pub submodularity: usize,
    /// n singleton caps `h({i}) <= 1`.
    pub caps: usize,
    /// Determination equalities `(v, S)` with `N(v)` inside `S`, `v` outside.
    pub determination: usize,
}

/// The built LP: merged variables, deduplicated rows, objective `max h(V)`.
#[derive(Clone, Debug)]
pub struct EntropyLpModel {
    graph: Graph,
    n: usize,
    /// set bitmask -> merged class id
    class_of: Vec<usize>,
    /// class id -> LP variable (None for the class pinned to 0)
    var_of_class: Vec<Option<usize>>,
    num_vars: usize,
    rows: Vec<Constraint>,
    /// LP variable of h(V), None when h(V) is forced to 0
    objective_var: Option<usize>,
    counts: FamilyCounts,
}

impl EntropyLpModel {
    pub fn counts(&self) -> FamilyCounts {
        self.counts
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of merged LP variables actually solved for.
    pub fn solver_variables(&self) -> usize {
        self.num_vars
    }

    /// Number of deduplicated solver rows.
    pub fn solver_rows(&self) -> usize {
        self.rows.len()
    }

}

fn mask_of(bits: u64) -> u32 {
    bits as u32
}

/// Build the LP for a graph: grounding (folded), elemental monotonicity,
/// elemental submodularity, singleton caps, and determination equalities
/// (applied as variable merges).
pub fn build_lp(g: &Graph) -> Result<EntropyLpModel> {
    let n = g.n();
    if n > MAX_LP_VERTICES {
        return Err(Error::limit(format!(
            "entropy LP supports n <= {MAX_LP_VERTICES}, got {n} (2^n - 1 variables)"
        )));
    }
    let size = 1usize << n;
    let full: u32 = (size - 1) as u32;

    // Merge h(S + v) with h(S) whenever N(v) is inside S, v outside S.
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut determination = 0usize;
    for v in 0..n {
        let nv = mask_of(g.neighbor_mask(v));
        let outside = full & !nv & !(1u32 << v);
        let mut t = outside;
        loop {
            let s = (nv | t) as usize;
            determination += 1;
            let a = find(&mut parent, s | 1 << v);
            let b = find(&mut parent, s);
            if a != b {
                parent[a] = b;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & outside;
        }
    }

    // classes; the one containing the empty set is pinned to value 0
    let mut class_of = vec![0usize; size];
    let mut class_index: BTreeMap<usize, usize> = BTreeMap::new();
    for set in 0..size {
        let root = find(&mut parent, set);
        let next = class_index.len();
        let id = *class_index.entry(root).or_insert(next);
        class_of[set] = id;
    }
    let zero_class = class_of[0];
    let mut var_of_class = vec![None; class_index.len()];
    let mut num_vars = 0;
    for (class, slot) in var_of_class.iter_mut().enumerate() {
        if class != zero_class {
            *slot = Some(num_vars);
            num_vars += 1;
        }
    }

    // rows over merged variables, normalized and deduplicated
    let mut seen: BTreeMap<(Vec<(usize, i64)>, i64), ()> = BTreeMap::new();
    let mut rows: Vec<Constraint> = Vec::new();
    let mut push_row = |terms: &[(u32, i64)], rhs: i64| {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(set, coeff) in terms {
            if let Some(v) = var_of_class[class_of[set as usize]] {
                *acc.entry(v).or_insert(0) += coeff;
            }
        }
        acc.retain(|_, c| *c != 0);
        if acc.is_empty() {
            return; // 0 <= rhs with rhs in {0, 1}
        }
        let key: Vec<(usize, i64)> = acc.into_iter().collect();
        if seen.insert((key.clone(), rhs), ()).is_none() {
            rows.push(Constraint {
                coeffs: key
                    .into_iter()
                    .map(|(v, c)| (v, BigRational::from_integer(c.into())))
                    .collect(),
                rhs: BigRational::from_integer(rhs.into()),
            });
        }
    };

    // (b) elemental monotonicity: h(V - i) - h(V) <= 0
    for i in 0..n {
        push_row(&[(full & !(1 << i), 1), (full, -1)], 0);
    }
    // (c) elemental submodularity as h(S+i+j) + h(S) - h(S+i) - h(S+j) <= 0
    let mut submod = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            let rest = full & !(1 << i) & !(1 << j);
            let mut s = rest;
            loop {
                submod += 1;
                push_row(
                    &[(s | 1 << i | 1 << j, 1), (s, 1), (s | 1 << i, -1), (s | 1 << j, -1)],
                    0,
                );
                if s == 0 {
                    break;
                }
                s = (s - 1) & rest;
            }
        }
    }
    // (d) singleton caps
    for i in 0..n {
        push_row(&[(1 << i, 1)], 1);
    }

    let objective_var = var_of_class[class_of[full as usize]];
    Ok(EntropyLpModel {
        graph: g.clone(),
        n,
        class_of,
        var_of_class,
        num_vars,
        rows,
        objective_var,
        counts: FamilyCounts {
            set_variables: size - 1,
            monotonicity: n,
            submodularity: submod,
            caps: n,
            determination,
        },
    })
}

/// Solve `max h(V)` exactly; the certificate is the optimal entropy vector,
/// re-validated against every constraint before returning.
pub fn solve_lp(model: &EntropyLpModel) -> Result<(BigRational, EntropyVector)> {
    let size = 1usize << model.n;
    let (value, point) = match model.objective_var {
        None => (BigRational::zero(), vec![BigRational::zero(); model.num_vars]),
        Some(obj) => {
            let mut objective = vec![BigRational::zero(); model.num_vars];
            objective[obj] = BigRational::one();
            let solution = simplex::maximize(model.num_vars, &objective, &model.rows)?;
            (solution.value, solution.point)
        }
    };
    let values: Vec<BigRational> = (0..size)
        .map(|set| match model.var_of_class[model.class_of[set]] {
            Some(v) => point[v].clone(),
            None => BigRational::zero(),
        })
        .collect();
    let certificate = EntropyVector { n: model.n, values };
    certificate.validate(&model.graph)?;
    Ok((value, certificate))
}

/// Dump the model in the plain-text LP format understood by standard
/// solvers, for external cross-checking. Variables are named `hK` where `K`
/// is the decimal bitmask of the smallest set in the merged class.
pub fn write_lp_format(model: &EntropyLpModel) -> String {
    use std::fmt::Write;
    let size = 1usize << model.n;
    let mut name_of_var: Vec<Option<u32>> = vec![None; model.num_vars];
    for set in 0..size {
        if let Some(v) = model.var_of_class[model.class_of[set]] {
            if name_of_var[v].is_none() {
                name_of_var[v] = Some(set as u32);
            }
        }
    }
    let name = |v: usize| format!("h{}", name_of_var[v].unwrap_or(0));
    let mut out = String::new();
    let _ = writeln!(out, "\\ entropy polytope LP, graph6 {}", model.graph);
    let _ = writeln!(out, "Maximize");
    match model.objective_var {
        Some(v) => {
            let _ = writeln!(out, " obj: {}", name(v));
        }
        None => {
            let _ = writeln!(out, " obj: 0 h0");
        }
    }
    let _ = writeln!(out, "Subject To");
    for (i, row) in model.rows.iter().enumerate() {
        let mut line = format!(" c{i}:");
        for (v, coeff) in &row.coeffs {
            let c = coeff.to_integer();
            if c.is_positive() {
                line.push_str(&format!(" +{c} {}", name(*v)));
            } else {
                line.push_str(&format!(" {c} {}", name(*v)));
            }
        }
        let _ = writeln!(out, "{line} <= {}", row.rhs.to_integer());
    }
    let _ = writeln!(out, "End");
    out
}

mod chain;
pub use chain::{verify_gnkaa_chain, ChainStep, ChainStepKind, ChainTrace, ElementalRef};
