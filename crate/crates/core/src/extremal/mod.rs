//! Extremal and saturation machinery for the bounded-guessing-number
//! property: exhaustive searches at small n, the named constructions with
//! certificates, dominating-vertex lifting, and minimal forbidden families.
//!
//! A graph is (gn_s >= a)-saturated when `gn_s(G) < a` but adding any
//! missing edge pushes the guessing number to at least `a`. Verdicts prefer
//! cheap certificates — a clique cover of `G + e` bounds `gn` from below, an
//! independent set bounds it from above — and fall back to the exact
//! fixed-point search only when the sandwich is inconclusive. Thresholds are
//! rationals and every comparison is exact integer arithmetic: for `a = p/q`,
//! `gn = log_s t >= a` iff `t^q >= s^p`.

mod cache;

pub use cache::{GnCache, GnRecord};

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, disjoint_union, enumerate_graphs, join, CanonicalForm, Graph, DEFAULT_ENUM_CAP,
};
use crate::guessing::{max_code, Code, GuessingInstance, GuessingNumber};
use crate::invariants::{clique_cover, gn_bounds, CliqueCover};
use num_bigint::BigUint;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Rational threshold for `gn >= a` properties.
pub type Threshold = Rational64;

/// Parse a threshold from `"3"` or `"7/2"`.
pub fn parse_threshold(text: &str) -> Result<Threshold> {
    let parse_int =
        |s: &str| s.trim().parse::<i64>().map_err(|_| Error::invalid(format!("bad number {s:?}")));
    match text.split_once('/') {
        None => Ok(Threshold::from_integer(parse_int(text)?)),
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q <= 0 {
                return Err(Error::invalid(format!("threshold denominator must be positive in {text:?}")));
            }
            Ok(Threshold::new(p, q))
        }
    }
}

/// What is known about one graph's guessing number at alphabet `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnInfo {
    pub n: usize,
    pub s: u32,
    /// Clique cover number: `gn >= n - cp`.
    pub cp: usize,
    /// Independence number: `gn <= n - alpha`.
    pub alpha: usize,
    /// Exact maximum code size, when computed (or pinned by the bounds).
    pub exact: Option<u64>,
}

impl GnInfo {
    pub fn exact_gn(&self) -> Option<GuessingNumber> {
        self.exact.map(|t| GuessingNumber { max_fixed_points: t, s: self.s })
    }

    /// Decide `gn >= a` from what is known; `None` when the bounds straddle
    /// the threshold and no exact value is present.
    pub fn decide_at_least(&self, a: Threshold) -> Option<bool> {
        if let Some(gn) = self.exact_gn() {
            return Some(gn.at_least(*a.numer(), *a.denom()));
        }
        if Threshold::from_integer((self.n - self.cp) as i64) >= a {
            return Some(true);
        }
        if Threshold::from_integer((self.n - self.alpha) as i64) < a {
            return Some(false);
        }
        None
    }
}

/// Saturation verdict; `Unknown` only arises in bound-limited mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SatVerdict {
    Saturated,
    NotSaturated,
    Unknown,
}

/// Why `gn(G + e) >= a` holds, per missing edge.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum NonEdgeEvidence {
    /// A clique cover of `G + e` with at most `n - ceil(a)` classes.
    CliqueCover(CliqueCover),
    /// A code on `G + e` of size at least `s^a`.
    Code(Code),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NonEdgeCheck {
    pub edge: (usize, usize),
    pub evidence: NonEdgeEvidence,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SaturationReport {
    pub graph: Graph,
    pub s: u32,
    pub a: Threshold,
    pub gn: GnInfo,
    pub verdict: SatVerdict,
    /// Set when the verdict is NotSaturated or Unknown.
    pub reason: Option<String>,
    /// One entry per missing edge when saturated.
    pub per_nonedge: Vec<NonEdgeCheck>,
}

impl SaturationReport {
    pub fn saturated(&self) -> bool {
        self.verdict == SatVerdict::Saturated
    }

    /// Re-validate every certificate from scratch: clique covers clique by
    /// clique on `G + e` with the size bound, codes by the pairwise conflict
    /// predicate and the exact threshold comparison.
    pub fn validate(&self) -> Result<()> {
        let cap = self.graph.n() as i64 - self.a.ceil().to_integer();
        for check in &self.per_nonedge {
            let (u, v) = check.edge;
            let extended = self.graph.add_edge(u, v)?;
            match &check.evidence {
                NonEdgeEvidence::CliqueCover(cover) => {
                    cover.validate(&extended)?;
                    if cover.classes.len() as i64 > cap {
                        return Err(Error::internal(format!(
                            "clique cover for edge ({u}, {v}) has {} classes, needs <= {cap}",
                            cover.classes.len()
                        )));
                    }
                }
                NonEdgeEvidence::Code(code) => {
                    let inst = GuessingInstance::new(extended, self.s)?;
                    code.validate(&inst)?;
                    let gn = GuessingNumber { max_fixed_points: code.size() as u64, s: self.s };
                    if !gn.at_least(*self.a.numer(), *self.a.denom()) {
                        return Err(Error::internal(format!(
                            "code witness for edge ({u}, {v}) has only {} words",
                            code.size()
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Shared state for the searches: the result cache, the enumeration
/// ceiling, and an optional progress sink (the CLI points it at stderr).
pub struct Session {
    pub cache: GnCache,
    pub enum_cap: usize,
    progress: Option<Box<dyn FnMut(&str) + Send>>,
}

impl Default for Session {
    fn default() -> Self {
        Session::new()
    }
}

impl Session {
    pub fn new() -> Session {
        Session::with_cache(GnCache::in_memory())
    }

    pub fn with_cache(cache: GnCache) -> Session {
        Session { cache, enum_cap: DEFAULT_ENUM_CAP, progress: None }
    }

    pub fn set_progress(&mut self, sink: impl FnMut(&str) + Send + 'static) {
        self.progress = Some(Box::new(sink));
    }

    fn progress(&mut self, msg: &str) {
        if let Some(sink) = &mut self.progress {
            sink(msg);
        }
    }

    /// Bounds (always) and the exact code size (when `need_exact` or pinned
    /// by the sandwich), through the cache.
    pub fn gn_info(&mut self, g: &Graph, s: u32, need_exact: bool) -> Result<GnInfo> {
        let form = canonical_form(g)?;
        if let Some(rec) = self.cache.lookup(form.as_str(), s) {
            if rec.exact.is_some() || !need_exact {
                return Ok(GnInfo { n: rec.n, s, cp: rec.cp, alpha: rec.alpha, exact: rec.exact });
            }
        }
        let bounds = gn_bounds(g);
        let mut exact = None;
        if bounds.cp == bounds.alpha {
            // the sandwich collapses: gn = n - alpha exactly
            exact = Some(checked_pow(s, bounds.gn_upper)?);
        } else if need_exact {
            let inst = GuessingInstance::new(g.clone(), s)?;
            exact = Some(max_code(&inst)?.size() as u64);
        }
        let info = GnInfo { n: g.n(), s, cp: bounds.cp, alpha: bounds.alpha, exact };
        self.cache.store(GnRecord {
            g6: form.0,
            s,
            n: info.n,
            cp: info.cp,
            alpha: info.alpha,
            exact: info.exact,
        })?;
        Ok(info)
    }

    /// Decide `gn_s(G) >= a`, using bounds first and the exact search only
    /// when allowed and necessary. `None` means the bounds are inconclusive
    /// and exact search was not permitted (or is over its cap).
    fn decide_at_least(&mut self, g: &Graph, s: u32, a: Threshold, allow_exact: bool) -> Result<Option<bool>> {
        let info = self.gn_info(g, s, false)?;
        if let Some(verdict) = info.decide_at_least(a) {
            return Ok(Some(verdict));
        }
        if !allow_exact {
            return Ok(None);
        }
        match self.gn_info(g, s, true) {
            Ok(info) => Ok(info.decide_at_least(a)),
            Err(Error::ResourceLimit(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Saturation verdict with certificates. Runs in exact mode whenever the
    /// coloring space fits the search caps, and degrades to bound mode (which
    /// may return `Unknown`) beyond them.
    pub fn is_gn_saturated(&mut self, g: &Graph, s: u32, a: Threshold) -> Result<SaturationReport> {
        if a <= Threshold::from_integer(0) {
            return Err(Error::invalid("saturation threshold must be positive"));
        }
        let gn = self.gn_info(g, s, false)?;
        let mut report = SaturationReport {
            graph: g.clone(),
            s,
            a,
            gn,
            verdict: SatVerdict::Unknown,
            reason: None,
            per_nonedge: Vec::new(),
        };

        // gn(G) < a?
        match self.decide_at_least(g, s, a, true)? {
            Some(true) => {
                report.verdict = SatVerdict::NotSaturated;
                report.reason = Some(format!("gn(G, {s}) >= {a} already"));
                return Ok(report);
            }
            Some(false) => {}
            None => {
                report.reason = Some("gn(G) vs a inconclusive at bound level (over exact-search cap)".into());
                return Ok(report);
            }
        }
        report.gn = self.gn_info(g, s, false)?;

        // every missing edge must push gn to at least a
        for (u, v) in g.non_edges() {
            let extended = g.add_edge(u, v)?;
            let needed = self.graph_cap_classes(g.n(), a);
            let (cp, cover) = clique_cover(&extended);
            if cp as i64 <= needed {
                report.per_nonedge.push(NonEdgeCheck {
                    edge: (u, v),
                    evidence: NonEdgeEvidence::CliqueCover(cover),
                });
                continue;
            }
            match self.decide_at_least(&extended, s, a, true)? {
                Some(true) => {
                    // the cheap cover was not enough; witness with a code
                    let inst = GuessingInstance::new(extended, s)?;
                    let code = max_code(&inst)?;
                    report
                        .per_nonedge
                        .push(NonEdgeCheck { edge: (u, v), evidence: NonEdgeEvidence::Code(code) });
                }
                Some(false) => {
                    report.verdict = SatVerdict::NotSaturated;
                    report.reason = Some(format!("adding edge ({u}, {v}) keeps gn below {a}"));
                    return Ok(report);
                }
                None => {
                    report.reason =
                        Some(format!("edge ({u}, {v}) inconclusive at bound level (over exact-search cap)"));
                    return Ok(report);
                }
            }
        }
        report.verdict = SatVerdict::Saturated;
        report.validate()?;
        Ok(report)
    }

    fn graph_cap_classes(&self, n: usize, a: Threshold) -> i64 {
        n as i64 - a.ceil().to_integer()
    }

    /// Extremal number: the maximum edge count over graphs on `n` vertices
    /// with `gn_s < a`, plus every extremal graph (canonical forms).
    pub fn ex_search(&mut self, n: usize, s: u32, a: Threshold) -> Result<(usize, Vec<CanonicalForm>)> {
        if a <= Threshold::from_integer(0) {
            return Err(Error::invalid("extremal threshold must be positive"));
        }
        if n == 0 {
            return Err(Error::invalid("extremal search needs at least one vertex"));
        }
        if a > Threshold::from_integer(n as i64 - 1) {
            return Err(Error::invalid(format!(
                "no graph on {n} vertices has guessing number >= {a}; the extremal number is undefined"
            )));
        }
        let by_edges = self.enumerate_by_edges(n)?;
        for m in (0..by_edges.len()).rev() {
            let mut hits = Vec::new();
            for g in &by_edges[m] {
                if self.decide_at_least(g, s, a, true)? == Some(false) {
                    hits.push(canonical_form(g)?);
                }
            }
            self.progress(&format!("ex: m={m}, {} candidates, {} extremal", by_edges[m].len(), hits.len()));
            if !hits.is_empty() {
                hits.sort();
                return Ok((m, hits));
            }
        }
        unreachable!("the empty graph has guessing number 0 < a");
    }

    /// Saturation number: the minimum edge count over `(gn_s >= a)`-saturated
    /// graphs on `n` vertices, plus the saturated graphs at that count.
    pub fn sat_search(&mut self, n: usize, s: u32, a: Threshold) -> Result<(usize, Vec<CanonicalForm>)> {
        if a <= Threshold::from_integer(0) {
            return Err(Error::invalid("saturation threshold must be positive"));
        }
        if n == 0 {
            return Err(Error::invalid("saturation search needs at least one vertex"));
        }
        let by_edges = self.enumerate_by_edges(n)?;
        for (m, graphs) in by_edges.iter().enumerate() {
            let mut hits = Vec::new();
            for g in graphs {
                let report = self.is_gn_saturated(g, s, a)?;
                match report.verdict {
                    SatVerdict::Saturated => hits.push(canonical_form(g)?),
                    SatVerdict::NotSaturated => {}
                    SatVerdict::Unknown => {
                        return Err(Error::limit(format!(
                            "saturation of {g:?} undecidable at bound level; over the exact-search cap"
                        )))
                    }
                }
            }
            self.progress(&format!("sat: m={m}, {} candidates, {} saturated", graphs.len(), hits.len()));
            if !hits.is_empty() {
                hits.sort();
                return Ok((m, hits));
            }
        }
        Err(Error::internal(format!("no (gn >= {a})-saturated graph on {n} vertices found")))
    }

    fn enumerate_by_edges(&mut self, n: usize) -> Result<Vec<Vec<Graph>>> {
        let graphs = enumerate_graphs(n, self.enum_cap)?;
        let mut by_edges = vec![Vec::new(); n * (n - 1) / 2 + 1];
        for g in graphs {
            by_edges[g.m()].push(g);
        }
        Ok(by_edges)
    }

    /// Saturation transfers across a dominating vertex: `G` is saturated for
    /// `a` exactly when `G` plus a dominating vertex is saturated for `a+1`.
    /// Returns both reports; errors if the biconditional fails (a broken
    /// invariant, not a user error).
    pub fn lift_saturated(&mut self, g: &Graph, s: u32, a: Threshold) -> Result<LiftReport> {
        let base = self.is_gn_saturated(g, s, a)?;
        let lifted_graph = g.add_dominating_vertex()?;
        let lifted = self.is_gn_saturated(&lifted_graph, s, a + Threshold::from_integer(1))?;
        if base.verdict != SatVerdict::Unknown
            && lifted.verdict != SatVerdict::Unknown
            && base.saturated() != lifted.saturated()
        {
            return Err(Error::internal(format!(
                "dominating-vertex lifting broke: base {:?} vs lifted {:?}",
                base.verdict, lifted.verdict
            )));
        }
        Ok(LiftReport { base, lifted })
    }

    /// All minimal graphs with `gn_s >= a` on up to `n_cap` vertices: the
    /// members of the forbidden family computable at desk scale. Minimality
    /// is checked against every single-vertex and single-edge deletion.
    pub fn minimal_forbidden_family(&mut self, s: u32, a: Threshold, n_cap: usize) -> Result<ForbiddenFamily> {
        if a <= Threshold::from_integer(0) {
            return Err(Error::invalid("forbidden-family threshold must be positive"));
        }
        let mut members = BTreeSet::new();
        for n in 1..=n_cap {
            let graphs = enumerate_graphs(n, self.enum_cap)?;
            let total = graphs.len();
            let mut found = 0usize;
            for g in graphs {
                if self.is_minimal_forbidden(&g, s, a)? {
                    members.insert(canonical_form(&g)?);
                    found += 1;
                }
            }
            self.progress(&format!("family: n={n}, {total} classes, {found} minimal members"));
        }
        let complete = match a.ceil().to_integer().try_into() {
            Ok(a_int) => BigUint::from(n_cap) >= forbidden_order_bound(s, a_int)?,
            Err(_) => false,
        };
        Ok(ForbiddenFamily { s, a, n_cap, members, complete })
    }

    fn is_minimal_forbidden(&mut self, g: &Graph, s: u32, a: Threshold) -> Result<bool> {
        if self.decide_at_least(g, s, a, true)? != Some(true) {
            return Ok(false);
        }
        for v in g.vertices() {
            if self.decide_at_least(&g.delete_vertex(v)?, s, a, true)? != Some(false) {
                return Ok(false);
            }
        }
        for (u, v) in g.edges() {
            if self.decide_at_least(&g.delete_edge(u, v)?, s, a, true)? != Some(false) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For `a <= b`, every computed member of the family at threshold `b`
    /// must contain some member of the family at threshold `a` as a
    /// subgraph. Returns the per-member witnesses.
    pub fn check_family_monotonicity(
        &mut self,
        s: u32,
        a: Threshold,
        b: Threshold,
        n_cap: usize,
    ) -> Result<FamilyMonotonicity> {
        if a > b {
            return Err(Error::invalid(format!("need a <= b, got a = {a}, b = {b}")));
        }
        let family_b = self.minimal_forbidden_family(s, b, n_cap)?;
        if a == b {
            let witnesses =
                family_b.members.iter().map(|f| (f.clone(), Some(f.clone()))).collect();
            return Ok(FamilyMonotonicity { holds: true, witnesses });
        }
        let family_a = self.minimal_forbidden_family(s, a, n_cap)?;
        let smaller: Vec<Graph> =
            family_a.members.iter().map(|f| f.graph()).collect::<Result<_>>()?;
        let mut witnesses = Vec::new();
        let mut holds = true;
        for member in &family_b.members {
            let host = member.graph()?;
            let hit = smaller
                .iter()
                .zip(&family_a.members)
                .find(|(pattern, _)| host.has_subgraph(pattern))
                .map(|(_, form)| form.clone());
            holds &= hit.is_some();
            witnesses.push((member.clone(), hit));
        }
        Ok(FamilyMonotonicity { holds, witnesses })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftReport {
    pub base: SaturationReport,
    pub lifted: SaturationReport,
}

/// The members of the minimal forbidden family `F_{s,a}` with at most
/// `n_cap` vertices. `complete` is true only when `n_cap` reaches the
/// theoretical order bound, which never happens at desk scale.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ForbiddenFamily {
    pub s: u32,
    pub a: Threshold,
    pub n_cap: usize,
    pub members: BTreeSet<CanonicalForm>,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyMonotonicity {
    pub holds: bool,
    /// Each member of the larger-threshold family with the subgraph found
    /// in the smaller-threshold family, if any.
    pub witnesses: Vec<(CanonicalForm, Option<CanonicalForm>)>,
}

/// `K_{ceil(a)-1} (+) E_{n-ceil(a)+1}`: the unique extremal graph for
/// `gn < a` on `n > ceil(a)` vertices.
pub fn extremal_construction(n: usize, a: Threshold) -> Result<Graph> {
    if a <= Threshold::from_integer(0) {
        return Err(Error::invalid("threshold must be positive"));
    }
    let k = (a.ceil().to_integer() - 1).max(0) as usize;
    if n as i64 <= a.ceil().to_integer() {
        return Err(Error::invalid(format!("need n > ceil(a), got n = {n}, a = {a}")));
    }
    if k == 0 {
        return Graph::empty(n);
    }
    join(&Graph::complete(k)?, &Graph::empty(n - k)?)
}

/// `K*_{a,a} + E_{n-2a-1}`: the graph behind the constant saturation upper
/// bound `sat(n, gn >= a+1) <= a^2 + 1`.
pub fn saturation_construction(n: usize, a: usize) -> Result<Graph> {
    if a < 2 {
        return Err(Error::invalid(format!("saturation construction requires a >= 2, got {a}")));
    }
    if n < 2 * a + 1 {
        return Err(Error::invalid(format!("need n >= 2a + 1 = {}, got {n}", 2 * a + 1)));
    }
    disjoint_union(&Graph::k_star(a)?, &Graph::empty(n - 2 * a - 1)?)
}

/// `b` dominating vertices over `K*_{a-b,a-b}` plus isolated vertices: a
/// `(gn >= a+1)`-saturated graph with `C(b,2) + b(n-b) + (a-b)^2 + 1` edges
/// for `b < a`; at `b = a` this degenerates to the extremal join
/// `K_a (+) E_{n-a}`. Dominating vertices carry the highest labels.
pub fn spectrum_construction(n: usize, a: usize, b: usize) -> Result<Graph> {
    if b > a {
        return Err(Error::invalid(format!("need b <= a, got a = {a}, b = {b}")));
    }
    if n < 2 * a + 1 {
        return Err(Error::invalid(format!("need n >= 2a + 1 = {}, got {n}", 2 * a + 1)));
    }
    if b == a {
        return join(&Graph::complete(a)?, &Graph::empty(n - a)?);
    }
    if a - b < 2 {
        return Err(Error::invalid(format!(
            "need a - b >= 2 unless b = a, got a = {a}, b = {b}"
        )));
    }
    let mut g = saturation_construction(n - b, a - b)?;
    for _ in 0..b {
        g = g.add_dominating_vertex()?;
    }
    Ok(g)
}

/// The order bound `s^(s^(2(a+1))) + 2(a+1)` on members of the forbidden
/// family, as an exact big integer. Computed as a number only; never used
/// as an enumeration cap.
pub fn forbidden_order_bound(s: u32, a: u32) -> Result<BigUint> {
    if s < 2 || a < 1 {
        return Err(Error::invalid(format!("order bound needs s >= 2, a >= 1, got s = {s}, a = {a}")));
    }
    let inner = BigUint::from(s).pow(2 * (a + 1));
    let inner: u32 = inner
        .try_into()
        .map_err(|_| Error::limit(format!("s^(2(a+1)) too large to exponentiate for s = {s}, a = {a}")))?;
    Ok(BigUint::from(s).pow(inner) + BigUint::from(2 * (a + 1)))
}

fn checked_pow(s: u32, e: usize) -> Result<u64> {
    let mut out: u64 = 1;
    for _ in 0..e {
        out = out
            .checked_mul(s as u64)
            .ok_or_else(|| Error::limit(format!("{s}^{e} overflows the code-size range")))?;
    }
    Ok(out)
}
