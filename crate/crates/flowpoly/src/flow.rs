//! The three flow-polynomial engines and their shared memo cache.
//!
//! * [`flow_oracle`] — subset expansion over all edge subsets; the
//!   ground-truth engine, limited to small edge counts.
//! * [`flow_dc`] — deletion-contraction with the standard reductions
//!   (component product, loop factor, bridge annihilation, degree-2
//!   desubdivision) and memoization keyed by canonical form.
//! * [`flow_decompose`] — recursive splitting along small edge cuts,
//!   recombining piece polynomials by exact division.
//!
//! All engines agree coefficient-exactly; the test suites enforce this
//! on enumerated and random graphs.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::canon::{canonical_key, CanonicalKey};
use crate::multigraph::{EdgeRef, Multigraph};
use crate::polynomial::IntPoly;
use crate::{Error, Result};

/// Which engine produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    DeletionContraction,
    Decomposition,
}

/// Requested computation method.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Oracle,
    DeletionContraction,
    Decompose,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FlowStats {
    /// Recursion nodes visited by deletion-contraction.
    pub nodes: u64,
    /// Memo-cache hits.
    pub cache_hits: u64,
    /// Leaf pieces produced by decomposition.
    pub pieces: u64,
}

/// A flow polynomial together with provenance.
#[derive(Clone, Debug)]
pub struct FlowResult {
    pub poly: IntPoly,
    pub engine: Engine,
    pub stats: FlowStats,
}

/// Concurrent map from canonical key to flow polynomial. Inserts are
/// idempotent (isomorphic graphs share one exact polynomial), so the
/// cache is safe to share across worker threads.
#[derive(Default)]
pub struct MemoCache {
    map: Mutex<HashMap<CanonicalKey, IntPoly>>,
    hits: AtomicU64,
}

impl MemoCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<IntPoly> {
        let found = self.map.lock().unwrap().get(key).cloned();
        if found.is_some() {
            self.hits.fetch_add(1, Ordering::Relaxed);
        }
        found
    }

    pub fn insert(&self, key: CanonicalKey, poly: IntPoly) {
        self.map.lock().unwrap().insert(key, poly);
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hit_count(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    /// Snapshot of all entries, sorted by key for deterministic output.
    pub fn entries(&self) -> Vec<(CanonicalKey, IntPoly)> {
        let mut out: Vec<(CanonicalKey, IntPoly)> = self
            .map
            .lock()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// Default edge limit for the subset-expansion engine.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Subset-expansion engine with the default edge limit.
pub fn flow_oracle(g: &Multigraph) -> Result<FlowResult> {
    flow_oracle_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// Sums (-1)^(m-|Z|) t^(|Z|+c(Z)-n) over all 2^m subsets Z of the edge
/// multiset, where each parallel copy and each loop is its own element.
pub fn flow_oracle_with_limit(g: &Multigraph, limit: usize) -> Result<FlowResult> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::OracleLimit { m, limit });
    }
    if m > 62 {
        return Err(Error::OracleLimit { m, limit: 62 });
    }
    let n = g.vertex_count();
    let mut copies: Vec<(usize, usize)> = g.edge_copies().iter().map(|e| (e.u, e.v)).collect();
    for v in 0..n {
        for _ in 0..g.loop_count(v) {
            copies.push((v, v));
        }
    }
    // every |coefficient| is at most 2^m <= 2^limit, so i64 tallies
    // suffice for any limit the engine accepts
    let mut coeffs = vec![0i64; m + 2];
    let mut parent = vec![0usize; n];
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for mask in 0u64..(1u64 << m) {
        for (v, p) in parent.iter_mut().enumerate() {
            *p = v;
        }
        let mut picked = 0usize;
        let mut comps = n;
        for (i, &(u, v)) in copies.iter().enumerate() {
            if mask >> i & 1 == 1 {
                picked += 1;
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    comps -= 1;
                }
            }
        }
        let exp = picked + comps - n;
        if (m - picked) % 2 == 0 {
            coeffs[exp] += 1;
        } else {
            coeffs[exp] -= 1;
        }
    }
    Ok(FlowResult {
        poly: IntPoly::from_i64(&coeffs),
        engine: Engine::Oracle,
        stats: FlowStats::default(),
    })
}

fn strip_loops(g: &Multigraph) -> Multigraph {
    let classes: Vec<(usize, usize, usize)> = g.parallel_classes().collect();
    Multigraph::from_classes(g.vertex_count(), &classes).unwrap()
}

/// Pivot rule: an edge in a smallest parallel class incident to a
/// highest-degree vertex. Any choice is correct; this one empirically
/// keeps the recursion shallow.
fn pivot_edge(g: &Multigraph) -> EdgeRef {
    let max_deg = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap();
    let mut best: Option<(usize, usize, usize)> = None;
    for (u, v, k) in g.parallel_classes() {
        if g.degree(u) != max_deg && g.degree(v) != max_deg {
            continue;
        }
        let cand = (k, u, v);
        if best.map_or(true, |b| cand < b) {
            best = Some(cand);
        }
    }
    let (_, u, v) = best.expect("pivot needs a non-loop edge");
    EdgeRef { u, v, index: 0 }
}

fn dc_recurse(g: &Multigraph, cache: Option<&MemoCache>, stats: &mut FlowStats) -> IntPoly {
    stats.nodes += 1;
    if g.edge_count() == 0 {
        return IntPoly::one();
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc = IntPoly::one();
        for comp in &comps {
            acc = acc.mul(&dc_recurse(&g.induced(comp), cache, stats));
            if acc.is_zero() {
                return acc;
            }
        }
        return acc;
    }
    let loops = g.total_loops();
    if loops > 0 {
        let rest = dc_recurse(&strip_loops(g), cache, stats);
        return IntPoly::linear_shift(-1).pow(loops).mul(&rest);
    }
    if !g.bridges().is_empty() {
        return IntPoly::zero();
    }
    if let Some(u) = (0..g.vertex_count()).find(|&v| g.degree(v) == 2 && g.loop_count(v) == 0) {
        return dc_recurse(&g.desubdivide(u).unwrap(), cache, stats);
    }
    // connected, loopless, bridgeless, min degree >= 3
    let key = cache.map(|_| canonical_key(g));
    if let (Some(c), Some(k)) = (cache, key.as_ref()) {
        if let Some(hit) = c.get(k) {
            stats.cache_hits += 1;
            return hit;
        }
    }
    let e = pivot_edge(g);
    let contracted = dc_recurse(&g.contract_edge(&e).unwrap(), cache, stats);
    let deleted = dc_recurse(&g.delete_edge(&e).unwrap(), cache, stats);
    let result = contracted.sub(&deleted);
    if let (Some(c), Some(k)) = (cache, key) {
        c.insert(k, result.clone());
    }
    result
}

/// Deletion-contraction with a private memo cache.
pub fn flow_dc(g: &Multigraph) -> FlowResult {
    let cache = MemoCache::new();
    flow_dc_cached(g, &cache)
}

/// Deletion-contraction sharing an external memo cache.
pub fn flow_dc_cached(g: &Multigraph, cache: &MemoCache) -> FlowResult {
    let mut stats = FlowStats::default();
    let poly = dc_recurse(g, Some(cache), &mut stats);
    FlowResult {
        poly,
        engine: Engine::DeletionContraction,
        stats,
    }
}

/// Deletion-contraction with memoization disabled; used to check that
/// caching never changes results.
pub fn flow_dc_uncached(g: &Multigraph) -> FlowResult {
    let mut stats = FlowStats::default();
    let poly = dc_recurse(g, None, &mut stats);
    FlowResult {
        poly,
        engine: Engine::DeletionContraction,
        stats,
    }
}

/// A small cut eligible for decomposition: minimal, 2 or 3 copies, both
/// sides at least two vertices (so splitting strictly shrinks), sides
/// returned with the cut.
struct SplitCut {
    classes: Vec<(usize, usize, usize)>, // (u, v, mult) with u on side A
    side_a: Vec<usize>,
    side_b: Vec<usize>,
    size: usize,
}

fn find_split_cut(g: &Multigraph) -> Option<SplitCut> {
    for max in [2usize, 3] {
        let cuts = g.small_edge_cuts(max);
        for cut in &cuts {
            if cut.size() != max {
                continue;
            }
            let classes = cut.classes();
            let mut h = g.clone();
            for &(u, v) in &classes {
                let k = h.multiplicity(u, v);
                for _ in 0..k {
                    h = h.delete_edge(&EdgeRef { u, v, index: 0 }).unwrap();
                }
            }
            let comps = h.components();
            if comps.len() != 2 {
                continue;
            }
            let (a, b) = (comps[0].clone(), comps[1].clone());
            if a.len() < 2 || b.len() < 2 {
                continue; // a one-vertex side is a vertex star; splitting recreates g
            }
            let oriented: Vec<(usize, usize, usize)> = classes
                .iter()
                .map(|&(u, v)| {
                    let k = g.multiplicity(u, v);
                    if a.binary_search(&u).is_ok() {
                        (u, v, k)
                    } else {
                        (v, u, k)
                    }
                })
                .collect();
            return Some(SplitCut {
                classes: oriented,
                side_a: a,
                side_b: b,
                size: max,
            });
        }
    }
    None
}

/// Contracts one side of a cut to a single apex vertex: the kept side's
/// internal edges survive, each cut edge becomes an edge to the apex.
fn contract_side(g: &Multigraph, keep: &[usize], cut: &[(usize, usize, usize)], keep_is_a: bool) -> Multigraph {
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    let index = |x: usize| sorted.binary_search(&x).ok();
    let mut classes = Vec::new();
    for (u, v, k) in g.parallel_classes() {
        if let (Some(a), Some(b)) = (index(u), index(v)) {
            classes.push((a, b, k));
        }
    }
    let apex = sorted.len();
    let mut loops_carry = Vec::new();
    for v in 0..g.vertex_count() {
        if g.loop_count(v) > 0 {
            if let Some(a) = index(v) {
                loops_carry.push((a, a, g.loop_count(v)));
            }
        }
    }
    classes.extend(loops_carry);
    for &(au, bv, k) in cut {
        let anchor = if keep_is_a { au } else { bv };
        let a = index(anchor).expect("cut endpoint on kept side");
        classes.push((a, apex, k));
    }
    Multigraph::from_classes(sorted.len() + 1, &classes).unwrap()
}

fn divisor_for_cut(size: usize) -> IntPoly {
    match size {
        2 => IntPoly::from_i64(&[-1, 1]),
        3 => IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::from_i64(&[-2, 1])),
        _ => unreachable!("cuts are size 2 or 3"),
    }
}

fn decompose_recurse(g: &Multigraph, cache: &MemoCache, stats: &mut FlowStats) -> Result<IntPoly> {
    match find_split_cut(g) {
        None => {
            let r = flow_dc_cached(g, cache);
            stats.nodes += r.stats.nodes;
            stats.cache_hits += r.stats.cache_hits;
            stats.pieces += 1;
            Ok(r.poly)
        }
        Some(cut) => {
            let g1 = contract_side(g, &cut.side_a, &cut.classes, true);
            let g2 = contract_side(g, &cut.side_b, &cut.classes, false);
            let f1 = decompose_recurse(&g1, cache, stats)?;
            let f2 = decompose_recurse(&g2, cache, stats)?;
            f1.mul(&f2)
                .exact_div(&divisor_for_cut(cut.size))
                .map_err(|_| {
                    Error::Inconsistency(
                        "piece product not divisible by the cut factor".into(),
                    )
                })
        }
    }
}

/// Cut-decomposition engine. Requires a connected bridgeless graph.
pub fn flow_decompose(g: &Multigraph) -> Result<FlowResult> {
    let cache = MemoCache::new();
    flow_decompose_cached(g, &cache)
}

pub fn flow_decompose_cached(g: &Multigraph, cache: &MemoCache) -> Result<FlowResult> {
    if !g.is_connected() {
        return Err(Error::Domain("decomposition needs a connected graph".into()));
    }
    if !g.is_bridgeless() {
        return Err(Error::Domain("decomposition needs a bridgeless graph".into()));
    }
    let mut stats = FlowStats::default();
    let poly = decompose_recurse(g, cache, &mut stats)?;
    Ok(FlowResult {
        poly,
        engine: Engine::Decomposition,
        stats,
    })
}

/// Computes F(G,t) by the requested method. `Auto` decomposes along a
/// small cut when the graph is connected, bridgeless and has one, and
/// falls back to deletion-contraction otherwise.
pub fn flow(g: &Multigraph, method: Method) -> Result<FlowResult> {
    let cache = MemoCache::new();
    flow_with_cache(g, method, &cache)
}

pub fn flow_with_cache(g: &Multigraph, method: Method, cache: &MemoCache) -> Result<FlowResult> {
    match method {
        Method::Oracle => flow_oracle(g),
        Method::DeletionContraction => Ok(flow_dc_cached(g, cache)),
        Method::Decompose => flow_decompose_cached(g, cache),
        Method::Auto => {
            if g.is_connected() && g.is_bridgeless() && find_split_cut(g).is_some() {
                flow_decompose_cached(g, cache)
            } else {
                Ok(flow_dc_cached(g, cache))
            }
        }
    }
}

/// The sign-normalized polynomial (-1)^(m-n+1) F(G,-t) of a connected
/// graph; all coefficients are positive when the graph is bridgeless.
pub fn tau(g: &Multigraph) -> Result<IntPoly> {
    if !g.is_connected() {
        return Err(Error::Domain("tau needs a connected graph".into()));
    }
    let f = flow(g, Method::Auto)?;
    Ok(f.poly.tau_transform(g.edge_count(), g.vertex_count()))
}

/// Result of iterated 2-edge-cut splitting of a cubic graph.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// 3-edge-connected cubic pieces, sorted by canonical key.
    pub pieces: Vec<Multigraph>,
    /// Number of splits performed; pieces = splits + 1.
    pub splits: usize,
}

fn two_cut_split(g: &Multigraph, pieces: &mut Vec<Multigraph>, splits: &mut usize) -> Result<()> {
    let cuts = g.small_edge_cuts(2);
    let cut = cuts.iter().find(|c| c.size() == 2);
    let Some(cut) = cut else {
        pieces.push(g.clone());
        return Ok(());
    };
    let classes = cut.classes();
    if classes.len() != 2 {
        return Err(Error::Inconsistency(
            "a doubled parallel class formed a 2-edge cut in a bridgeless cubic graph".into(),
        ));
    }
    let (e1, e2) = (classes[0], classes[1]);
    let mut h = g.clone();
    h = h.delete_edge(&EdgeRef { u: e1.0, v: e1.1, index: 0 })?;
    h = h.delete_edge(&EdgeRef { u: e2.0, v: e2.1, index: 0 })?;
    let comps = h.components();
    if comps.len() != 2 {
        return Err(Error::Inconsistency("2-edge cut did not split into two sides".into()));
    }
    let side_a = &comps[0];
    // orient: (a1, b1) from e1 and (a2, b2) from e2 with a's on side A
    let (a1, b1) = if side_a.binary_search(&e1.0).is_ok() {
        (e1.0, e1.1)
    } else {
        (e1.1, e1.0)
    };
    let (a2, b2) = if side_a.binary_search(&e2.0).is_ok() {
        (e2.0, e2.1)
    } else {
        (e2.1, e2.0)
    };
    let build = |side: &[usize], x: usize, y: usize| -> Multigraph {
        let mut sorted = side.to_vec();
        sorted.sort_unstable();
        let index = |v: usize| sorted.binary_search(&v).unwrap();
        let mut piece = g.induced(&sorted);
        piece = piece.with_edge(index(x), index(y)).unwrap();
        piece
    };
    let g1 = build(&comps[0], a1, a2);
    let g2 = build(&comps[1], b1, b2);
    *splits += 1;
    two_cut_split(&g1, pieces, splits)?;
    two_cut_split(&g2, pieces, splits)?;
    Ok(())
}

/// Iterates the 2-edge-cut split (delete the cut pair {uv, u'v'}, add
/// uu' and vv') until every piece is 3-edge-connected cubic.
pub fn two_edge_cut_decomposition(g: &Multigraph) -> Result<Decomposition> {
    if !g.is_cubic() {
        return Err(Error::Domain("2-edge-cut decomposition needs a cubic graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Domain("2-edge-cut decomposition needs a connected graph".into()));
    }
    if !g.is_bridgeless() {
        return Err(Error::Domain("2-edge-cut decomposition needs a bridgeless graph".into()));
    }
    let mut pieces = Vec::new();
    let mut splits = 0;
    two_cut_split(g, &mut pieces, &mut splits)?;
    for p in &pieces {
        debug_assert!(p.is_cubic() && p.is_connected() && p.is_bridgeless());
        debug_assert!(p.small_edge_cuts(2).is_empty(), "piece still has a 2-cut");
    }
    let mut keyed: Vec<(CanonicalKey, Multigraph)> =
        pieces.into_iter().map(|p| (canonical_key(&p), p)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Decomposition {
        pieces: keyed.into_iter().map(|(_, p)| p).collect(),
        splits,
    })
}
