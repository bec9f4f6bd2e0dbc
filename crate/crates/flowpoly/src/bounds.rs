//! Coefficient-bound constructors and verifiers.
//!
//! Upper bounds dominate |cᵢ|, the absolute values of the flow
//! polynomial coefficients of a connected bridgeless graph; lower
//! bounds are dominated by them on cubic graphs whose flow roots are
//! all real. Each bound is a product of shifted linear factors
//! ([`BoundSpec`]); verification compares expansions coefficient by
//! coefficient, exactly.
//!
//! [`sweep`] runs one bound family over a stream of graphs (optionally
//! in parallel) and aggregates pass/fail/equality counts with
//! deterministic, canonical-key-sorted output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::canon::canonical_key;
use crate::flow::{flow_with_cache, MemoCache, Method};
use crate::multigraph::Multigraph;
use crate::polynomial::{BoundSpec, IntPoly};
use crate::roots;
use crate::{Error, Result};

/// The numbered bound families exposed by the `verify` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
}

impl TheoremId {
    pub fn from_number(k: u8) -> Option<TheoremId> {
        use TheoremId::*;
        Some(match k {
            1 => T1,
            2 => T2,
            3 => T3,
            4 => T4,
            5 => T5,
            6 => T6,
            7 => T7,
            _ => return None,
        })
    }

    pub fn number(&self) -> u8 {
        use TheoremId::*;
        match self {
            T1 => 1,
            T2 => 2,
            T3 => 3,
            T4 => 4,
            T5 => 5,
            T6 => 6,
            T7 => 7,
        }
    }

    pub fn is_lower(&self) -> bool {
        matches!(self, TheoremId::T4 | TheoremId::T5)
    }
}

fn staircase(len: usize) -> BoundSpec {
    // (t+1)(t+2)...(t+len)
    BoundSpec::new((1..=len as i64).map(|j| (j, 1)).collect())
}

/// Upper bound for any connected bridgeless (n,m)-graph:
/// (t+1)...(t+m-n+1) while m-n <= 1, then (t+1)(t+2)(t+3)(t+4)^(m-n-2).
pub fn upper_bound_general(n: usize, m: usize) -> Result<BoundSpec> {
    if m < n {
        return Err(Error::Domain(format!("needs m >= n, got n = {n}, m = {m}")));
    }
    let d = m - n;
    if d <= 1 {
        Ok(staircase(d + 1))
    } else {
        Ok(BoundSpec::new(vec![(1, 1), (2, 1), (3, 1), (4, d as u32 - 2)]))
    }
}

/// Refined upper bound: the staircase persists through m-n <= 3, then
/// (t+1)(t+2)(t+3)^2(t+4)^(m-n-3). Coefficient-wise below
/// [`upper_bound_general`] everywhere.
pub fn upper_bound_general_refined(n: usize, m: usize) -> Result<BoundSpec> {
    if m < n {
        return Err(Error::Domain(format!("needs m >= n, got n = {n}, m = {m}")));
    }
    let d = m - n;
    if d <= 3 {
        Ok(staircase(d + 1))
    } else {
        Ok(BoundSpec::new(vec![(1, 1), (2, 1), (3, 2), (4, d as u32 - 3)]))
    }
}

fn even_vertex_count(n: usize) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Domain(format!("cubic bound needs even n >= 2, got {n}")));
    }
    Ok(())
}

/// Upper bound for connected bridgeless cubic graphs:
/// (t+1)(t+2) at n = 2, else (t+1)(t+2)(t+3)(t+4)^((n-4)/2).
pub fn upper_bound_cubic(n: usize) -> Result<BoundSpec> {
    even_vertex_count(n)?;
    if n == 2 {
        Ok(staircase(2))
    } else {
        Ok(BoundSpec::new(vec![(1, 1), (2, 1), (3, 1), (4, (n as u32 - 4) / 2)]))
    }
}

/// Refined cubic upper bound with explicit small cases:
/// n = 2, 4, 6 give staircases, then (t+1)(t+2)(t+3)^2(t+4)^((n-6)/2).
pub fn upper_bound_cubic_refined(n: usize) -> Result<BoundSpec> {
    even_vertex_count(n)?;
    match n {
        2 => Ok(staircase(2)),
        4 => Ok(staircase(3)),
        6 => Ok(staircase(4)),
        _ => Ok(BoundSpec::new(vec![(1, 1), (2, 1), (3, 2), (4, (n as u32 - 6) / 2)])),
    }
}

/// Which near-cubic bound to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NearCubicVersion {
    /// (t+2)(t+1)^⌊(dx-1)/2⌋ (t+4)^⌊(n-1)/2⌋
    Original,
    /// (t+2)(t+3)(t+1)^⌊(dx-1)/2⌋ (t+4)^⌊(n-3)/2⌋
    Refined,
}

/// Bound for a connected graph that is near-cubic at a vertex of degree
/// `dx`. Negative floor exponents (refined version, n <= 2) clamp to
/// zero; the returned flag marks such small cases, which are covered by
/// direct computation rather than the product formula.
pub fn near_cubic_bound(n: usize, dx: usize, version: NearCubicVersion) -> Result<(BoundSpec, bool)> {
    if n < 1 || dx < 2 {
        return Err(Error::Domain(format!(
            "near-cubic bound needs n >= 1 and dx >= 2, got n = {n}, dx = {dx}"
        )));
    }
    let ones = ((dx - 1) / 2) as u32;
    match version {
        NearCubicVersion::Original => {
            let fours = ((n - 1) / 2) as u32;
            Ok((BoundSpec::new(vec![(2, 1), (1, ones), (4, fours)]), false))
        }
        NearCubicVersion::Refined => {
            let raw = (n as i64 - 3).div_euclid(2);
            let clamped = raw < 0;
            let fours = raw.max(0) as u32;
            Ok((
                BoundSpec::new(vec![(2, 1), (3, 1), (1, ones), (4, fours)]),
                clamped,
            ))
        }
    }
}

/// Lower bound (t+1)(t+2)^(n/2) for connected bridgeless cubic graphs
/// with only real flow roots.
pub fn lower_bound_cubic(n: usize) -> Result<BoundSpec> {
    even_vertex_count(n)?;
    Ok(BoundSpec::new(vec![(1, 1), (2, n as u32 / 2)]))
}

/// Lower bound (t+1)(t+2)^(n/2-2)(t+3)^2 for simple connected
/// bridgeless cubic graphs with only real flow roots; n >= 8 so the
/// extremal chain has its two 4-vertex end blocks.
pub fn lower_bound_cubic_simple(n: usize) -> Result<BoundSpec> {
    even_vertex_count(n)?;
    if n < 8 {
        return Err(Error::Domain(format!("simple cubic lower bound needs n >= 8, got {n}")));
    }
    Ok(BoundSpec::new(vec![(1, 1), (2, n as u32 / 2 - 2), (3, 2)]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Per-graph outcome of one bound comparison.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub key_hex: String,
    pub n: usize,
    pub m: usize,
    pub theorem: TheoremId,
    pub bound: BoundSpec,
    /// |cᵢ| of the computed flow polynomial, constant term first.
    pub computed_abs: Vec<BigInt>,
    /// Expanded bound coefficients.
    pub bound_coeffs: Vec<BigInt>,
    pub verdict: Verdict,
    pub equality: bool,
    /// Non-negative exactly when the verdict is pass: bound - |c| for
    /// upper bounds, |c| - bound for lower bounds.
    pub slack: Vec<BigInt>,
    pub note: Option<String>,
}

impl VerificationReport {
    fn not_applicable(g: &Multigraph, theorem: TheoremId, bound: BoundSpec, note: &str) -> Self {
        VerificationReport {
            key_hex: canonical_key(g).to_hex(),
            n: g.vertex_count(),
            m: g.edge_count(),
            theorem,
            bound,
            computed_abs: Vec::new(),
            bound_coeffs: Vec::new(),
            verdict: Verdict::NotApplicable,
            equality: false,
            slack: Vec::new(),
            note: Some(note.to_string()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strings = |v: &[BigInt]| -> Vec<String> { v.iter().map(|x| x.to_string()).collect() };
        serde_json::json!({
            "key": self.key_hex,
            "n": self.n.to_string(),
            "m": self.m.to_string(),
            "theorem": self.theorem.number().to_string(),
            "bound": self.bound.product_string(),
            "coefficients": strings(&self.computed_abs),
            "bound_coefficients": strings(&self.bound_coeffs),
            "verdict": match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::NotApplicable => "not-applicable",
            },
            "equality": self.equality,
            "slack": strings(&self.slack),
            "note": self.note,
        })
    }
}

/// Absolute coefficient sequence of the flow polynomial, checked against
/// the sign-normalized transform (the alternating-sign structure of a
/// connected bridgeless graph makes the two routes coincide).
fn abs_flow_coeffs(g: &Multigraph, cache: &MemoCache) -> Result<(Vec<BigInt>, IntPoly)> {
    let f = flow_with_cache(g, Method::Auto, cache)?;
    let tau = f.poly.tau_transform(g.edge_count(), g.vertex_count());
    let abs: Vec<BigInt> = f.poly.abs_coeffs();
    if abs != tau.coeffs() {
        return Err(Error::Inconsistency(
            "flow coefficients do not alternate in sign".into(),
        ));
    }
    Ok((abs, f.poly))
}

fn compare(
    g: &Multigraph,
    theorem: TheoremId,
    bound: BoundSpec,
    lower: bool,
    cache: &MemoCache,
    note: Option<String>,
) -> Result<VerificationReport> {
    if !g.is_connected() || !g.is_bridgeless() {
        return Ok(VerificationReport::not_applicable(
            g,
            theorem,
            bound,
            "needs a connected bridgeless graph",
        ));
    }
    let (abs, _) = abs_flow_coeffs(g, cache)?;
    let expanded = bound.expand();
    let width = abs.len().max(expanded.coeffs().len());
    let mut slack = Vec::with_capacity(width);
    let mut pass = true;
    let mut equality = true;
    let bound_coeffs: Vec<BigInt> = (0..width).map(|i| expanded.coeff(i)).collect();
    for i in 0..width {
        let c = abs.get(i).cloned().unwrap_or_else(BigInt::zero);
        let d = &bound_coeffs[i];
        let s = if lower { &c - d } else { d - &c };
        if s.is_negative() {
            pass = false;
        }
        if !s.is_zero() {
            equality = false;
        }
        slack.push(s);
    }
    Ok(VerificationReport {
        key_hex: canonical_key(g).to_hex(),
        n: g.vertex_count(),
        m: g.edge_count(),
        theorem,
        bound,
        computed_abs: abs,
        bound_coeffs,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        equality: pass && equality,
        slack,
        note,
    })
}

/// Checks |cᵢ| <= dᵢ for every coefficient.
pub fn verify_upper(g: &Multigraph, bound: BoundSpec, theorem: TheoremId) -> Result<VerificationReport> {
    compare(g, theorem, bound, false, &MemoCache::new(), None)
}

/// Checks bᵢ <= |cᵢ| for every coefficient.
pub fn verify_lower(g: &Multigraph, bound: BoundSpec, theorem: TheoremId) -> Result<VerificationReport> {
    compare(g, theorem, bound, true, &MemoCache::new(), None)
}

/// True when every flow root of the connected bridgeless graph is real
/// (real roots counted with multiplicity exhaust the degree).
pub fn is_real_rooted_flow(g: &Multigraph) -> Result<bool> {
    is_real_rooted_flow_cached(g, &MemoCache::new())
}

fn is_real_rooted_flow_cached(g: &Multigraph, cache: &MemoCache) -> Result<bool> {
    if !g.is_connected() || !g.is_bridgeless() {
        return Err(Error::Domain(
            "real-rootedness applies to connected bridgeless graphs".into(),
        ));
    }
    let f = flow_with_cache(g, Method::Auto, cache)?;
    let summary = roots::root_summary(&f.poly)?;
    Ok(summary.real_rooted())
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact audit of the root-location facts that hold for connected
/// bridgeless graphs, with the extra clauses for near-cubic and
/// 3-connected cubic inputs. The relation between a root at 2 and
/// 3-connectivity is recorded observationally, never enforced.
#[derive(Clone, Debug, Serialize)]
pub struct RootAudit {
    pub key_hex: String,
    pub n: usize,
    pub m: usize,
    pub blocks: usize,
    /// (-1)^(m-n+1) F(t) > 0 at t = -1, 0, 1/2.
    pub sign_below_one_ok: bool,
    pub root_one_multiplicity: usize,
    /// multiplicity of the root at 1 equals the block count
    pub root_one_matches_blocks: bool,
    /// (-1)^(m-n+b+1) F(t) > 0 at t = 32/27.
    pub sign_shoulder_ok: bool,
    /// at most one vertex of degree above 3 (every cubic graph qualifies)
    pub near_cubic_scope: bool,
    /// no flow roots strictly between 1 and 2 (when in scope)
    pub no_roots_one_two: Option<bool>,
    pub three_connected_cubic: bool,
    pub root_two_multiplicity: usize,
    /// F nonzero with sign (-1)^(m-n) on (1,2): checked at 3/2 plus the
    /// empty-interval count (when 3-connected cubic)
    pub sign_one_two_ok: Option<bool>,
    /// simple root at 2 (when 3-connected cubic)
    pub simple_root_at_two: Option<bool>,
    /// no roots in the open interval (2, 127/50) (when 3-connected cubic)
    pub no_roots_above_two: Option<bool>,
}

impl RootAudit {
    /// Every applicable enforced clause holds.
    pub fn passes(&self) -> bool {
        self.sign_below_one_ok
            && self.root_one_matches_blocks
            && self.sign_shoulder_ok
            && self.no_roots_one_two.unwrap_or(true)
            && self.sign_one_two_ok.unwrap_or(true)
            && self.simple_root_at_two.unwrap_or(true)
            && self.no_roots_above_two.unwrap_or(true)
    }
}

/// Runs the root-location audit on a connected bridgeless graph.
pub fn root_location_audit(g: &Multigraph) -> Result<RootAudit> {
    root_location_audit_cached(g, &MemoCache::new())
}

fn root_location_audit_cached(g: &Multigraph, cache: &MemoCache) -> Result<RootAudit> {
    if !g.is_connected() || !g.is_bridgeless() {
        return Err(Error::Domain(
            "root audit applies to connected bridgeless graphs".into(),
        ));
    }
    let f = flow_with_cache(g, Method::Auto, cache)?.poly;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let blocks = g.blocks()?;
    let parity_sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
    let lead_sign = parity_sign(m - n + 1);
    let sign_below_one_ok = [rational(-1, 1), rational(0, 1), rational(1, 2)]
        .iter()
        .all(|t| f.sign_at(t) * lead_sign > 0);
    let root_one_multiplicity = roots::multiplicity_at(&f, &rational(1, 1));
    let shoulder_sign = parity_sign(m - n + blocks + 1);
    let sign_shoulder_ok = f.sign_at(&rational(32, 27)) * shoulder_sign > 0;
    let near_cubic_scope = (0..n).filter(|&v| g.degree(v) > 3).count() <= 1;
    let no_roots_one_two = if near_cubic_scope {
        Some(roots::real_root_count_distinct(&f, Some((rational(1, 1), rational(2, 1))))? == 0)
    } else {
        None
    };
    let three_connected_cubic = g.is_cubic() && g.is_three_connected();
    let root_two_multiplicity = roots::multiplicity_at(&f, &rational(2, 1));
    let (sign_one_two_ok, simple_root_at_two, no_roots_above_two) = if three_connected_cubic {
        let empty_interval =
            roots::real_root_count_distinct(&f, Some((rational(1, 1), rational(2, 1))))? == 0;
        let sign_mid = f.sign_at(&rational(3, 2)) * parity_sign(m - n) > 0;
        let above = roots::real_root_count_distinct(&f, Some((rational(2, 1), rational(127, 50))))?;
        (
            Some(empty_interval && sign_mid),
            Some(root_two_multiplicity == 1),
            Some(above == 0),
        )
    } else {
        (None, None, None)
    };
    Ok(RootAudit {
        key_hex: canonical_key(g).to_hex(),
        n,
        m,
        blocks,
        sign_below_one_ok,
        root_one_multiplicity,
        root_one_matches_blocks: root_one_multiplicity == blocks,
        sign_shoulder_ok,
        near_cubic_scope,
        no_roots_one_two,
        three_connected_cubic,
        root_two_multiplicity,
        sign_one_two_ok,
        simple_root_at_two,
        no_roots_above_two,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub equality: usize,
    pub not_applicable: usize,
}

/// Aggregate outcome of one bound family over a graph collection.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub theorem: TheoremId,
    /// Sorted by canonical key.
    pub records: Vec<VerificationReport>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    /// One JSON record per graph plus a closing summary record.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_json().to_string());
            out.push('\n');
        }
        let s = serde_json::json!({
            "summary": {
                "theorem": self.theorem.number().to_string(),
                "total": self.summary.total.to_string(),
                "pass": self.summary.pass.to_string(),
                "fail": self.summary.fail.to_string(),
                "equality": self.summary.equality.to_string(),
                "not_applicable": self.summary.not_applicable.to_string(),
            }
        });
        out.push_str(&s.to_string());
        out.push('\n');
        out
    }
}

/// Applies one bound family to one graph, recording gate outcomes
/// (real-rootedness, simplicity, shape requirements) as not-applicable
/// rather than skipping them.
pub fn verify_one(g: &Multigraph, theorem: TheoremId, cache: &MemoCache) -> Result<VerificationReport> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let na = |bound: BoundSpec, why: &str| {
        Ok(VerificationReport::not_applicable(g, theorem, bound, why))
    };
    match theorem {
        TheoremId::T1 => compare(g, theorem, upper_bound_general(n, m)?, false, cache, None),
        TheoremId::T2 => compare(g, theorem, upper_bound_general_refined(n, m)?, false, cache, None),
        TheoremId::T3 => {
            if !g.is_cubic() {
                return na(BoundSpec::new(vec![]), "needs a cubic graph");
            }
            compare(g, theorem, upper_bound_cubic(n)?, false, cache, None)
        }
        TheoremId::T7 => {
            if !g.is_cubic() {
                return na(BoundSpec::new(vec![]), "needs a cubic graph");
            }
            compare(g, theorem, upper_bound_cubic_refined(n)?, false, cache, None)
        }
        TheoremId::T6 => {
            let Some(x) = g.near_cubic_center() else {
                return na(BoundSpec::new(vec![]), "needs a near-cubic graph");
            };
            let dx = g.degree(x).max(2);
            let (bound, clamped) = near_cubic_bound(n, dx, NearCubicVersion::Refined)?;
            let note = clamped.then(|| "small-case: exponent clamped, verified directly".to_string());
            compare(g, theorem, bound, false, cache, note)
        }
        TheoremId::T4 => {
            if !g.is_cubic() {
                return na(BoundSpec::new(vec![]), "needs a cubic graph");
            }
            if !g.is_connected() || !g.is_bridgeless() {
                return na(lower_bound_cubic(n)?, "needs a connected bridgeless graph");
            }
            if !is_real_rooted_flow_cached(g, cache)? {
                return na(lower_bound_cubic(n)?, "not real-rooted");
            }
            compare(g, theorem, lower_bound_cubic(n)?, true, cache, None)
        }
        TheoremId::T5 => {
            if !g.is_cubic() {
                return na(BoundSpec::new(vec![]), "needs a cubic graph");
            }
            if !g.is_simple() {
                return na(BoundSpec::new(vec![]), "needs a simple graph");
            }
            if !g.is_connected() || !g.is_bridgeless() {
                return na(lower_bound_cubic_simple(n)?, "needs a connected bridgeless graph");
            }
            if !is_real_rooted_flow_cached(g, cache)? {
                return na(lower_bound_cubic_simple(n)?, "not real-rooted");
            }
            compare(g, theorem, lower_bound_cubic_simple(n)?, true, cache, None)
        }
    }
}

/// Verifies one bound family over every graph, fanning out across
/// `jobs` workers. Records come back sorted by canonical key, so the
/// report bytes are independent of the parallelism degree.
pub fn sweep(theorem: TheoremId, graphs: &[Multigraph], jobs: usize) -> Result<SweepReport> {
    sweep_with_cache(theorem, graphs, jobs, &MemoCache::new())
}

/// [`sweep`] with an externally owned memo cache (reused across runs).
pub fn sweep_with_cache(
    theorem: TheoremId,
    graphs: &[Multigraph],
    jobs: usize,
    cache: &MemoCache,
) -> Result<SweepReport> {
    let jobs = jobs.max(1);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, Result<VerificationReport>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(graphs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= graphs.len() {
                    break;
                }
                let r = verify_one(&graphs[i], theorem, cache);
                results.lock().unwrap().push((i, r));
            });
        }
    });
    let mut collected = results.into_inner().unwrap();
    collected.sort_by_key(|(i, _)| *i);
    let mut records = Vec::with_capacity(collected.len());
    for (_, r) in collected {
        records.push(r?);
    }
    records.sort_by(|a, b| a.key_hex.cmp(&b.key_hex));
    let mut summary = SweepSummary {
        total: records.len(),
        ..Default::default()
    };
    for r in &records {
        match r.verdict {
            Verdict::Pass => {
                summary.pass += 1;
                if r.equality {
                    summary.equality += 1;
                }
            }
            Verdict::Fail => summary.fail += 1,
            Verdict::NotApplicable => summary.not_applicable += 1,
        }
    }
    Ok(SweepReport {
        theorem,
        records,
        summary,
    })
}

/// Audits every graph in the collection, sorted by canonical key.
pub fn audit_sweep(graphs: &[Multigraph]) -> Result<Vec<RootAudit>> {
    let cache = MemoCache::new();
    let mut out = Vec::with_capacity(graphs.len());
    for g in graphs {
        out.push(root_location_audit_cached(g, &cache)?);
    }
    out.sort_by(|a, b| a.key_hex.cmp(&b.key_hex));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::flow::two_edge_cut_decomposition;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn general_bound_cases() {
        assert_eq!(
            upper_bound_general(4, 6).unwrap().expand(),
            p(&[6, 11, 6, 1]) // (t+1)(t+2)(t+3)
        );
        assert_eq!(upper_bound_general(5, 5).unwrap().expand(), p(&[1, 1]));
        let b = upper_bound_general(4, 8).unwrap();
        assert_eq!(b.factors, vec![(1, 1), (2, 1), (3, 1), (4, 2)]);
        assert!(upper_bound_general(5, 4).is_err());
    }

    #[test]
    fn refined_bound_cases() {
        assert_eq!(
            upper_bound_general_refined(6, 9).unwrap().expand(),
            staircase(4).expand()
        );
        assert_eq!(
            upper_bound_general_refined(6, 10).unwrap().factors,
            vec![(1, 1), (2, 1), (3, 2), (4, 1)]
        );
        assert_eq!(
            upper_bound_general_refined(4, 6).unwrap().expand(),
            p(&[6, 11, 6, 1])
        );
    }

    #[test]
    fn refined_never_exceeds_general() {
        for d in 0..=10 {
            let n = 20;
            let general = upper_bound_general(n, n + d).unwrap().expand();
            let refined = upper_bound_general_refined(n, n + d).unwrap().expand();
            assert!(refined.leq_c(&general), "difference at m-n = {d}");
        }
    }

    #[test]
    fn cubic_bounds() {
        assert_eq!(upper_bound_cubic(2).unwrap().expand(), p(&[2, 3, 1]));
        assert_eq!(
            upper_bound_cubic_refined(6).unwrap().expand(),
            staircase(4).expand()
        );
        assert_eq!(
            upper_bound_cubic_refined(8).unwrap().factors,
            vec![(1, 1), (2, 1), (3, 2), (4, 1)]
        );
        assert!(upper_bound_cubic(7).is_err());
    }

    #[test]
    fn near_cubic_bounds() {
        let (refined, clamped) = near_cubic_bound(5, 3, NearCubicVersion::Refined).unwrap();
        assert!(!clamped);
        assert_eq!(refined.factors, vec![(2, 1), (3, 1), (1, 1), (4, 1)]);
        let (orig, _) = near_cubic_bound(5, 3, NearCubicVersion::Original).unwrap();
        assert_eq!(orig.factors, vec![(2, 1), (1, 1), (4, 2)]);
        let (small, clamped) = near_cubic_bound(1, 2, NearCubicVersion::Refined).unwrap();
        assert!(clamped);
        assert_eq!(small.factors, vec![(2, 1), (3, 1), (1, 0), (4, 0)]);
    }

    #[test]
    fn refined_near_cubic_below_original() {
        for n in 5..=12 {
            for dx in 2..=6 {
                let (r, _) = near_cubic_bound(n, dx, NearCubicVersion::Refined).unwrap();
                let (o, _) = near_cubic_bound(n, dx, NearCubicVersion::Original).unwrap();
                assert!(r.expand().leq_c(&o.expand()), "n = {n}, dx = {dx}");
            }
        }
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound_cubic(2).unwrap().expand(), p(&[2, 3, 1]));
        assert_eq!(
            lower_bound_cubic(6).unwrap().factors,
            vec![(1, 1), (2, 3)]
        );
        assert_eq!(
            lower_bound_cubic_simple(8).unwrap().factors,
            vec![(1, 1), (2, 2), (3, 2)]
        );
        assert!(lower_bound_cubic(5).is_err());
        assert!(lower_bound_cubic_simple(6).is_err());
    }

    #[test]
    fn k4_attains_refined_upper_bound() {
        let g = families::make_k4();
        let r = verify_upper(&g, upper_bound_general_refined(4, 6).unwrap(), TheoremId::T2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.equality);
    }

    #[test]
    fn necklace_attains_cubic_lower_bound() {
        let g = families::make_z3_necklace(6).unwrap();
        let r = verify_lower(&g, lower_bound_cubic(6).unwrap(), TheoremId::T4).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.equality);
    }

    #[test]
    fn gstar_attains_simple_lower_bound() {
        let g = families::make_gstar(8).unwrap();
        let r = verify_lower(&g, lower_bound_cubic_simple(8).unwrap(), TheoremId::T5).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.equality);
    }

    #[test]
    fn bridge_graph_not_applicable() {
        let bridged = Multigraph::from_classes(2, &[(0, 1, 1), (0, 0, 1), (1, 1, 1)]).unwrap();
        let r = verify_upper(&bridged, upper_bound_general(2, 3).unwrap(), TheoremId::T1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn real_rootedness_detection() {
        assert!(is_real_rooted_flow(&families::make_k4()).unwrap());
        for n in [2, 4, 6, 8] {
            assert!(is_real_rooted_flow(&families::make_z3_necklace(n).unwrap()).unwrap());
        }
        // the 6-vertex bipartite cubic graph has a complex quadratic factor
        let k33 = Multigraph::from_classes(
            6,
            &[(0, 3, 1), (0, 4, 1), (0, 5, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 3, 1), (2, 4, 1), (2, 5, 1)],
        )
        .unwrap();
        assert!(!is_real_rooted_flow(&k33).unwrap());
    }

    #[test]
    fn audit_k4() {
        let a = root_location_audit(&families::make_k4()).unwrap();
        assert!(a.passes());
        assert_eq!(a.blocks, 1);
        assert_eq!(a.root_one_multiplicity, 1);
        assert!(a.three_connected_cubic);
        assert_eq!(a.root_two_multiplicity, 1);
        assert_eq!(a.no_roots_above_two, Some(true));
    }

    #[test]
    fn audit_l4_records_double_root_at_two() {
        let a = root_location_audit(&families::make_l4()).unwrap();
        assert!(a.passes());
        assert!(!a.three_connected_cubic);
        assert_eq!(a.root_two_multiplicity, 2);
        assert_eq!(a.simple_root_at_two, None);
    }

    #[test]
    fn audit_blocks_with_loops() {
        // looped near-cubic fixtures: every loop adds a block and a root at 1
        for k in 1..=3 {
            let a = root_location_audit(&families::make_k4_loops(k)).unwrap();
            assert_eq!(a.blocks, 1 + k);
            assert_eq!(a.root_one_multiplicity, 1 + k);
            assert!(a.root_one_matches_blocks);
            assert!(a.passes());
        }
    }

    #[test]
    fn audit_shared_vertex_triangles() {
        let g = Multigraph::from_classes(
            5,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1), (0, 4, 1)],
        )
        .unwrap();
        let a = root_location_audit(&g).unwrap();
        assert_eq!(a.blocks, 2);
        assert_eq!(a.root_one_multiplicity, 2);
        assert!(a.passes());
    }

    #[test]
    fn sweep_refined_cubic_six() {
        let graphs = crate::enumerate::enumerate_cubic(
            &crate::enumerate::EnumSpec::new(6).bridgeless(),
        )
        .unwrap();
        let report = sweep(TheoremId::T7, &graphs, 2).unwrap();
        assert_eq!(report.summary.total, 5);
        assert_eq!(report.summary.pass, 5);
        assert_eq!(report.summary.fail, 0);
    }

    #[test]
    fn sweep_is_deterministic_across_jobs() {
        let graphs = crate::enumerate::enumerate_cubic(
            &crate::enumerate::EnumSpec::new(6).bridgeless(),
        )
        .unwrap();
        let a = sweep(TheoremId::T4, &graphs, 1).unwrap().to_jsonl();
        let b = sweep(TheoremId::T4, &graphs, 4).unwrap().to_jsonl();
        assert_eq!(a, b);
    }

    #[test]
    fn eq8_identity_on_necklaces() {
        for n in [4usize, 6, 8] {
            let g = families::make_z3_necklace(n).unwrap();
            let d = two_edge_cut_decomposition(&g).unwrap();
            let f = crate::flow::flow(&g, Method::Auto).unwrap().poly;
            let lhs = f.mul(&p(&[-1, 1]).pow(d.splits));
            let mut rhs = IntPoly::one();
            for piece in &d.pieces {
                rhs = rhs.mul(&crate::flow::flow(piece, Method::Auto).unwrap().poly);
            }
            assert_eq!(lhs, rhs, "piece-product identity at n = {n}");
        }
    }
}
