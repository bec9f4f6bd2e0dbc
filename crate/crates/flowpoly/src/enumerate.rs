//! Isomorph-free generation of connected cubic multigraphs on a given
//! even number of vertices.
//!
//! Generation grows the class list two vertices at a time: every
//! connected cubic multigraph on n >= 4 vertices arises from one on
//! n - 2 vertices either by subdividing two edge copies and joining the
//! new vertices, or by subdividing one copy and attaching a new vertex
//! that carries a loop. Candidates are deduplicated by canonical key at
//! every level, so each isomorphism class is kept exactly once. Filters
//! (simplicity, bridgelessness, minimum edge connectivity) apply to the
//! final level only; intermediate levels always carry the full
//! multigraph universe, which the growth step needs for completeness.

use std::collections::BTreeMap;

use crate::canon::canonical_key;
use crate::multigraph::{EdgeRef, Multigraph};
use crate::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 14;

/// What to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    /// Even vertex count, 2..=14.
    pub n: usize,
    /// Allow parallel edges and loops; `false` keeps simple graphs only.
    pub allow_multiedges: bool,
    /// Keep bridgeless graphs only.
    pub require_bridgeless: bool,
    /// Minimum edge connectivity: 1, 2 or 3. Values 2 and up imply
    /// bridgelessness.
    pub min_edge_connectivity: usize,
}

impl EnumSpec {
    pub fn new(n: usize) -> Self {
        EnumSpec {
            n,
            allow_multiedges: true,
            require_bridgeless: false,
            min_edge_connectivity: 1,
        }
    }

    pub fn simple(mut self) -> Self {
        self.allow_multiedges = false;
        self
    }

    pub fn bridgeless(mut self) -> Self {
        self.require_bridgeless = true;
        self
    }

    pub fn min_connectivity(mut self, k: usize) -> Self {
        self.min_edge_connectivity = k;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 || self.n % 2 != 0 {
            return Err(Error::Domain(format!(
                "cubic graphs need an even vertex count >= 2, got {}",
                self.n
            )));
        }
        if self.n > MAX_VERTICES {
            return Err(Error::EnumerationLimit {
                n: self.n,
                limit: MAX_VERTICES,
            });
        }
        if !(1..=3).contains(&self.min_edge_connectivity) {
            return Err(Error::Domain(format!(
                "minimum edge connectivity must be 1, 2 or 3, got {}",
                self.min_edge_connectivity
            )));
        }
        Ok(())
    }

    fn accepts(&self, g: &Multigraph) -> bool {
        if !self.allow_multiedges && !g.is_simple() {
            return false;
        }
        let need_bridgeless = self.require_bridgeless || self.min_edge_connectivity >= 2;
        if need_bridgeless && !g.is_bridgeless() {
            return false;
        }
        if self.min_edge_connectivity == 3 && g.edge_connectivity_capped() < 3 {
            return false;
        }
        true
    }
}

/// The two connected cubic multigraphs on 2 vertices: the theta graph
/// and the dumbbell (an edge with a loop at each end).
fn base_level() -> Vec<Multigraph> {
    vec![
        Multigraph::from_classes(2, &[(0, 1, 3)]).unwrap(),
        Multigraph::from_classes(2, &[(0, 1, 1), (0, 0, 1), (1, 1, 1)]).unwrap(),
    ]
}

fn all_copies(g: &Multigraph) -> Vec<EdgeRef> {
    let mut copies = g.edge_copies();
    for v in 0..g.vertex_count() {
        for i in 0..g.loop_count(v) {
            copies.push(EdgeRef { u: v, v, index: i });
        }
    }
    copies
}

/// Every connected cubic multigraph on |V(g)| + 2 vertices reachable by
/// one growth step from `g`.
fn candidates_from(g: &Multigraph, out: &mut Vec<Multigraph>) {
    let x = g.vertex_count();
    for ea in all_copies(g) {
        let h1 = g.subdivide(&ea).unwrap();
        // two subdivisions joined by a fresh edge; the second copy may be
        // one of the halves just created, which plants a digon inside ea
        let y = h1.vertex_count();
        for eb in all_copies(&h1) {
            let h2 = h1.subdivide(&eb).unwrap();
            out.push(h2.with_edge(x, y).unwrap());
        }
        // pendant loop vertex attached to the subdivision point
        let (h2, lv) = h1.with_vertex(1);
        out.push(h2.with_edge(x, lv).unwrap());
    }
}

/// Grows the full universe of connected cubic multigraph classes level
/// by level up to `n` vertices, applying `spec` filters at the last
/// level, and returns the class representatives sorted by canonical key.
fn grow(spec: &EnumSpec) -> Vec<Multigraph> {
    let mut level: BTreeMap<_, _> = base_level()
        .into_iter()
        .map(|g| (canonical_key(&g), g))
        .collect();
    let mut size = 2;
    while size < spec.n {
        let mut next = BTreeMap::new();
        let last = size + 2 == spec.n;
        let mut buf = Vec::new();
        for g in level.values() {
            buf.clear();
            candidates_from(g, &mut buf);
            for cand in buf.drain(..) {
                debug_assert!(cand.is_cubic() && cand.is_connected());
                if last && !spec.accepts(&cand) {
                    continue;
                }
                let key = canonical_key(&cand);
                next.entry(key).or_insert(cand);
            }
        }
        level = next;
        size += 2;
    }
    if spec.n == 2 {
        level.retain(|_, g| spec.accepts(g));
    }
    level.into_values().collect()
}

/// Enumerates one canonical representative per isomorphism class of
/// connected cubic multigraphs satisfying the spec, in canonical-key
/// order.
pub fn enumerate_cubic(spec: &EnumSpec) -> Result<Vec<Multigraph>> {
    spec.validate()?;
    Ok(grow(spec))
}

/// Number of classes the spec matches.
pub fn count_cubic(spec: &EnumSpec) -> Result<usize> {
    Ok(enumerate_cubic(spec)?.len())
}
