//! Immutable labeled multigraph with parallel-edge multiplicities and
//! per-vertex loop counts, plus the local operations (delete, contract,
//! desubdivide) and structure queries (components, bridges, blocks,
//! small edge cuts, degrees) the flow engines are built on.
//!
//! All operations are pure: they return new graphs and never mutate the
//! receiver, so values can be shared freely across threads.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// Addresses one edge copy: the unordered endpoint pair plus the copy's
/// index inside its parallel class. Loops use `u == v` and index below
/// the loop count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
    pub index: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize, index: usize) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        EdgeRef { u, v, index }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A small edge cut: a set of edge copies whose removal disconnects the
/// graph, minimal under inclusion of parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSet {
    pub edges: Vec<EdgeRef>,
}

impl CutSet {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// The distinct parallel classes the cut uses.
    pub fn classes(&self) -> Vec<(usize, usize)> {
        let mut cs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        cs.dedup();
        cs
    }
}

/// Labeled multigraph: `n` vertices, non-loop parallel classes keyed by
/// the sorted endpoint pair, and a loop count per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    classes: BTreeMap<(usize, usize), usize>,
    loops: Vec<usize>,
}

impl Multigraph {
    /// An edgeless graph on `n` vertices; `n` must be positive.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "vertex count must be positive");
        Multigraph {
            n,
            classes: BTreeMap::new(),
            loops: vec![0; n],
        }
    }

    /// Builds from parallel-class triples `(u, v, multiplicity)`; a
    /// triple with `u == v` adds that many loops.
    pub fn from_classes(n: usize, classes: &[(usize, usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v, k) in classes {
            g.add_class(u, v, k)?;
        }
        Ok(g)
    }

    fn add_class(&mut self, u: usize, v: usize, k: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!(
                "vertex {} out of range (n = {})",
                u.max(v),
                self.n
            )));
        }
        if k == 0 {
            return Ok(());
        }
        if u == v {
            self.loops[u] += k;
        } else {
            let key = (u.min(v), u.max(v));
            *self.classes.entry(key).or_insert(0) += k;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total edge count m: all parallel copies plus all loops.
    pub fn edge_count(&self) -> usize {
        self.classes.values().sum::<usize>() + self.loops.iter().sum::<usize>()
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.loops[v]
    }

    pub fn total_loops(&self) -> usize {
        self.loops.iter().sum()
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&k| k > 0)
    }

    /// Multiplicity of the non-loop class {u, v} (0 when absent).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        *self.classes.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    /// Non-loop parallel classes as `(u, v, multiplicity)`, sorted.
    pub fn parallel_classes(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.classes.iter().map(|(&(u, v), &k)| (u, v, k))
    }

    /// Every non-loop edge copy as an [`EdgeRef`].
    pub fn edge_copies(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, v, k) in self.parallel_classes() {
            for i in 0..k {
                out.push(EdgeRef { u, v, index: i });
            }
        }
        out
    }

    /// True when the graph is simple: no loops, no multiplicities above 1.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && self.classes.values().all(|&k| k == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        let adjacent: usize = self
            .classes
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &k)| k)
            .sum();
        adjacent + 2 * self.loops[v]
    }

    pub fn degree_profile(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// The unique vertex all of whose peers have degree exactly 3, when
    /// one exists. A cubic graph returns vertex 0.
    pub fn near_cubic_center(&self) -> Option<usize> {
        let off: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) != 3).collect();
        match off.len() {
            0 => Some(0),
            1 => Some(off[0]),
            _ => None,
        }
    }

    fn check_edge(&self, e: &EdgeRef) -> Result<()> {
        let present = if e.is_loop() {
            e.u < self.n && e.index < self.loops[e.u]
        } else {
            e.u < self.n && e.v < self.n && e.index < self.multiplicity(e.u, e.v)
        };
        if present {
            Ok(())
        } else {
            Err(Error::InvalidEdge(format!("{e:?} not present")))
        }
    }

    /// Returns the graph with one copy of `e` removed.
    pub fn delete_edge(&self, e: &EdgeRef) -> Result<Multigraph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        if e.is_loop() {
            g.loops[e.u] -= 1;
        } else {
            let key = (e.u, e.v);
            let k = g.classes.get_mut(&key).unwrap();
            *k -= 1;
            if *k == 0 {
                g.classes.remove(&key);
            }
        }
        Ok(g)
    }

    /// Contracts one copy of the non-loop edge `e`: its endpoints merge,
    /// the contracted copy disappears, the remaining parallel copies of
    /// the class become loops on the merged vertex.
    pub fn contract_edge(&self, e: &EdgeRef) -> Result<Multigraph> {
        if e.is_loop() {
            return Err(Error::InvalidOperation(
                "cannot contract a loop; remove it with the loop rule".into(),
            ));
        }
        self.check_edge(e)?;
        let (keep, gone) = (e.u, e.v); // u < v, keep the smaller label
        let relabel = |x: usize| -> usize {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Multigraph::new(self.n - 1);
        for (u, v, k) in self.parallel_classes() {
            let (mut k, u2, v2) = (k, relabel(u), relabel(v));
            if (u, v) == (keep, gone) {
                k -= 1; // the contracted copy disappears
            }
            if k > 0 {
                g.add_class(u2, v2, k).unwrap();
            }
        }
        for v in 0..self.n {
            if self.loops[v] > 0 {
                g.loops[relabel(v)] += self.loops[v];
            }
        }
        Ok(g)
    }

    /// The two edge ends at a degree-2, loop-free vertex.
    fn degree_two_ends(&self, u: usize) -> Option<(usize, usize)> {
        if u >= self.n || self.loops[u] != 0 || self.degree(u) != 2 {
            return None;
        }
        let mut ends = Vec::with_capacity(2);
        for (a, b, k) in self.parallel_classes() {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            for _ in 0..k {
                ends.push(other);
            }
        }
        debug_assert_eq!(ends.len(), 2);
        Some((ends[0], ends[1]))
    }

    /// Removes the degree-2 vertex `u` and joins its two edge ends with
    /// a new edge (a loop when the ends coincide).
    pub fn desubdivide(&self, u: usize) -> Result<Multigraph> {
        let (w1, w2) = self.degree_two_ends(u).ok_or_else(|| {
            Error::InvalidOperation(format!(
                "desubdivision needs a loop-free degree-2 vertex, got vertex {u}"
            ))
        })?;
        let relabel = |x: usize| if x > u { x - 1 } else { x };
        let mut g = Multigraph::new(self.n - 1);
        for (a, b, k) in self.parallel_classes() {
            if a == u || b == u {
                continue;
            }
            g.add_class(relabel(a), relabel(b), k).unwrap();
        }
        for v in 0..self.n {
            if v != u && self.loops[v] > 0 {
                g.loops[relabel(v)] += self.loops[v];
            }
        }
        g.add_class(relabel(w1), relabel(w2), 1).unwrap();
        Ok(g)
    }

    /// Splits one edge copy with a fresh vertex (the new vertex gets
    /// label n). Subdividing a loop at v yields a digon to v.
    pub fn subdivide(&self, e: &EdgeRef) -> Result<Multigraph> {
        self.check_edge(e)?;
        let mut g = self.delete_edge(e)?;
        g.n += 1;
        g.loops.push(0);
        let w = g.n - 1;
        g.add_class(e.u, w, 1).unwrap();
        g.add_class(e.v, w, 1).unwrap();
        Ok(g)
    }

    /// Adds one copy of an edge (or a loop when `u == v`).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Multigraph> {
        let mut g = self.clone();
        g.add_class(u, v, 1)?;
        Ok(g)
    }

    /// Adds a fresh vertex carrying `loops` loops, returning (graph, label).
    pub fn with_vertex(&self, loops: usize) -> (Multigraph, usize) {
        let mut g = self.clone();
        g.n += 1;
        g.loops.push(loops);
        let label = g.n - 1;
        (g, label)
    }

    /// Connected-component partition (loops are irrelevant).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for (u, v, _) in self.parallel_classes() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(x) = stack.pop() {
                members.push(x);
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The induced subgraph on `verts` (loops kept), with vertices
    /// relabeled in ascending order of their old labels.
    pub fn induced(&self, verts: &[usize]) -> Multigraph {
        let mut sorted = verts.to_vec();
        sorted.sort_unstable();
        let index = |x: usize| sorted.binary_search(&x).ok();
        let mut g = Multigraph::new(sorted.len());
        for (u, v, k) in self.parallel_classes() {
            if let (Some(a), Some(b)) = (index(u), index(v)) {
                g.add_class(a, b, k).unwrap();
            }
        }
        for (new, &old) in sorted.iter().enumerate() {
            g.loops[new] = self.loops[old];
        }
        g
    }

    /// Parallel classes that are bridges. Only multiplicity-1 classes
    /// qualify; parallel pairs and loops are never bridges.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        // low-link over edge copies; a second parallel copy acts as a
        // back edge and protects its class
        let copies = self.edge_copies();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n]; // (neighbor, copy id)
        for (id, e) in copies.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut timer = 0;
        let mut out = Vec::new();
        let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (vertex, via copy, next adj index)
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (x, via, ref mut next)) = stack.last_mut() {
                if *next < adj[x].len() {
                    let (y, id) = adj[x][*next];
                    *next += 1;
                    if id == via {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        disc[y] = timer;
                        low[y] = timer;
                        timer += 1;
                        stack.push((y, id, 0));
                    } else if disc[y] < low[x] {
                        low[x] = disc[y];
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (parent, _, _)) = stack.last_mut() {
                        if low[x] < low[parent] {
                            low[parent] = low[x];
                        }
                        if low[x] > disc[parent] {
                            let e = &copies[via];
                            out.push((e.u, e.v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Number of blocks of a connected graph. Every loop is a block of
    /// its own; parallel classes share blocks through their copies.
    pub fn blocks(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Domain("block count needs a connected graph".into()));
        }
        let copies = self.edge_copies();
        if copies.is_empty() {
            return Ok(self.total_loops());
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (id, e) in copies.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks = 0;
        let mut seen_edge = vec![false; copies.len()];
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        disc[0] = 0;
        low[0] = 0;
        let mut timer = 1;
        stack.push((0, usize::MAX, 0));
        while let Some(&mut (x, via, ref mut next)) = stack.last_mut() {
            if *next < adj[x].len() {
                let (y, id) = adj[x][*next];
                *next += 1;
                if id == via || seen_edge[id] {
                    continue;
                }
                seen_edge[id] = true;
                edge_stack.push(id);
                if disc[y] == usize::MAX {
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    stack.push((y, id, 0));
                } else if disc[y] < low[x] {
                    low[x] = disc[y];
                }
            } else {
                stack.pop();
                if let Some(&mut (parent, _, _)) = stack.last_mut() {
                    if low[x] < low[parent] {
                        low[parent] = low[x];
                    }
                    if low[x] >= disc[parent] {
                        // pop one biconnected component
                        blocks += 1;
                        while let Some(id) = edge_stack.pop() {
                            if id == via {
                                break;
                            }
                        }
                    }
                }
            }
        }
        Ok(blocks + self.total_loops())
    }

    /// All minimal edge cuts with at most `max_size` edge copies
    /// (`max_size` is 2 or 3). A cut always takes every copy of the
    /// classes it touches, so a multiplicity-2 class counts two edges.
    pub fn small_edge_cuts(&self, max_size: usize) -> Vec<CutSet> {
        assert!(max_size == 2 || max_size == 3, "cut size must be 2 or 3");
        let classes: Vec<(usize, usize, usize)> = self.parallel_classes().collect();
        let base_components = self.components().len();
        let disconnects = |chosen: &[usize]| -> bool {
            let mut g = self.clone();
            for &i in chosen {
                let (u, v, _) = classes[i];
                g.classes.remove(&(u, v));
            }
            g.components().len() > base_components
        };
        let mut cuts = Vec::new();
        let idx: Vec<usize> = (0..classes.len()).collect();
        let consider = |chosen: &[usize], cuts: &mut Vec<CutSet>| {
            let size: usize = chosen.iter().map(|&i| classes[i].2).sum();
            if size == 0 || size > max_size || !disconnects(chosen) {
                return;
            }
            // minimality: no proper subset of the chosen classes disconnects
            for skip in 0..chosen.len() {
                if chosen.len() > 1 {
                    let sub: Vec<usize> = chosen
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &i)| i)
                        .collect();
                    if disconnects(&sub) {
                        return;
                    }
                }
            }
            let mut edges = Vec::new();
            for &i in chosen {
                let (u, v, k) = classes[i];
                for c in 0..k {
                    edges.push(EdgeRef { u, v, index: c });
                }
            }
            cuts.push(CutSet { edges });
        };
        for a in 0..idx.len() {
            consider(&[a], &mut cuts);
            for b in a + 1..idx.len() {
                consider(&[a, b], &mut cuts);
                if max_size == 3 {
                    for c in b + 1..idx.len() {
                        consider(&[a, b, c], &mut cuts);
                    }
                }
            }
        }
        cuts
    }

    /// Vertex connectivity at least 3: needs more than 3 vertices and no
    /// separating vertex set of size at most 2.
    pub fn is_three_connected(&self) -> bool {
        if self.n <= 3 || !self.is_connected() {
            return false;
        }
        let survives = |removed: &[usize]| -> bool {
            let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
            self.induced(&keep).is_connected()
        };
        for a in 0..self.n {
            if !survives(&[a]) {
                return false;
            }
            for b in a + 1..self.n {
                if !survives(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest edge-cut size of a connected graph, capped at 4: returns
    /// 1, 2 or 3 when such a cut exists, otherwise 4.
    pub fn edge_connectivity_capped(&self) -> usize {
        if !self.bridges().is_empty() {
            return 1;
        }
        let cuts = self.small_edge_cuts(3);
        cuts.iter().map(|c| c.size()).min().unwrap_or(4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn z3() -> Multigraph {
        families::make_z3()
    }

    fn k4() -> Multigraph {
        families::make_k4()
    }

    fn l4() -> Multigraph {
        families::make_l4()
    }

    #[test]
    fn delete_edge_of_theta() {
        let g = z3().delete_edge(&EdgeRef::new(0, 1, 0)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn delete_loop() {
        let g = Multigraph::from_classes(2, &[(0, 1, 1), (0, 0, 2)]).unwrap();
        let h = g.delete_edge(&EdgeRef::new(0, 0, 0)).unwrap();
        assert_eq!(h.loop_count(0), 1);
        assert_eq!(h.multiplicity(0, 1), 1);
    }

    #[test]
    fn delete_edge_of_k4_degrees() {
        let g = k4().delete_edge(&EdgeRef::new(0, 1, 0)).unwrap();
        let mut degs = g.degree_profile();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3]);
    }

    #[test]
    fn delete_missing_edge_errors() {
        assert!(z3().delete_edge(&EdgeRef::new(0, 1, 3)).is_err());
        assert!(z3().delete_edge(&EdgeRef::new(0, 0, 0)).is_err());
    }

    #[test]
    fn contract_theta_gives_loops() {
        let g = z3().contract_edge(&EdgeRef::new(0, 1, 0)).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.loop_count(0), 2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn contract_k4_counts() {
        let g = k4().contract_edge(&EdgeRef::new(0, 1, 0)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 5);
        let mut mults: Vec<usize> = g.parallel_classes().map(|(_, _, k)| k).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 2, 2]);
        assert_eq!(g.total_loops(), 0);
    }

    #[test]
    fn contract_cycle_shrinks() {
        let c4 = families::make_cycle(4);
        let g = c4.contract_edge(&EdgeRef::new(0, 1, 0)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert_eq!(g.total_loops(), 0);
    }

    #[test]
    fn contract_loop_rejected() {
        let g = Multigraph::from_classes(1, &[(0, 0, 1)]).unwrap();
        assert!(g.contract_edge(&EdgeRef::new(0, 0, 0)).is_err());
    }

    #[test]
    fn desubdivide_inverts_subdivide() {
        let g = z3();
        let sub = g.subdivide(&EdgeRef::new(0, 1, 0)).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        let back = sub.desubdivide(2).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn desubdivide_triangle() {
        let c3 = families::make_cycle(3);
        let g = c3.desubdivide(2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(0, 1), 2);
    }

    #[test]
    fn desubdivide_coincident_ends_makes_loop() {
        // digon plus a pendant path folded back: vertex 1 joined twice to 0
        let g = Multigraph::from_classes(2, &[(0, 1, 2)]).unwrap();
        let h = g.desubdivide(1).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.loop_count(0), 1);
    }

    #[test]
    fn desubdivide_rejects_wrong_degree() {
        assert!(z3().desubdivide(0).is_err());
        let loopy = Multigraph::from_classes(2, &[(0, 0, 1), (0, 1, 2)]).unwrap();
        // vertex 0 has degree 4; vertex 1 has degree 2 and no loop
        assert!(loopy.desubdivide(0).is_err());
        assert!(loopy.desubdivide(1).is_ok());
    }

    #[test]
    fn components_counts() {
        assert_eq!(z3().components().len(), 1);
        assert_eq!(Multigraph::new(3).components().len(), 3);
        // theta plus disjoint K4
        let mut classes = vec![(0usize, 1usize, 3usize)];
        for (u, v, k) in k4().parallel_classes() {
            classes.push((u + 2, v + 2, k));
        }
        let g = Multigraph::from_classes(6, &classes).unwrap();
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn bridges_of_joined_triangles() {
        // two triangles joined by one edge
        let g = Multigraph::from_classes(
            6,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (0, 2, 1),
                (3, 4, 1),
                (4, 5, 1),
                (3, 5, 1),
                (2, 3, 1),
            ],
        )
        .unwrap();
        assert_eq!(g.bridges(), vec![(2, 3)]);
        assert!(!g.is_bridgeless());
    }

    #[test]
    fn no_bridges_in_k4_or_digon() {
        assert!(k4().is_bridgeless());
        let digon = Multigraph::from_classes(2, &[(0, 1, 2)]).unwrap();
        assert!(digon.is_bridgeless());
    }

    #[test]
    fn blocks_of_fixtures() {
        assert_eq!(k4().blocks().unwrap(), 1);
        assert_eq!(l4().blocks().unwrap(), 1);
        // two triangles sharing one vertex
        let g = Multigraph::from_classes(
            5,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1), (0, 4, 1)],
        )
        .unwrap();
        assert_eq!(g.blocks().unwrap(), 2);
    }

    #[test]
    fn loops_count_as_blocks() {
        // triangle with one loop: the loop is a block of its own
        let g =
            Multigraph::from_classes(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 0, 1)]).unwrap();
        assert_eq!(g.blocks().unwrap(), 2);
        let lonely = Multigraph::from_classes(1, &[(0, 0, 2)]).unwrap();
        assert_eq!(lonely.blocks().unwrap(), 2);
    }

    #[test]
    fn blocks_need_connectivity() {
        assert!(Multigraph::new(2).blocks().is_err());
    }

    /// Independent oracle: all subsets of edge copies up to a size,
    /// keeping the inclusion-minimal disconnecting ones.
    fn brute_force_cuts(g: &Multigraph, max_size: usize) -> Vec<Vec<EdgeRef>> {
        let copies = g.edge_copies();
        let base = g.components().len();
        let disconnects = |subset: &[usize]| -> bool {
            let mut h = g.clone();
            for &i in subset {
                // copies are interchangeable; earlier deletions shrink
                // the class, so always remove the first remaining copy
                let e = EdgeRef { index: 0, ..copies[i] };
                h = h.delete_edge(&e).unwrap();
            }
            h.components().len() > base
        };
        let mut found: Vec<Vec<usize>> = Vec::new();
        let m = copies.len();
        for mask in 1u32..(1 << m) {
            let subset: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            if subset.len() > max_size || !disconnects(&subset) {
                continue;
            }
            let minimal = (0..subset.len()).all(|skip| {
                let sub: Vec<usize> = subset
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &i)| i)
                    .collect();
                sub.is_empty() || !disconnects(&sub)
            });
            if minimal {
                found.push(subset);
            }
        }
        let mut cuts: Vec<Vec<EdgeRef>> = found
            .into_iter()
            .map(|s| s.into_iter().map(|i| copies[i]).collect())
            .collect();
        cuts.sort();
        cuts.dedup();
        cuts
    }

    fn normalize(cuts: &[CutSet]) -> Vec<Vec<EdgeRef>> {
        let mut out: Vec<Vec<EdgeRef>> = cuts
            .iter()
            .map(|c| {
                let mut e = c.edges.clone();
                e.sort();
                e
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn small_cuts_on_l4_match_brute_force() {
        let got = normalize(&l4().small_edge_cuts(2));
        let want = brute_force_cuts(&l4(), 2);
        assert_eq!(got, want);
        // exactly one 2-edge cut: the two single link edges
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].len(), 2);
    }

    #[test]
    fn small_cuts_on_k4_match_brute_force() {
        let got = normalize(&k4().small_edge_cuts(3));
        let want = brute_force_cuts(&k4(), 3);
        assert_eq!(got, want);
        // no 2-cuts; each vertex star is a 3-cut
        assert!(got.iter().all(|c| c.len() == 3));
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn small_cuts_on_theta() {
        let got = z3().small_edge_cuts(3);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].size(), 3);
        assert!(z3().small_edge_cuts(2).is_empty());
    }

    #[test]
    fn small_cuts_match_brute_force_on_varied_graphs() {
        let samples = vec![
            families::make_cycle(5),
            families::make_z3_necklace(6).unwrap(),
            families::make_gstar(8).unwrap(),
            Multigraph::from_classes(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 2), (0, 3, 1), (1, 3, 1)])
                .unwrap(),
        ];
        for g in samples {
            assert!(g.edge_count() <= 18);
            for max in [2, 3] {
                assert_eq!(
                    normalize(&g.small_edge_cuts(max)),
                    brute_force_cuts(&g, max),
                    "cut mismatch at max {max}"
                );
            }
        }
    }

    #[test]
    fn degree_queries() {
        assert!(k4().is_cubic());
        assert_eq!(k4().near_cubic_center(), Some(0));
        let near = Multigraph::from_classes(
            4,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1), (1, 1, 1)],
        )
        .unwrap();
        assert_eq!(near.near_cubic_center(), Some(1));
        assert_eq!(near.degree(1), 5);
        assert_eq!(families::make_cycle(4).near_cubic_center(), None);
    }

    #[test]
    fn three_connectivity() {
        assert!(k4().is_three_connected());
        assert!(!l4().is_three_connected());
        assert!(!z3().is_three_connected());
    }

    #[test]
    fn edge_connectivity_capped_values() {
        assert_eq!(k4().edge_connectivity_capped(), 3);
        assert_eq!(l4().edge_connectivity_capped(), 2);
        let bridged = Multigraph::from_classes(
            6,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1), (2, 3, 1)],
        )
        .unwrap();
        assert_eq!(bridged.edge_connectivity_capped(), 1);
    }
}
