//! Canonical forms for multigraph isomorphism.
//!
//! The canonical key is the lexicographically smallest byte certificate
//! over all vertex labelings reachable by iterated color refinement and
//! individualization. Multiplicities and loop counts are folded into the
//! vertex colors, so parallel edges and loops are respected. Two
//! multigraphs have equal keys exactly when they are isomorphic.
//!
//! Intended for desk scale (n up to ~16); there is no sparse machinery
//! and no orbit pruning.

use crate::multigraph::Multigraph;

/// Byte certificate identifying an isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalKey> {
        if s.len() % 2 != 0 {
            return None;
        }
        let mut out = Vec::with_capacity(s.len() / 2);
        for i in (0..s.len()).step_by(2) {
            out.push(u8::from_str_radix(&s[i..i + 2], 16).ok()?);
        }
        Some(CanonicalKey(out))
    }
}

const MARK: usize = usize::MAX;

/// One round of color refinement; returns the stabilized coloring.
fn refine(g: &Multigraph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, mult)
    for (u, v, k) in g.parallel_classes() {
        incident[u].push((v, k));
        incident[v].push((u, k));
    }
    loop {
        let mut sigs: Vec<(usize, Vec<(usize, usize)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<(usize, usize)> = incident[v]
                .iter()
                .map(|&(u, k)| (colors[u], k))
                .collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut next = vec![0usize; n];
        let mut current = 0;
        for w in 1..n {
            if sigs[order[w]] != sigs[order[w - 1]] {
                current += 1;
            }
            next[order[w]] = current;
        }
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

/// Certificate bytes for a discrete coloring (labels = colors).
fn certificate(g: &Multigraph, labels: &[usize]) -> Vec<u8> {
    let n = g.vertex_count();
    debug_assert!(n < 256, "canonical keys support fewer than 256 vertices");
    let mut at = vec![0usize; n];
    for (v, &l) in labels.iter().enumerate() {
        at[l] = v;
    }
    let mut out = Vec::with_capacity(1 + n + n * (n - 1) / 2);
    out.push(n as u8);
    for i in 0..n {
        let k = g.loop_count(at[i]);
        debug_assert!(k < 256);
        out.push(k as u8);
    }
    for i in 0..n {
        for j in i + 1..n {
            let k = g.multiplicity(at[i], at[j]);
            debug_assert!(k < 256);
            out.push(k as u8);
        }
    }
    out
}

fn search(g: &Multigraph, colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let colors = refine(g, colors);
    let n = g.vertex_count();
    let mut cell_size = vec![0usize; n];
    for &c in &colors {
        cell_size[c] += 1;
    }
    if cell_size.iter().all(|&s| s <= 1) {
        let cert = certificate(g, &colors);
        if best.as_ref().map_or(true, |b| cert < *b) {
            *best = Some(cert);
        }
        return;
    }
    let target = (0..n).find(|&c| cell_size[c] > 1).unwrap();
    for v in 0..n {
        if colors[v] == target {
            let mut branched = colors.clone();
            branched[v] = MARK;
            search(g, branched, best);
        }
    }
}

fn initial_colors(g: &Multigraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut inv: Vec<(usize, usize, Vec<usize>)> = Vec::with_capacity(n);
    for v in 0..n {
        let mut mults: Vec<usize> = g
            .parallel_classes()
            .filter(|&(a, b, _)| a == v || b == v)
            .map(|(_, _, k)| k)
            .collect();
        mults.sort_unstable();
        inv.push((g.degree(v), g.loop_count(v), mults));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut colors = vec![0usize; n];
    let mut current = 0;
    for w in 1..n {
        if inv[order[w]] != inv[order[w - 1]] {
            current += 1;
        }
        colors[order[w]] = current;
    }
    colors
}

/// The canonical key of a multigraph's isomorphism class.
pub fn canonical_key(g: &Multigraph) -> CanonicalKey {
    let mut best = None;
    search(g, initial_colors(g), &mut best);
    CanonicalKey(best.expect("at least one labeling"))
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_key(a) == canonical_key(b)
}

/// Rebuilds a representative multigraph from a key (inverse of the
/// certificate encoding).
pub fn graph_from_key(key: &CanonicalKey) -> Option<Multigraph> {
    let bytes = key.as_bytes();
    let n = *bytes.first()? as usize;
    if n == 0 || bytes.len() != 1 + n + n * (n - 1) / 2 {
        return None;
    }
    let mut classes = Vec::new();
    for v in 0..n {
        let k = bytes[1 + v] as usize;
        if k > 0 {
            classes.push((v, v, k));
        }
    }
    let mut pos = 1 + n;
    for i in 0..n {
        for j in i + 1..n {
            let k = bytes[pos] as usize;
            pos += 1;
            if k > 0 {
                classes.push((i, j, k));
            }
        }
    }
    Multigraph::from_classes(n, &classes).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::multigraph::Multigraph;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn permuted(g: &Multigraph, perm: &[usize]) -> Multigraph {
        let mut classes = Vec::new();
        for (u, v, k) in g.parallel_classes() {
            classes.push((perm[u], perm[v], k));
        }
        for v in 0..g.vertex_count() {
            if g.loop_count(v) > 0 {
                classes.push((perm[v], perm[v], g.loop_count(v)));
            }
        }
        Multigraph::from_classes(g.vertex_count(), &classes).unwrap()
    }

    #[test]
    fn key_invariant_under_relabeling() {
        let g = families::make_k4();
        let key = canonical_key(&g);
        for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [1, 2, 3, 0]] {
            assert_eq!(canonical_key(&permuted(&g, &perm)), key);
        }
    }

    #[test]
    fn distinct_structures_get_distinct_keys() {
        assert_ne!(
            canonical_key(&families::make_k4()),
            canonical_key(&families::make_l4())
        );
    }

    #[test]
    fn four_vertex_cubic_classes() {
        // all relabelings of the two cubic graphs on 4 vertices fall
        // into exactly two classes
        let base = [families::make_k4(), families::make_l4()];
        let mut keys = std::collections::BTreeSet::new();
        let perms = [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 0, 3, 1],
            [3, 1, 0, 2],
            [0, 2, 1, 3],
            [3, 2, 1, 0],
        ];
        for g in &base {
            for p in &perms {
                keys.insert(canonical_key(&permuted(g, p)));
            }
        }
        assert_eq!(keys.len(), 2);
    }

    #[test]
    fn random_permutations_preserve_keys() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let graphs = vec![
            families::make_z3(),
            families::make_l4(),
            families::make_z3_necklace(8).unwrap(),
            families::make_gstar(8).unwrap(),
            Multigraph::from_classes(5, &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (3, 4, 1), (0, 4, 1), (2, 2, 1)])
                .unwrap(),
        ];
        for g in graphs {
            let key = canonical_key(&g);
            let n = g.vertex_count();
            for _ in 0..50 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_key(&permuted(&g, &perm)), key);
            }
        }
    }

    #[test]
    fn key_round_trips_through_hex_and_rebuild() {
        let g = families::make_gstar(10).unwrap();
        let key = canonical_key(&g);
        assert_eq!(CanonicalKey::from_hex(&key.to_hex()), Some(key.clone()));
        let rebuilt = graph_from_key(&key).unwrap();
        assert!(is_isomorphic(&g, &rebuilt));
        assert_eq!(canonical_key(&rebuilt), key);
    }

    #[test]
    fn loops_distinguish_classes() {
        let a = Multigraph::from_classes(2, &[(0, 1, 1), (0, 0, 1), (1, 1, 1)]).unwrap();
        let b = Multigraph::from_classes(2, &[(0, 1, 1), (0, 0, 2)]).unwrap();
        assert_ne!(canonical_key(&a), canonical_key(&b));
    }
}
