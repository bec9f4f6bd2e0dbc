//! Deterministic constructors for the named witness graphs used across
//! the test suites and the bound sweeps. Vertex numbering is fixed so
//! canonical keys and reports are reproducible run to run.

use crate::multigraph::Multigraph;
use crate::{Error, Result};

/// Theta graph: two vertices joined by three parallel edges.
pub fn make_z3() -> Multigraph {
    Multigraph::from_classes(2, &[(0, 1, 3)]).unwrap()
}

/// Two vertices joined by `h` parallel edges, h in {2, 3}.
pub fn make_k2h(h: usize) -> Result<Multigraph> {
    if h != 2 && h != 3 {
        return Err(Error::Domain(format!("banana graph wants h in {{2,3}}, got {h}")));
    }
    Multigraph::from_classes(2, &[(0, 1, h)])
}

/// Complete graph on four vertices.
pub fn make_k4() -> Multigraph {
    Multigraph::from_classes(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])
        .unwrap()
}

/// The 4-cycle 0-1-2-3 with the two opposite edges (0,1) and (2,3)
/// doubled; cubic and bridgeless.
pub fn make_l4() -> Multigraph {
    Multigraph::from_classes(4, &[(0, 1, 2), (2, 3, 2), (1, 2, 1), (0, 3, 1)]).unwrap()
}

/// Cycle on n vertices; n = 1 is a single loop, n = 2 a digon.
pub fn make_cycle(n: usize) -> Multigraph {
    assert!(n >= 1);
    match n {
        1 => Multigraph::from_classes(1, &[(0, 0, 1)]).unwrap(),
        2 => Multigraph::from_classes(2, &[(0, 1, 2)]).unwrap(),
        _ => {
            let classes: Vec<(usize, usize, usize)> =
                (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
            Multigraph::from_classes(n, &classes).unwrap()
        }
    }
}

/// Cyclic chain of n/2 digon gadgets. Gadget i is the pair
/// {2i, 2i+1} joined by a double edge; single link edges 2i+1 -> 2i+2
/// close the ring. n = 2 degenerates to the theta graph.
///
/// Its flow polynomial is (t-1)(t-2)^(n/2) and its 2-edge-cut
/// decomposition yields n/2 theta pieces.
pub fn make_z3_necklace(n: usize) -> Result<Multigraph> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Domain(format!("necklace wants even n >= 2, got {n}")));
    }
    if n == 2 {
        return Ok(make_z3());
    }
    let gadgets = n / 2;
    let mut classes = Vec::new();
    for i in 0..gadgets {
        classes.push((2 * i, 2 * i + 1, 2));
        classes.push((2 * i + 1, (2 * i + 2) % n, 1));
    }
    Multigraph::from_classes(n, &classes)
}

/// Open-chain variant of the necklace: a ladder whose two end rungs are
/// doubled. Columns are {2i, 2i+1}; rails join consecutive columns.
///
/// Shares the necklace's flow polynomial (t-1)(t-2)^(n/2) while being
/// non-isomorphic to it for n >= 6.
pub fn make_z3_chain(n: usize) -> Result<Multigraph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Domain(format!("chain wants even n >= 4, got {n}")));
    }
    let cols = n / 2;
    let mut classes = Vec::new();
    for i in 0..cols {
        let mult = if i == 0 || i == cols - 1 { 2 } else { 1 };
        classes.push((2 * i, 2 * i + 1, mult));
    }
    for i in 0..cols - 1 {
        classes.push((2 * i, 2 * i + 2, 1));
        classes.push((2 * i + 1, 2 * i + 3, 1));
    }
    Multigraph::from_classes(n, &classes)
}

/// The extremal simple cubic graph on n >= 8 vertices: an open chain
/// whose ends are K4-minus-an-edge blocks and whose n/2 - 4 middle
/// links are single-rung ladder columns.
///
/// End block A sits on {0,1,2,3} missing the edge (0,1); its degree-2
/// vertices 0 and 1 are the attachment points. Middle column j sits on
/// {4+2j, 5+2j}. End block B mirrors A on the last four vertices.
/// The 2-edge-cut decomposition yields two K4 pieces plus n/2 - 4 theta
/// pieces, and the flow polynomial is (t-1)(t-2)^(n/2-2)(t-3)^2.
pub fn make_gstar(n: usize) -> Result<Multigraph> {
    if n < 8 || n % 2 != 0 {
        return Err(Error::Domain(format!("extremal chain wants even n >= 8, got {n}")));
    }
    let mut classes = Vec::new();
    // end block A: K4 minus (0,1)
    classes.extend_from_slice(&[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]);
    let middles = n / 2 - 4;
    // middle rungs
    for j in 0..middles {
        classes.push((4 + 2 * j, 5 + 2 * j, 1));
    }
    // end block B: K4 minus (b0, b1)
    let b = n - 4;
    classes.extend_from_slice(&[
        (b, b + 2, 1),
        (b, b + 3, 1),
        (b + 1, b + 2, 1),
        (b + 1, b + 3, 1),
        (b + 2, b + 3, 1),
    ]);
    // chain links: A(0,1) -> first column -> ... -> last column -> B(b, b+1)
    let mut left = (0usize, 1usize);
    for j in 0..middles {
        let col = (4 + 2 * j, 5 + 2 * j);
        classes.push((left.0, col.0, 1));
        classes.push((left.1, col.1, 1));
        left = col;
    }
    classes.push((left.0, b, 1));
    classes.push((left.1, b + 1, 1));
    Multigraph::from_classes(n, &classes)
}

/// L4 with k extra loops at vertex 0; near-cubic at 0.
pub fn make_l4_loops(k: usize) -> Multigraph {
    let mut g = make_l4();
    for _ in 0..k {
        g = g.with_edge(0, 0).unwrap();
    }
    g
}

/// K4 with k extra loops at vertex 0; near-cubic at 0.
pub fn make_k4_loops(k: usize) -> Multigraph {
    let mut g = make_k4();
    for _ in 0..k {
        g = g.with_edge(0, 0).unwrap();
    }
    g
}
