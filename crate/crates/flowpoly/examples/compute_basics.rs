//! Build the named witness graphs and print their flow polynomials.
//!
//! ```bash
//! cargo run --example compute_basics
//! ```

use flowpoly::families;
use flowpoly::flow::{flow, tau, Method};
use flowpoly::multigraph::Multigraph;

fn show(name: &str, g: &Multigraph) {
    let f = flow(g, Method::Auto).unwrap();
    println!(
        "{name:12} n = {:2}  m = {:2}  F(G,t) = {}",
        g.vertex_count(),
        g.edge_count(),
        f.poly
    );
    if g.is_connected() {
        println!("{:12} tau = {}", "", tau(g).unwrap());
    }
}

fn main() {
    show("theta", &families::make_z3());
    show("K4", &families::make_k4());
    show("L4", &families::make_l4());
    show("C5", &families::make_cycle(5));
    show("necklace 8", &families::make_z3_necklace(8).unwrap());
    show("chain 8", &families::make_z3_chain(8).unwrap());
    show("extremal 10", &families::make_gstar(10).unwrap());
    show("K4 + loops", &families::make_k4_loops(2));

    // a bridge forces the zero polynomial
    let bridged = Multigraph::from_classes(
        6,
        &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1), (2, 3, 1)],
    )
    .unwrap();
    show("bridged", &bridged);
}
