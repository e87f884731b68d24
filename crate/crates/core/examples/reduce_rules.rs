//! Walk through the cleanup rules on a small graph and lift a solution back.

use std::collections::BTreeSet;

use simfvs::reductions::first_applicable;
use simfvs::{reduce_exhaustive, solve, EdgeColoredGraph};

fn main() {
    // color 1: a triangle 0-1-2 with a pendant path 2-3-4; color 2: a double edge 0-5 and a loop at 6
    let mut g = EdgeColoredGraph::new(7, 2);
    for (a, b, c) in [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 1)] {
        g.add_edge(a, b, c).unwrap();
    }
    for (a, b, c) in [(0, 5, 2), (0, 5, 2), (6, 6, 2)] {
        g.add_edge(a, b, c).unwrap();
    }

    if let Some((rule, v)) = first_applicable(&g, &BTreeSet::new()) {
        println!("first applicable: {rule:?} at {v}");
    }
    let red = reduce_exhaustive(&g, 3, &BTreeSet::new()).unwrap();
    println!("rule counts R1..R5: {:?}", &red.trace.counts()[..5]);
    println!(
        "left: {} vertices, k = {}, forced {:?}",
        red.graph.num_vertices(),
        red.k,
        red.forced
    );

    let inner = solve(&red.graph, red.k).expect("reduced instance is a yes instance");
    let lifted = red.trace.lift(&inner).unwrap();
    println!("solution of the reduced graph {inner:?} lifts to {lifted:?}");
}
