//! Kernelize instances where the high-degree rules fire: a flower center and
//! a vertex whose cycles all pass through one other vertex.

use simfvs::kernel::{flower_or_avoiding_fvs, kernelize, Certificate};
use simfvs::{brute_force_min_simfvs, EdgeColoredGraph};

fn hub(m: usize) -> EdgeColoredGraph {
    // v = 0 and h = 1 share m middle vertices, which also form a color-2 cycle
    let mut g = EdgeColoredGraph::new(m + 2, 2);
    for j in 0..m {
        let c = j + 2;
        for (a, b, c) in [(0, c, 1), (c, 1, 1), (c, (j + 1) % m + 2, 2)] {
            g.add_edge(a, b, c).unwrap();
        }
    }
    g
}

fn flower(petals: usize) -> EdgeColoredGraph {
    let mut g = EdgeColoredGraph::new(1 + 2 * petals, 1);
    for p in 0..petals {
        let (a, b) = (1 + 2 * p, 2 + 2 * p);
        for (a, b, c) in [(0, a, 1), (a, b, 1), (b, 0, 1)] {
            g.add_edge(a, b, c).unwrap();
        }
    }
    g
}

fn report(name: &str, g: &EdgeColoredGraph, k: usize) {
    let cert = flower_or_avoiding_fvs(g.view(1).unwrap(), 0, k);
    match &cert {
        Certificate::Flower { cycles, .. } => println!("{name}: flower of order {}", cycles.len()),
        Certificate::AvoidingFvs { h, .. } => println!("{name}: avoiding set {h:?}"),
        Certificate::Neither { .. } => println!("{name}: search budget exhausted"),
    }
    let ker = kernelize(g, k);
    let oracle = brute_force_min_simfvs(g, k, &Default::default()).unwrap();
    println!(
        "  kernel: {} vertices, k' = {}, no = {}, stats {:?}; oracle says yes = {}",
        ker.graph.num_vertices(),
        ker.k,
        ker.is_no(),
        ker.stats,
        oracle.is_yes(k)
    );
}

fn main() {
    report("hub", &hub(8), 2);
    report("flower", &flower(4), 2);
    report("flower, tight budget", &flower(4), 0);
}
