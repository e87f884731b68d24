//! The chain from partitioned subgraph isomorphism through partitioned hitting
//! set to an edge-colored graph, checked at each step by brute force.

use std::collections::BTreeSet;

use simfvs::brute_force_min_simfvs;
use simfvs::generators::{from_hitting_set, phs_to_simfvs, psi_to_phs, PsiInstance, SetSystem};
use simfvs::oracle::brute_force_hitting_set;

fn main() {
    let sys = SetSystem::plain(4, vec![vec![0, 1], vec![1, 2], vec![1, 3]]).with_k(1);
    let enc = from_hitting_set(&sys).unwrap();
    let r = brute_force_min_simfvs(&enc.graph, 1, &BTreeSet::new()).unwrap();
    println!(
        "hitting set with 3 sets: {} vertices, {} colors, minimum {:?} at {:?}",
        enc.graph.num_vertices(),
        enc.graph.alpha(),
        r.min_size,
        r.witness
    );

    let psi = PsiInstance::new(2, &[(0, 1)], &[2, 2], &[((0, 0), (1, 1))]).unwrap();
    println!("pattern embeds: {:?}", psi.brute_force());
    let red = psi_to_phs(&psi).unwrap();
    println!(
        "partitioned hitting set: {} groups, {} sets, k' = {}",
        red.system.alpha(),
        red.system.num_sets(),
        red.system.k
    );
    for k in [red.system.k, red.system.k - 1] {
        let hs = brute_force_hitting_set(&red.system, k).unwrap();
        println!("  k' = {k}: {}", if hs.is_some() { "yes" } else { "no" });
    }
    let g = phs_to_simfvs(&red.system).unwrap().graph;
    println!(
        "as a graph: {} vertices, {} colors",
        g.num_vertices(),
        g.alpha()
    );
}
