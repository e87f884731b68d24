//! Two colors: the matching base case against the subset dynamic program, and
//! the solver in its two-color configuration.

use std::collections::BTreeSet;

use simfvs::generators::{random_instance, RandomSpec};
use simfvs::solver::{base_hitting_set, base_matching_alpha2};
use simfvs::{solve_with, SolverConfig, VertexId};

fn main() {
    let set = |v: &[VertexId]| v.iter().copied().collect::<BTreeSet<_>>();
    let c1 = vec![set(&[0, 1]), set(&[2, 3]), set(&[4])];
    let c2 = vec![set(&[1, 2]), set(&[3, 4]), set(&[5, 6])];
    let dp = base_hitting_set(&[c1.clone(), c2.clone()].concat(), 6).unwrap();
    let mm = base_matching_alpha2(&c1, &c2, 6).unwrap();
    println!("dynamic program {dp:?}, matching {mm:?}");

    let g = random_instance(&RandomSpec {
        n: 16,
        alpha: 2,
        edges_per_color: 22,
        planted: Some(3),
        seed: 3,
    })
    .graph;
    for (name, cfg) in [
        ("default", SolverConfig::default()),
        ("two-color", SolverConfig::alpha2()),
    ] {
        let rep = solve_with(&g, 3, &cfg);
        println!(
            "{name}: {:?}, {} nodes, {} base calls",
            rep.solution, rep.stats.nodes, rep.stats.base_calls
        );
    }
}
