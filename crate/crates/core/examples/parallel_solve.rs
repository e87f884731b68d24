//! Sequential and parallel compression on the same instances, with timings.

use std::time::Instant;

use simfvs::generators::{random_instance, RandomSpec};
use simfvs::{solve_with, SolverConfig};

fn main() {
    for seed in 0..3 {
        let g = random_instance(&RandomSpec {
            n: 30,
            alpha: 2,
            edges_per_color: 40,
            planted: Some(5),
            seed,
        })
        .graph;
        for parallel in [false, true] {
            let cfg = SolverConfig {
                parallel,
                ..SolverConfig::default()
            };
            let start = Instant::now();
            let rep = solve_with(&g, 5, &cfg);
            println!(
                "seed {seed} parallel={parallel}: {:?} in {:.2?}, {} nodes",
                rep.solution.map(|s| s.len()),
                start.elapsed(),
                rep.stats.nodes
            );
        }
    }
}
