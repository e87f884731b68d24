//! Solve a random two-color instance with a planted solution and check the answer.

use simfvs::generators::{random_instance, RandomSpec};
use simfvs::{solve, verify_solution};

fn main() {
    let inst = random_instance(&RandomSpec {
        n: 14,
        alpha: 2,
        edges_per_color: 20,
        planted: Some(3),
        seed: 7,
    });
    let g = &inst.graph;
    println!(
        "{} vertices, {} edges, planted {:?}",
        g.num_vertices(),
        g.num_edges(),
        inst.planted.unwrap()
    );
    for k in 0..=3 {
        match solve(g, k) {
            Some(s) => {
                println!(
                    "k = {k}: yes {s:?}, valid = {}",
                    verify_solution(g, &s).unwrap()
                );
                break;
            }
            None => println!("k = {k}: no"),
        }
    }
}
