//! Compare the solver with exhaustive search on a batch of small random instances.

use std::collections::BTreeSet;

use simfvs::generators::{random_instance, RandomSpec};
use simfvs::{brute_force_min_simfvs, solve, verify_solution};

fn main() {
    let mut agree = 0;
    let total = 60;
    for seed in 0..total {
        let spec = RandomSpec {
            n: 9,
            alpha: 2 + (seed % 2) as usize,
            edges_per_color: 11,
            planted: (seed % 3 == 0).then_some(2),
            seed,
        };
        let g = random_instance(&spec).graph;
        let k = (seed % 4) as usize;
        let oracle = brute_force_min_simfvs(&g, k, &BTreeSet::new())
            .unwrap()
            .is_yes(k);
        let answer = solve(&g, k);
        let valid = answer
            .as_ref()
            .is_none_or(|s| s.len() <= k && verify_solution(&g, s).unwrap());
        if oracle == answer.is_some() && valid {
            agree += 1;
        } else {
            println!("seed {seed}: oracle {oracle}, solver {answer:?}");
        }
    }
    println!("{agree}/{total} agree");
}
