mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use simfvs::solver::{compress, disjoint_solve, DisjointInstance, SolverStats};
use simfvs::{brute_force_min_simfvs, solve, solve_with, verify_solution, SolverConfig};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn solve_matches_oracle(seed in any::<u64>(), n in 2usize..10, alpha in 1usize..4, k in 0usize..4) {
        let g = small_random(seed, n, alpha, None);
        let expect = oracle_yes(&g, k);
        let got = solve(&g, k);
        prop_assert_eq!(got.is_some(), expect);
        if let Some(s) = got {
            prop_assert!(s.len() <= k);
            prop_assert!(verify_solution(&g, &s).unwrap());
        }
    }

    #[test]
    fn configurations_agree(seed in any::<u64>(), n in 2usize..11, k in 0usize..4) {
        let g = small_random(seed, n, 2, Some(2));
        let base = solve(&g, k).is_some();
        for cfg in [SolverConfig::alpha2(), SolverConfig { parallel: true, ..SolverConfig::default() }] {
            let rep = solve_with(&g, k, &cfg);
            prop_assert_eq!(rep.solution.is_some(), base);
            if let Some(s) = rep.solution {
                prop_assert!(s.len() <= k && verify_solution(&g, &s).unwrap());
            }
        }
    }

    #[test]
    fn disjoint_solve_matches_avoiding_oracle(seed in any::<u64>(), n in 3usize..10, alpha in 1usize..4) {
        let g = small_random(seed, n, alpha, Some(3));
        let w = brute_force_min_simfvs(&g, n, &BTreeSet::new()).unwrap().witness.unwrap();
        for k in 0..=w.len() {
            let inst = DisjointInstance::new(g.clone(), w.clone(), k);
            let got = disjoint_solve(&inst, &SolverConfig::default(), &mut SolverStats::default()).unwrap();
            let want = brute_force_min_simfvs(&g, k, &w).unwrap();
            prop_assert_eq!(got.is_some(), want.min_size.is_some());
            if let Some(s) = got {
                prop_assert!(s.is_disjoint(&w) && s.len() <= k);
                prop_assert!(verify_solution(&g, &s).unwrap());
            }
        }
    }

    #[test]
    fn compress_shrinks_when_possible(seed in any::<u64>(), n in 3usize..10) {
        let g = small_random(seed, n, 2, Some(3));
        let opt = oracle_min(&g, n).unwrap();
        if opt < n {
            let mut big = brute_force_min_simfvs(&g, n, &BTreeSet::new()).unwrap().witness.unwrap();
            let extra = g.vertices().find(|v| !big.contains(v)).unwrap();
            big.insert(extra);
            let k = big.len() - 1;
            let out = compress(&g, &big, k).unwrap();
            let s = out.expect("a smaller solution exists");
            prop_assert!(s.len() <= k && verify_solution(&g, &s).unwrap());
        }
    }

    #[test]
    fn oracle_is_minimal(seed in any::<u64>(), n in 2usize..9, alpha in 1usize..4) {
        let g = small_random(seed, n, alpha, None);
        let avoid: BTreeSet<usize> = [0].into();
        let r = brute_force_min_simfvs(&g, n, &avoid).unwrap();
        if let (Some(m), Some(w)) = (r.min_size, r.witness) {
            prop_assert!(w.is_disjoint(&avoid));
            prop_assert!(verify_solution(&g, &w).unwrap());
            if m > 0 {
                prop_assert_eq!(brute_force_min_simfvs(&g, m - 1, &avoid).unwrap().min_size, None);
            }
        }
    }
}

#[test]
fn planted_instances_are_yes() {
    for seed in 0..30 {
        let g = small_random(seed, 12, 2, Some(3));
        let s = solve(&g, 3).expect("planted set is a solution");
        assert!(verify_solution(&g, &s).unwrap());
    }
}

#[test]
fn measure_violations_are_recorded() {
    // a tally exists for every branch edge taken
    let g = small_random(11, 12, 3, Some(4));
    let rep = solve_with(&g, 4, &SolverConfig::default());
    assert!(rep.stats.violation_count as usize >= rep.stats.violations.len());
    assert!(rep.stats.total_branch_edges() >= rep.stats.violation_count);
}
