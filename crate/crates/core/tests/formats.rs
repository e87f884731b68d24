mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use simfvs::formats::{
    parse_ecg, parse_hss, parse_solution, write_ecg, write_hss, write_solution, SolutionFile,
};
use simfvs::generators::random_partitioned;
use simfvs::{solve, verify_solution};

use common::*;

proptest! {
    #[test]
    fn graphs_round_trip(seed in any::<u64>(), n in 1usize..12, alpha in 1usize..4) {
        let g = wild(seed, n, alpha, 3 * n);
        let back = parse_ecg(&write_ecg(&g)).unwrap();
        prop_assert_eq!(back.num_vertices(), g.num_vertices());
        for c in 1..=alpha {
            prop_assert_eq!(back.edges(c), g.edges(c));
        }
    }

    #[test]
    fn set_systems_round_trip(seed in any::<u64>(), universe in 1usize..8, groups in 1usize..4) {
        let sys = random_partitioned(universe, groups, 3, seed);
        let back = parse_hss(&write_hss(&sys)).unwrap();
        prop_assert_eq!(back.groups, sys.groups);
        prop_assert_eq!(back.universe, sys.universe);
    }

    #[test]
    fn solutions_from_files_verify(seed in any::<u64>(), n in 2usize..12) {
        let text = write_ecg(&small_random(seed, n, 2, Some(2)));
        let g = parse_ecg(&text).unwrap();
        if let Some(s) = solve(&g, 2) {
            let file = write_solution(&SolutionFile::Yes(s));
            let SolutionFile::Yes(read) = parse_solution(&file).unwrap() else { unreachable!() };
            prop_assert!(verify_solution(&parse_ecg(&text).unwrap(), &read).unwrap());
        }
    }
}

#[test]
fn comments_and_blank_lines() {
    let g = parse_ecg("c first\n\np ecg 3 1 2\nc between\ne 1 1 1\n  e 2 3 1\n").unwrap();
    assert_eq!(g.multiplicity(0, 0, 1), 1);
    assert_eq!(g.degree(0, 1).unwrap(), 2);
    assert_eq!(
        parse_solution("c x\ns yes\n").unwrap(),
        SolutionFile::Yes(BTreeSet::new())
    );
}

#[test]
fn malformed_inputs() {
    for bad in [
        "e 1 2 1\n",
        "p ecg 2 1\n",
        "p ecg 2 1 2\ne 1 2 1\n",
        "p ecg 2 1 1\ne 0 2 1\n",
        "p ecg 2 1 1\nx\n",
    ] {
        assert!(parse_ecg(bad).is_err(), "{bad:?}");
    }
    for bad in [
        "p hss 2 1\ns 1\n",
        "p hss 2 1\ng 2\ns 1\n",
        "p hss 2 1\ng 1\ns 3\n",
    ] {
        assert!(parse_hss(bad).is_err(), "{bad:?}");
    }
    assert!(parse_solution("v 1\n").is_err());
}
