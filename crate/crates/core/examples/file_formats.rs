//! Round-trip the text formats: graphs, set systems and solutions.

use std::collections::BTreeSet;

use simfvs::formats::{
    parse_ecg, parse_hss, parse_solution, write_ecg, write_hss, write_solution, SolutionFile,
};
use simfvs::generators::SetSystem;

const GRAPH: &str = "c a triangle in color 1, a double edge in color 2
p ecg 4 2 5
e 1 2 1
e 2 3 1
e 3 1 1
e 3 4 2
e 3 4 2
";

fn main() {
    let g = parse_ecg(GRAPH).unwrap();
    println!(
        "parsed {} vertices, {} edges",
        g.num_vertices(),
        g.num_edges()
    );
    print!("{}", write_ecg(&g));

    let sys = SetSystem {
        universe: 3,
        groups: vec![vec![vec![0, 1]], vec![vec![1, 2], vec![0]]],
        k: 2,
    };
    let text = write_hss(&sys);
    print!("{text}");
    assert_eq!(parse_hss(&text).unwrap().groups, sys.groups);

    let sol = SolutionFile::Yes(BTreeSet::from([2]));
    let text = write_solution(&sol);
    print!("{text}");
    assert_eq!(parse_solution(&text).unwrap(), sol);

    match parse_ecg("p ecg 2 1 1\ne 1 3 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
