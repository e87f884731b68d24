#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simfvs::generators::{random_instance, RandomSpec};
use simfvs::{brute_force_min_simfvs, EdgeColoredGraph, OriginTag, VertexId};

fn fresh(g: &mut EdgeColoredGraph) -> VertexId {
    let id = g.capacity();
    g.add_vertex(OriginTag::Original(id))
}

pub fn oracle_min(g: &EdgeColoredGraph, cap: usize) -> Option<usize> {
    brute_force_min_simfvs(g, cap, &BTreeSet::new())
        .unwrap()
        .min_size
}

pub fn oracle_yes(g: &EdgeColoredGraph, k: usize) -> bool {
    oracle_min(g, k).is_some()
}

pub fn small_random(seed: u64, n: usize, alpha: usize, planted: Option<usize>) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let edges = rng.gen_range(n..=2 * n);
    random_instance(&RandomSpec {
        n,
        alpha,
        edges_per_color: edges,
        planted,
        seed,
    })
    .graph
}

/// Random multigraph with loops and multiplicities up to 3, so every cleanup rule has sites.
pub fn wild(seed: u64, n: usize, alpha: usize, edges: usize) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColoredGraph::new(n, alpha);
    for _ in 0..edges {
        let c = rng.gen_range(1..=alpha);
        let u = rng.gen_range(0..n);
        let v = if rng.gen_bool(0.08) {
            u
        } else {
            rng.gen_range(0..n)
        };
        let m = if rng.gen_bool(0.15) { 2 } else { 1 };
        g.add_edges(u, v, c, m).unwrap();
    }
    g
}

/// `v = 0` and `h = 1` joined by `m` middle vertices in color 1; the middle
/// vertices also form a color-2 cycle.
pub fn hub(m: usize) -> EdgeColoredGraph {
    let mut g = EdgeColoredGraph::new(m + 2, 2);
    for j in 0..m {
        let c = j + 2;
        g.add_edge(0, c, 1).unwrap();
        g.add_edge(c, 1, 1).unwrap();
        g.add_edge(c, (j + 1) % m + 2, 2).unwrap();
    }
    g
}

/// A hub whose middle vertices are randomly replaced by short paths, with
/// random extra color-2 edges among the middle part.
pub fn noisy_hub(seed: u64, m: usize, extra: usize) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColoredGraph::new(2, 2);
    let mut middle: Vec<VertexId> = Vec::new();
    for _ in 0..m {
        let len = if rng.gen_bool(0.3) { 2 } else { 1 };
        let ids: Vec<VertexId> = (0..len).map(|_| fresh(&mut g)).collect();
        g.add_edge(0, ids[0], 1).unwrap();
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1], 1).unwrap();
        }
        g.add_edge(*ids.last().unwrap(), 1, 1).unwrap();
        middle.extend(ids);
    }
    for _ in 0..extra {
        let a = middle[rng.gen_range(0..middle.len())];
        let b = middle[rng.gen_range(0..middle.len())];
        if a != b {
            g.add_edge(a, b, 2).unwrap();
        }
    }
    if rng.gen_bool(0.5) {
        g.add_edge(0, 1, 2).unwrap();
    }
    g
}

/// `petals` cycles of random length through vertex 0 in color 1, plus random
/// edges in color 2 and some color-1 edges between petals.
pub fn random_flower(seed: u64, petals: usize, extra: usize) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColoredGraph::new(1, 2);
    let mut rest: Vec<VertexId> = Vec::new();
    for _ in 0..petals {
        let len = rng.gen_range(1..=3);
        let ids: Vec<VertexId> = (0..len).map(|_| fresh(&mut g)).collect();
        if len == 1 {
            g.add_edges(0, ids[0], 1, 2).unwrap();
        } else {
            g.add_edge(0, ids[0], 1).unwrap();
            for w in ids.windows(2) {
                g.add_edge(w[0], w[1], 1).unwrap();
            }
            g.add_edge(*ids.last().unwrap(), 0, 1).unwrap();
        }
        rest.extend(ids);
    }
    for _ in 0..extra {
        let a = rest[rng.gen_range(0..rest.len())];
        let b = rest[rng.gen_range(0..rest.len())];
        let c = if rng.gen_bool(0.8) { 2 } else { 1 };
        if a != b && g.multiplicity(a, b, c) < 2 {
            g.add_edge(a, b, c).unwrap();
        }
    }
    g
}

/// Two colors sharing a long run of vertices that lie on degree-2 paths in
/// both colors, each color closed through its own high-degree vertex.
pub fn shared_paths(seed: u64) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shared = rng.gen_range(2..=4);
    let tail1 = rng.gen_range(1..=2);
    let tail2 = rng.gen_range(1..=2);
    let n = shared + tail1 + tail2 + 2;
    let mut g = EdgeColoredGraph::new(n, 2);
    let s1 = shared + tail1 + tail2;
    let s2 = s1 + 1;
    let run: Vec<VertexId> = (0..shared).collect();
    let t1: Vec<VertexId> = (shared..shared + tail1).collect();
    let t2: Vec<VertexId> = (shared + tail1..s1).collect();
    // color 1: s1 - run - t1 - s1, color 2: s2 - run - t2 - s2
    for (c, s, tail) in [(1, s1, &t1), (2, s2, &t2)] {
        let cyc: Vec<VertexId> = std::iter::once(s)
            .chain(run.iter().copied())
            .chain(tail.iter().copied())
            .collect();
        for i in 0..cyc.len() {
            g.add_edge(cyc[i], cyc[(i + 1) % cyc.len()], c).unwrap();
        }
    }
    // extra cycles at the hubs keep them out of the paths
    for (c, s, tail) in [(1, s1, &t2), (2, s2, &t1)] {
        if rng.gen_bool(0.6) {
            let x = tail[rng.gen_range(0..tail.len())];
            g.add_edges(s, x, c, 2).unwrap();
        }
    }
    if rng.gen_bool(0.5) {
        g.add_edges(s1, s2, 1 + rng.gen_range(0..2), 2).unwrap();
    }
    g
}
