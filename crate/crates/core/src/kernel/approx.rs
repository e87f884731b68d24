//! Local-ratio 2-approximation for feedback vertex set on one color class.
//!
//! Unit weights are lowered either along a semidisjoint cycle (all vertices
//! but at most one have degree two) or in proportion to `degree - 1`. Vertices
//! reaching weight zero join the solution, and a final reverse pass drops the
//! ones that are redundant. Weights are exact rationals.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::{ColorId, ColorView, EdgeColoredGraph, VertexId};

type Adj = BTreeMap<VertexId, BTreeMap<VertexId, u32>>;

fn degree(adj: &Adj, v: VertexId) -> usize {
    adj[&v]
        .iter()
        .map(|(&u, &m)| if u == v { 2 * m as usize } else { m as usize })
        .sum()
}

fn remove(adj: &mut Adj, v: VertexId) {
    if let Some(nbrs) = adj.remove(&v) {
        for u in nbrs.keys() {
            if let Some(m) = adj.get_mut(u) {
                m.remove(&v);
            }
        }
    }
}

/// Strips vertices of degree at most one until none is left.
fn prune(adj: &mut Adj) {
    let mut queue: VecDeque<VertexId> = adj
        .keys()
        .copied()
        .filter(|&v| degree(adj, v) <= 1)
        .collect();
    while let Some(v) = queue.pop_front() {
        if !adj.contains_key(&v) || degree(adj, v) > 1 {
            continue;
        }
        let nbrs: Vec<VertexId> = adj[&v].keys().copied().collect();
        remove(adj, v);
        for u in nbrs {
            if adj.contains_key(&u) && degree(adj, u) <= 1 {
                queue.push_back(u);
            }
        }
    }
}

/// Vertex set of a semidisjoint cycle, if one exists. Expects minimum degree two.
fn semidisjoint_cycle(adj: &Adj) -> Option<Vec<VertexId>> {
    if let Some(&v) = adj.keys().find(|&&v| adj[&v].contains_key(&v)) {
        return Some(vec![v]);
    }
    let two: BTreeSet<VertexId> = adj
        .keys()
        .copied()
        .filter(|&v| degree(adj, v) == 2)
        .collect();
    let mut seen = BTreeSet::new();
    for &start in &two {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut outside = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for (&y, &m) in &adj[&x] {
                if two.contains(&y) {
                    if seen.insert(y) {
                        comp.push(y);
                        queue.push_back(y);
                    }
                } else {
                    outside.extend(std::iter::repeat_n(y, m as usize));
                }
            }
        }
        match outside.as_slice() {
            [] => return Some(comp),
            [a, b] if a == b => {
                comp.push(*a);
                return Some(comp);
            }
            _ => {}
        }
    }
    None
}

/// A feedback vertex set of `G_i` of size at most twice the optimum.
pub fn two_approx_fvs(view: ColorView<'_>) -> BTreeSet<VertexId> {
    let mut adj: Adj = BTreeMap::new();
    for v in view.vertices() {
        let nbrs: BTreeMap<VertexId, u32> = view.neighbors(v).collect();
        if !nbrs.is_empty() {
            adj.insert(v, nbrs);
        }
    }
    let mut weight: BTreeMap<VertexId, BigRational> =
        adj.keys().map(|&v| (v, BigRational::one())).collect();
    let mut stack: Vec<VertexId> = Vec::new();
    loop {
        prune(&mut adj);
        if adj.is_empty() {
            break;
        }
        if let Some(cycle) = semidisjoint_cycle(&adj) {
            let gamma = cycle
                .iter()
                .map(|v| weight[v].clone())
                .min()
                .expect("nonempty cycle");
            for v in &cycle {
                *weight.get_mut(v).expect("weighted") -= &gamma;
            }
        } else {
            let excess: BTreeMap<VertexId, BigRational> = adj
                .keys()
                .map(|&v| {
                    (
                        v,
                        BigRational::from_integer((degree(&adj, v) as i64 - 1).into()),
                    )
                })
                .collect();
            let gamma = adj
                .keys()
                .map(|v| &weight[v] / &excess[v])
                .min()
                .expect("nonempty graph");
            for v in adj.keys() {
                *weight.get_mut(v).expect("weighted") -= &gamma * &excess[v];
            }
        }
        let zero: Vec<VertexId> = adj
            .keys()
            .copied()
            .filter(|v| weight[v].is_zero())
            .collect();
        for v in zero {
            stack.push(v);
            remove(&mut adj, v);
        }
    }
    let mut solution: BTreeSet<VertexId> = stack.iter().copied().collect();
    for &v in stack.iter().rev() {
        solution.remove(&v);
        if !view.is_forest_without(&solution) {
            solution.insert(v);
        }
    }
    solution
}

/// [`two_approx_fvs`] on every color, indexed by `color - 1`.
pub fn two_approx_all(g: &EdgeColoredGraph) -> Vec<BTreeSet<VertexId>> {
    (1..=g.alpha())
        .map(|c: ColorId| two_approx_fvs(g.view(c).expect("valid color")))
        .collect()
}
