//! q-expansions in bipartite graphs.
//!
//! Every vertex of `A` is copied `q` times and a maximum matching is taken.
//! Left copies reachable from an unmatched copy by alternating paths, and
//! their partners, are discarded; what remains on the left is `X` and the
//! unreached part of `B` is `Y`. Copies of one vertex are twins, so they are
//! discarded together.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::matching::{maximum_matching, Bipartite};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("|B| = {b} is smaller than q|A| = {need}")]
    TooFewRight { b: usize, need: usize },
    #[error("right vertex {0} is isolated")]
    IsolatedRight(usize),
    #[error("edge ({0}, {1}) is out of range")]
    BadEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub x: BTreeSet<usize>,
    pub y: BTreeSet<usize>,
    /// `q` edges `(a, b)` for every `a` in `X`, with distinct `b`.
    pub assignment: Vec<(usize, usize)>,
}

impl ExpansionResult {
    /// Checks the expansion and `N(Y) ⊆ X` against `edges`.
    pub fn verify(&self, edges: &[(usize, usize)], q: usize) -> bool {
        let edge_set: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
        let mut partners = BTreeSet::new();
        for &(a, b) in &self.assignment {
            if !self.x.contains(&a)
                || !self.y.contains(&b)
                || !edge_set.contains(&(a, b))
                || !partners.insert(b)
            {
                return false;
            }
        }
        let per_x = self
            .x
            .iter()
            .all(|a| self.assignment.iter().filter(|e| e.0 == *a).count() == q);
        let closed = edges
            .iter()
            .all(|&(a, b)| !self.y.contains(&b) || self.x.contains(&a));
        !self.x.is_empty() && per_x && closed && self.assignment.len() == q * self.x.len()
    }
}

/// Finds nonempty `X ⊆ A`, `Y ⊆ B` such that `X` has a `q`-expansion into `Y`
/// and every neighbour of `Y` lies in `X`. Requires `|B| ≥ q|A|`, `q ≥ 1`,
/// `A` nonempty and no isolated vertex in `B`.
pub fn expansion_lemma(
    a: usize,
    b: usize,
    edges: &[(usize, usize)],
    q: usize,
) -> Result<ExpansionResult, ExpansionError> {
    if b < q * a || a == 0 || q == 0 {
        return Err(ExpansionError::TooFewRight { b, need: q * a });
    }
    let mut bip = Bipartite::new(a * q, b);
    let mut touched = vec![false; b];
    for &(l, r) in edges {
        if l >= a || r >= b {
            return Err(ExpansionError::BadEdge(l, r));
        }
        touched[r] = true;
        for c in 0..q {
            bip.add_edge(l * q + c, r);
        }
    }
    if let Some(r) = touched.iter().position(|t| !t) {
        return Err(ExpansionError::IsolatedRight(r));
    }
    let m = maximum_matching(&bip);
    // alternating reachability from unmatched left copies
    let mut left_seen = vec![false; a * q];
    let mut right_seen = vec![false; b];
    let mut queue: VecDeque<usize> = (0..a * q).filter(|&l| m.mate_left[l].is_none()).collect();
    for &l in &queue {
        left_seen[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &bip.adj[l] {
            if right_seen[r] || m.mate_left[l] == Some(r) {
                continue;
            }
            right_seen[r] = true;
            if let Some(l2) = m.mate_right[r] {
                if !left_seen[l2] {
                    left_seen[l2] = true;
                    queue.push_back(l2);
                }
            }
        }
    }
    let x: BTreeSet<usize> = (0..a)
        .filter(|&v| (0..q).all(|c| !left_seen[v * q + c]))
        .collect();
    let y: BTreeSet<usize> = (0..b).filter(|&r| !right_seen[r]).collect();
    let assignment = x
        .iter()
        .flat_map(|&v| (0..q).map(move |c| v * q + c))
        .map(|l| (l / q, m.mate_left[l].expect("copies in X are matched")))
        .collect();
    Ok(ExpansionResult { x, y, assignment })
}
