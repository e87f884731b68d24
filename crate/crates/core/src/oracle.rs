//! Brute-force ground truth: solution checking, minimum simultaneous feedback
//! vertex sets and minimum hitting sets by exhaustive enumeration.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

use crate::generators::SetSystem;
use crate::graph::{Dsu, EdgeColoredGraph, GraphError, VertexId};

/// Largest number of candidate subsets the enumerators accept.
pub const ENUMERATION_LIMIT: u128 = 1 << 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for exhaustive search ({0} candidate subsets)")]
    TooLarge(u128),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Smallest solution size, `None` if no solution of size at most the cap exists.
    pub min_size: Option<usize>,
    pub witness: Option<BTreeSet<VertexId>>,
    pub avoid: BTreeSet<VertexId>,
}

impl OracleResult {
    pub fn is_yes(&self, k: usize) -> bool {
        self.min_size.is_some_and(|m| m <= k)
    }
}

/// Whether every color class of `g - s` is a forest.
pub fn verify_solution(g: &EdgeColoredGraph, s: &BTreeSet<VertexId>) -> Result<bool, GraphError> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok((1..=g.alpha()).all(|c| g.cycle_in(c, Some(s)).is_none()))
}

fn subset_count(n: usize, cap: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for s in 0..=cap.min(n) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((n - s) as u128) / (s as u128 + 1);
    }
    total
}

/// Exact minimum simfvs among subsets of `V - avoid` of size at most `cap`,
/// enumerated by increasing size.
pub fn brute_force_min_simfvs(
    g: &EdgeColoredGraph,
    cap: usize,
    avoid: &BTreeSet<VertexId>,
) -> Result<OracleResult, OracleError> {
    for &v in avoid {
        g.check_vertex(v)?;
    }
    let candidates: Vec<VertexId> = g.vertices().filter(|v| !avoid.contains(v)).collect();
    let count = subset_count(candidates.len(), cap);
    if count > ENUMERATION_LIMIT {
        return Err(OracleError::TooLarge(count));
    }
    let checker = ForestChecker::new(g);
    let mut removed = vec![false; g.capacity()];
    for size in 0..=cap.min(candidates.len()) {
        for combo in candidates.iter().copied().combinations(size) {
            for &v in &combo {
                removed[v] = true;
            }
            let ok = checker.acyclic_without(&removed);
            for &v in &combo {
                removed[v] = false;
            }
            if ok {
                return Ok(OracleResult {
                    min_size: Some(size),
                    witness: Some(combo.into_iter().collect()),
                    avoid: avoid.clone(),
                });
            }
        }
    }
    Ok(OracleResult {
        min_size: None,
        witness: None,
        avoid: avoid.clone(),
    })
}

/// Exact minimum hitting set of all sets of `sys`, if one of size at most `cap` exists.
/// An empty set in the family can never be hit.
pub fn brute_force_hitting_set(
    sys: &SetSystem,
    cap: usize,
) -> Result<Option<BTreeSet<usize>>, OracleError> {
    let sets: Vec<&Vec<usize>> = sys.sets().collect();
    if sets.iter().any(|s| s.is_empty()) {
        return Ok(None);
    }
    let useful: Vec<usize> = sets
        .iter()
        .flat_map(|s| s.iter().copied())
        .sorted()
        .dedup()
        .collect();
    let count = subset_count(useful.len(), cap);
    if count > ENUMERATION_LIMIT {
        return Err(OracleError::TooLarge(count));
    }
    let mut chosen = vec![false; sys.universe];
    for size in 0..=cap.min(useful.len()) {
        for combo in useful.iter().copied().combinations(size) {
            for &e in &combo {
                chosen[e] = true;
            }
            let ok = sets.iter().all(|s| s.iter().any(|&e| chosen[e]));
            for &e in &combo {
                chosen[e] = false;
            }
            if ok {
                return Ok(Some(combo.into_iter().collect()));
            }
        }
    }
    Ok(None)
}

/// Precomputed edge lists for repeated acyclicity checks under vertex removal.
pub(crate) struct ForestChecker {
    n: usize,
    /// Per color: `(u, v, multiplicity)` with `u <= v`.
    edges: Vec<Vec<(usize, usize, u32)>>,
}

impl ForestChecker {
    pub(crate) fn new(g: &EdgeColoredGraph) -> Self {
        ForestChecker {
            n: g.capacity(),
            edges: (1..=g.alpha()).map(|c| g.edges(c)).collect(),
        }
    }

    pub(crate) fn acyclic_without(&self, removed: &[bool]) -> bool {
        self.edges.iter().all(|es| {
            let mut dsu = Dsu::new(self.n);
            es.iter()
                .filter(|&&(u, v, _)| !removed[u] && !removed[v])
                .all(|&(u, v, m)| u != v && m < 2 && dsu.union(u, v))
        })
    }
}
