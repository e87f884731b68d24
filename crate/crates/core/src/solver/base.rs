//! Hitting the special cycles left at the leaves of the search tree.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::VertexId;
use crate::matching::{maximum_matching, Bipartite};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseCaseError {
    #[error("cycles {0} and {1} of one color share a vertex")]
    NotDisjoint(usize, usize),
    #[error("family too large for subset dynamic programming ({0} sets)")]
    TooManySets(usize),
}

/// Largest family accepted by the subset dynamic program.
pub const MAX_DP_SETS: usize = 24;

/// Minimum hitting set of `family` by dynamic programming over subsets of the
/// family: the state is the mask of sets already hit, a transition picks one
/// element. `None` if some set is empty.
pub fn min_hitting_set(
    family: &[BTreeSet<VertexId>],
) -> Result<Option<BTreeSet<VertexId>>, BaseCaseError> {
    let f = family.len();
    if f > MAX_DP_SETS {
        return Err(BaseCaseError::TooManySets(f));
    }
    if family.iter().any(|s| s.is_empty()) {
        return Ok(None);
    }
    // one representative element per distinct hit mask
    let mut by_mask: BTreeMap<u32, VertexId> = BTreeMap::new();
    let mut hits: BTreeMap<VertexId, u32> = BTreeMap::new();
    for (j, set) in family.iter().enumerate() {
        for &e in set {
            *hits.entry(e).or_insert(0) |= 1 << j;
        }
    }
    for (e, mask) in hits {
        by_mask.entry(mask).or_insert(e);
    }
    let full = if f == 0 { 0 } else { (1u32 << f) - 1 } as usize;
    let mut dp = vec![u32::MAX; full + 1];
    let mut choice: Vec<(usize, VertexId)> = vec![(0, 0); full + 1];
    dp[0] = 0;
    for mask in 0..=full {
        if dp[mask] == u32::MAX {
            continue;
        }
        for (&hit, &e) in &by_mask {
            let next = mask | hit as usize;
            if next != mask && dp[mask] + 1 < dp[next] {
                dp[next] = dp[mask] + 1;
                choice[next] = (mask, e);
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut mask = full;
    while mask != 0 {
        let (prev, e) = choice[mask];
        out.insert(e);
        mask = prev;
    }
    Ok(Some(out))
}

/// Minimum hitting set of `family` if it has at most `k` elements.
pub fn base_hitting_set(
    family: &[BTreeSet<VertexId>],
    k: usize,
) -> Result<Option<BTreeSet<VertexId>>, BaseCaseError> {
    Ok(min_hitting_set(family)?.filter(|h| h.len() <= k))
}

/// Minimum hitting set of two families of pairwise vertex-disjoint sets, via a
/// maximum matching in the intersection graph: one shared vertex per matched
/// pair plus one vertex per unmatched set.
pub fn matching_hitting_set(
    c1: &[BTreeSet<VertexId>],
    c2: &[BTreeSet<VertexId>],
) -> Result<Option<BTreeSet<VertexId>>, BaseCaseError> {
    for list in [c1, c2] {
        check_disjoint(list)?;
    }
    if c1.iter().chain(c2).any(|s| s.is_empty()) {
        return Ok(None);
    }
    let mut gm = Bipartite::new(c1.len(), c2.len());
    for (x, a) in c1.iter().enumerate() {
        for (y, b) in c2.iter().enumerate() {
            if !a.is_disjoint(b) {
                gm.add_edge(x, y);
            }
        }
    }
    let m = maximum_matching(&gm);
    let mut out = BTreeSet::new();
    for (x, y) in m.pairs() {
        let shared = c1[x]
            .intersection(&c2[y])
            .next()
            .expect("matched sets intersect");
        out.insert(*shared);
    }
    for (x, a) in c1.iter().enumerate() {
        if m.mate_left[x].is_none() {
            out.insert(*a.iter().next().expect("nonempty"));
        }
    }
    for (y, b) in c2.iter().enumerate() {
        if m.mate_right[y].is_none() {
            out.insert(*b.iter().next().expect("nonempty"));
        }
    }
    Ok(Some(out))
}

/// Two-color base case: the matching-based hitting set if it has at most `k` elements.
pub fn base_matching_alpha2(
    c1: &[BTreeSet<VertexId>],
    c2: &[BTreeSet<VertexId>],
    k: usize,
) -> Result<Option<BTreeSet<VertexId>>, BaseCaseError> {
    Ok(matching_hitting_set(c1, c2)?.filter(|h| h.len() <= k))
}

fn check_disjoint(list: &[BTreeSet<VertexId>]) -> Result<(), BaseCaseError> {
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if !list[i].is_disjoint(&list[j]) {
                return Err(BaseCaseError::NotDisjoint(i, j));
            }
        }
    }
    Ok(())
}
