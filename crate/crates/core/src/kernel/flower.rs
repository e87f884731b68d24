//! Certificates for high-degree vertices: a flower (cycles through `v`
//! that share only `v`) or a feedback vertex set of `G_i` avoiding `v`.
//!
//! Both come from exact bounded searches. A maximum flower only needs
//! minimal cycles: a double edge `v-x` is the cycle `[x]`, and every other
//! cycle leaves `v` through two single edges and has no interior neighbour of
//! `v`. The blocker search branches on the vertices of a short cycle through
//! `v` with iterative deepening.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{ColorId, ColorView, EdgeColoredGraph, VertexId};

use super::approx::two_approx_fvs;

/// Default number of search steps for each of the two searches.
pub const SEARCH_BUDGET: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Each cycle lists its vertices other than `v`, in order: `v, x_1, .., x_r, v`.
    Flower {
        v: VertexId,
        color: ColorId,
        cycles: Vec<Vec<VertexId>>,
    },
    AvoidingFvs {
        v: VertexId,
        color: ColorId,
        h: BTreeSet<VertexId>,
    },
    /// Both searches ran out of budget.
    Neither { v: VertexId, color: ColorId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("no color-{2} edge between {0} and {1}")]
    MissingEdge(VertexId, VertexId, ColorId),
    #[error("vertex {0} repeats across flower cycles")]
    SharedVertex(VertexId),
    #[error("flower cycle must not pass through the center again")]
    CenterRepeated,
    #[error("the avoiding set contains the center")]
    ContainsCenter,
    #[error("removing the avoiding set leaves a cycle")]
    NotAFeedbackSet,
    #[error("no certificate")]
    Empty,
}

impl Certificate {
    pub fn center(&self) -> (VertexId, ColorId) {
        match *self {
            Certificate::Flower { v, color, .. }
            | Certificate::AvoidingFvs { v, color, .. }
            | Certificate::Neither { v, color } => (v, color),
        }
    }

    /// Flower order; zero for the other variants.
    pub fn order(&self) -> usize {
        match self {
            Certificate::Flower { cycles, .. } => cycles.len(),
            _ => 0,
        }
    }

    /// Checks the certificate against `g` from scratch.
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), CertificateError> {
        let (v, color) = self.center();
        if !g.contains(v) {
            return Err(CertificateError::UnknownVertex(v));
        }
        match self {
            Certificate::Flower { cycles, .. } => {
                let mut seen = BTreeSet::new();
                for cyc in cycles {
                    for &x in cyc {
                        if x == v {
                            return Err(CertificateError::CenterRepeated);
                        }
                        if !g.contains(x) {
                            return Err(CertificateError::UnknownVertex(x));
                        }
                        if !seen.insert(x) {
                            return Err(CertificateError::SharedVertex(x));
                        }
                    }
                    match cyc.as_slice() {
                        [] => return Err(CertificateError::Empty),
                        [x] => {
                            if g.multiplicity(v, *x, color) < 2 {
                                return Err(CertificateError::MissingEdge(v, *x, color));
                            }
                        }
                        _ => {
                            let closed = std::iter::once(v)
                                .chain(cyc.iter().copied())
                                .chain(std::iter::once(v));
                            let walk: Vec<VertexId> = closed.collect();
                            for pair in walk.windows(2) {
                                if g.multiplicity(pair[0], pair[1], color) == 0 {
                                    return Err(CertificateError::MissingEdge(
                                        pair[0], pair[1], color,
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(())
            }
            Certificate::AvoidingFvs { h, .. } => {
                if h.contains(&v) {
                    return Err(CertificateError::ContainsCenter);
                }
                if let Some(&x) = h.iter().find(|&&x| !g.contains(x)) {
                    return Err(CertificateError::UnknownVertex(x));
                }
                let view = g.view(color).map_err(|_| CertificateError::Empty)?;
                if !view.is_forest_without(h) {
                    return Err(CertificateError::NotAFeedbackSet);
                }
                Ok(())
            }
            Certificate::Neither { .. } => Err(CertificateError::Empty),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowerSearch {
    pub cycles: Vec<Vec<VertexId>>,
    /// Whether the search finished; if so, `cycles` is a maximum flower or
    /// has reached the target.
    pub complete: bool,
}

/// Searches for a flower of order `target` at `v`; returns the largest found.
pub fn max_flower(view: ColorView<'_>, v: VertexId, target: usize, budget: usize) -> FlowerSearch {
    let mut doubles = Vec::new();
    let mut singles = Vec::new();
    for (x, m) in view.neighbors(v) {
        if x == v {
            continue;
        }
        if m >= 2 {
            doubles.push(vec![x]);
        } else {
            singles.push(x);
        }
    }
    let mut s = PackSearch {
        view,
        v,
        nbrs: view.neighbors(v).map(|(x, _)| x).collect(),
        target: target.saturating_sub(doubles.len()),
        best: Vec::new(),
        steps: 0,
        budget,
    };
    let mut used: BTreeSet<VertexId> = doubles.iter().flatten().copied().collect();
    s.pack(&singles, &mut used, &mut Vec::new());
    let complete = s.steps <= s.budget;
    let mut cycles = doubles;
    cycles.extend(s.best);
    FlowerSearch { cycles, complete }
}

struct PackSearch<'a> {
    view: ColorView<'a>,
    v: VertexId,
    nbrs: BTreeSet<VertexId>,
    target: usize,
    best: Vec<Vec<VertexId>>,
    steps: usize,
    budget: usize,
}

impl PackSearch<'_> {
    fn done(&self) -> bool {
        self.best.len() >= self.target || self.steps > self.budget
    }

    fn pack(
        &mut self,
        slots: &[VertexId],
        used: &mut BTreeSet<VertexId>,
        current: &mut Vec<Vec<VertexId>>,
    ) {
        self.steps += 1;
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if self.done() || current.len() + slots.len() / 2 <= self.best.len() {
            return;
        }
        let Some((&s, rest)) = slots.split_first() else {
            return;
        };
        for path in self.paths_from(s, rest, used) {
            let end = *path.last().expect("path has two ends");
            let remaining: Vec<VertexId> = rest.iter().copied().filter(|&x| x != end).collect();
            used.extend(path.iter().copied());
            current.push(path.clone());
            self.pack(&remaining, used, current);
            current.pop();
            for x in &path {
                used.remove(x);
            }
            if self.done() {
                return;
            }
        }
        used.insert(s);
        self.pack(rest, used, current);
        used.remove(&s);
    }

    /// Simple paths from `s` to another slot whose interior avoids the
    /// neighbourhood of `v` and `used`.
    fn paths_from(
        &mut self,
        s: VertexId,
        ends: &[VertexId],
        used: &BTreeSet<VertexId>,
    ) -> Vec<Vec<VertexId>> {
        let ends: BTreeSet<VertexId> = ends.iter().copied().filter(|x| !used.contains(x)).collect();
        let mut out = Vec::new();
        let mut path = vec![s];
        let mut on_path = BTreeSet::from([s]);
        self.extend(&mut path, &mut on_path, &ends, used, &mut out);
        out
    }

    fn extend(
        &mut self,
        path: &mut Vec<VertexId>,
        on_path: &mut BTreeSet<VertexId>,
        ends: &BTreeSet<VertexId>,
        used: &BTreeSet<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        self.steps += 1;
        if self.steps > self.budget {
            return;
        }
        let last = *path.last().expect("nonempty");
        let next: Vec<VertexId> = self.view.neighbors(last).map(|(y, _)| y).collect();
        for y in next {
            if y == self.v || on_path.contains(&y) || used.contains(&y) {
                continue;
            }
            if ends.contains(&y) {
                let mut p = path.clone();
                p.push(y);
                out.push(p);
            } else if !self.nbrs.contains(&y) {
                path.push(y);
                on_path.insert(y);
                self.extend(path, on_path, ends, used, out);
                on_path.remove(&y);
                path.pop();
            }
        }
    }
}

/// Some cycle through `v` avoiding `blocked`, as its vertices other than `v`.
pub(crate) fn cycle_through(
    view: ColorView<'_>,
    v: VertexId,
    blocked: &BTreeSet<VertexId>,
) -> Option<Vec<VertexId>> {
    let mut label: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (x, m) in view.neighbors(v) {
        if x == v || blocked.contains(&x) {
            continue;
        }
        if m >= 2 {
            return Some(vec![x]);
        }
        label.insert(x, x);
        queue.push_back(x);
    }
    let trace = |parent: &BTreeMap<VertexId, VertexId>, mut x: VertexId| {
        let mut out = vec![x];
        while let Some(&p) = parent.get(&x) {
            out.push(p);
            x = p;
        }
        out
    };
    while let Some(a) = queue.pop_front() {
        for (b, _) in view.neighbors(a) {
            if b == v || b == a || blocked.contains(&b) {
                continue;
            }
            match label.get(&b) {
                Some(&lb) if lb != label[&a] => {
                    let mut left = trace(&parent, a);
                    left.reverse();
                    left.extend(trace(&parent, b));
                    return Some(left);
                }
                Some(_) => {}
                None => {
                    label.insert(b, label[&a]);
                    parent.insert(b, a);
                    queue.push_back(b);
                }
            }
        }
    }
    None
}

/// Smallest set avoiding `v` that meets every cycle through `v`, if one of
/// size at most `limit` exists. `Err(())` when the budget runs out.
#[allow(clippy::result_unit_err)]
pub fn min_blocker(
    view: ColorView<'_>,
    v: VertexId,
    limit: usize,
    budget: usize,
) -> Result<Option<BTreeSet<VertexId>>, ()> {
    let mut steps = 0;
    for size in 0..=limit {
        let mut blocked = BTreeSet::new();
        match block(view, v, &mut blocked, size, &mut steps, budget) {
            Some(true) => return Ok(Some(blocked)),
            Some(false) => {}
            None => return Err(()),
        }
    }
    Ok(None)
}

fn block(
    view: ColorView<'_>,
    v: VertexId,
    blocked: &mut BTreeSet<VertexId>,
    left: usize,
    steps: &mut usize,
    budget: usize,
) -> Option<bool> {
    *steps += 1;
    if *steps > budget {
        return None;
    }
    let Some(cycle) = cycle_through(view, v, blocked) else {
        return Some(true);
    };
    if left == 0 {
        return Some(false);
    }
    for x in cycle {
        blocked.insert(x);
        if block(view, v, blocked, left - 1, steps, budget)? {
            return Some(true);
        }
        blocked.remove(&x);
    }
    Some(false)
}

/// A flower of order `k + 1` at `v`, or a feedback vertex set of `G_i`
/// avoiding `v`: a 2-approximate one for `G_i - v` plus a minimum blocker of
/// the cycles through `v` (at most `2k` vertices).
pub fn flower_or_avoiding_fvs(view: ColorView<'_>, v: VertexId, k: usize) -> Certificate {
    flower_or_avoiding_fvs_with(view, v, k, SEARCH_BUDGET)
}

pub fn flower_or_avoiding_fvs_with(
    view: ColorView<'_>,
    v: VertexId,
    k: usize,
    budget: usize,
) -> Certificate {
    let color = view.color();
    let flower = max_flower(view, v, k + 1, budget);
    if flower.cycles.len() > k {
        return Certificate::Flower {
            v,
            color,
            cycles: flower.cycles,
        };
    }
    match min_blocker(view, v, 2 * k, budget) {
        Ok(Some(blocker)) => {
            let rest = view.graph().without(&[v]);
            let mut h = two_approx_fvs(rest.view(color).expect("valid color"));
            h.extend(blocker);
            Certificate::AvoidingFvs { v, color, h }
        }
        _ => Certificate::Neither { v, color },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn double_edges_form_a_flower() {
        let k = 2;
        let mut g = EdgeColoredGraph::new(k + 2, 1);
        for x in 1..=k + 1 {
            g.add_edges(0, x, 1, 2).unwrap();
        }
        let cert = flower_or_avoiding_fvs(g.view(1).unwrap(), 0, k);
        assert_eq!(cert.order(), k + 1);
        cert.validate(&g).unwrap();
    }

    #[test]
    fn single_cycle_gives_one_vertex() {
        let mut g = EdgeColoredGraph::new(5, 1);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5, 1).unwrap();
        }
        let cert = flower_or_avoiding_fvs(g.view(1).unwrap(), 0, 1);
        match &cert {
            Certificate::AvoidingFvs { h, .. } => {
                assert_eq!(h.len(), 1);
                assert!(!h.contains(&0));
            }
            other => panic!("unexpected {other:?}"),
        }
        cert.validate(&g).unwrap();
    }

    #[test]
    fn validation_catches_shared_vertices() {
        let mut g = EdgeColoredGraph::new(4, 1);
        for (a, b) in [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)] {
            g.add_edge(a, b, 1).unwrap();
        }
        let bad = Certificate::Flower {
            v: 0,
            color: 1,
            cycles: vec![vec![1, 2], vec![3, 1]],
        };
        assert_eq!(bad.validate(&g), Err(CertificateError::SharedVertex(1)));
        let missing = Certificate::Flower {
            v: 0,
            color: 1,
            cycles: vec![vec![2, 3]],
        };
        assert_eq!(
            missing.validate(&g),
            Err(CertificateError::MissingEdge(2, 3, 1))
        );
    }

    /// Largest set of cycles through `v` sharing only `v`, by enumerating the
    /// vertex sets whose induced subgraph with `v` has a cycle through `v`.
    fn brute_flower(g: &EdgeColoredGraph, v: VertexId) -> usize {
        let others: Vec<VertexId> = g.vertices().filter(|&x| x != v).collect();
        let mut cycles: Vec<BTreeSet<VertexId>> = Vec::new();
        for mask in 1u32..(1 << others.len()) {
            let set: BTreeSet<VertexId> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let mut keep = set.clone();
            keep.insert(v);
            let sub = g.induced(&keep);
            if cycle_through(sub.view(1).unwrap(), v, &BTreeSet::new()).is_some() {
                cycles.push(set);
            }
        }
        fn best(cycles: &[BTreeSet<VertexId>], used: &BTreeSet<VertexId>) -> usize {
            let Some((c, rest)) = cycles.split_first() else {
                return 0;
            };
            let skip = best(rest, used);
            if c.is_disjoint(used) {
                let mut u = used.clone();
                u.extend(c.iter().copied());
                skip.max(1 + best(rest, &u))
            } else {
                skip
            }
        }
        best(&cycles, &BTreeSet::new())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn flower_matches_enumeration(n in 2usize..8, raw in proptest::collection::vec((0usize..8, 0usize..8), 0..16)) {
            let mut g = EdgeColoredGraph::new(n, 1);
            for (u, v) in raw {
                if u < n && v < n && u != v && g.multiplicity(u, v, 1) < 2 {
                    g.add_edge(u, v, 1).unwrap();
                }
            }
            let found = max_flower(g.view(1).unwrap(), 0, n, SEARCH_BUDGET);
            prop_assert!(found.complete);
            let cert = Certificate::Flower { v: 0, color: 1, cycles: found.cycles.clone() };
            prop_assert_eq!(cert.validate(&g), Ok(()));
            prop_assert_eq!(found.cycles.len(), brute_flower(&g, 0));
        }

        #[test]
        fn certificates_validate(n in 2usize..9, k in 0usize..3, raw in proptest::collection::vec((0usize..9, 0usize..9), 0..18)) {
            let mut g = EdgeColoredGraph::new(n, 1);
            for (u, v) in raw {
                if u < n && v < n && u != v && g.multiplicity(u, v, 1) < 2 {
                    g.add_edge(u, v, 1).unwrap();
                }
            }
            let cert = flower_or_avoiding_fvs(g.view(1).unwrap(), 0, k);
            let neither = matches!(cert, Certificate::Neither { .. });
            prop_assert!(!neither);
            prop_assert_eq!(cert.validate(&g), Ok(()));
            if let Certificate::Flower { cycles, .. } = &cert {
                prop_assert!(cycles.len() > k);
            }
        }
    }
}
