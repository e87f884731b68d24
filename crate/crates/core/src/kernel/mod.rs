//! Kernelization: degree bounding with R6 (flower) and R7 (expansion),
//! then path compression with R8 (unravel), interleaved with R1-R5.
//!
//! Tuples of degree-two paths grow exponentially with the number of colors;
//! the kernel is meant for `α ≤ 4`.

pub mod approx;
pub mod expansion;
pub mod flower;
pub mod paths;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

pub use approx::{two_approx_all, two_approx_fvs};
pub use expansion::{expansion_lemma, ExpansionError, ExpansionResult};
pub use flower::{
    flower_or_avoiding_fvs, flower_or_avoiding_fvs_with, Certificate, CertificateError,
};
pub use paths::{
    enumerate_deg2_paths, find_r8_site, unravel, PathError, PathFamily, PathTuple, R8Site,
};

use crate::graph::{EdgeColoredGraph, GraphError, VertexId};
use crate::reductions::{LiftError, Reducer, ReductionError, ReductionTrace, TraceEvent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("invalid certificate: {0}")]
    Certificate(#[from] CertificateError),
    #[error("certificate does not fit the rule")]
    WrongCertificate,
    #[error("budget exhausted")]
    Infeasible,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which vertices get a certificate in the degree phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Threshold {
    /// Degree at least `|H_v|(k + 4)` for the certificate actually found.
    #[default]
    Certificate,
    /// Degree at least `3k(k + 4)`.
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelConfig {
    pub threshold: Threshold,
    /// Step budget of each certificate search.
    pub search_budget: usize,
    /// Run the path phase (R8).
    pub unravel: bool,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig {
            threshold: Threshold::Certificate,
            search_budget: flower::SEARCH_BUDGET,
            unravel: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KernelStats {
    pub r6: usize,
    pub r7: usize,
    pub r8: usize,
    /// Largest avoiding set seen in the degree phase.
    pub h_max: usize,
    /// Certificate searches that ran out of budget.
    pub neither: usize,
    pub certificates: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelOutcome {
    Reduced,
    /// The input is a NO instance; the graph is the canonical NO instance.
    No,
}

#[derive(Debug, Clone)]
pub struct Kernel {
    pub graph: EdgeColoredGraph,
    pub k: usize,
    /// Vertices taken by R5 and R6, in input ids.
    pub forced: BTreeSet<VertexId>,
    pub trace: ReductionTrace,
    pub stats: KernelStats,
    pub outcome: KernelOutcome,
}

impl Kernel {
    pub fn is_no(&self) -> bool {
        self.outcome == KernelOutcome::No
    }

    /// Maps a solution of the kernel to a solution of the input graph.
    pub fn lift(&self, s: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, LiftError> {
        self.trace.lift(s)
    }
}

/// One vertex with a loop and budget 0.
pub fn canonical_no(alpha: usize) -> EdgeColoredGraph {
    let mut g = EdgeColoredGraph::new(1, alpha.max(1));
    g.add_edge(0, 0, 1).expect("vertex 0 and color 1 exist");
    g
}

/// Takes the center of a flower of order at least `k + 1`. Returns the new
/// budget and the event.
pub fn apply_r6(
    g: &mut EdgeColoredGraph,
    cert: &Certificate,
    k: usize,
) -> Result<(usize, TraceEvent), KernelError> {
    let Certificate::Flower { v, color, cycles } = cert else {
        return Err(KernelError::WrongCertificate);
    };
    cert.validate(g)?;
    if cycles.len() <= k {
        return Err(KernelError::WrongCertificate);
    }
    if k == 0 {
        return Err(KernelError::Infeasible);
    }
    let event = TraceEvent::R6Take {
        v: *v,
        color: *color,
    };
    event.apply(g)?;
    Ok((k - 1, event))
}

/// Expansion rule at `v` with an avoiding set `H_v`. Returns `None` when the
/// rule does not apply: empty `H_v`, degree below `|H_v|(k + 4)`, or too
/// few components to expand into.
pub fn apply_r7(
    g: &mut EdgeColoredGraph,
    cert: &Certificate,
    k: usize,
) -> Result<Option<TraceEvent>, KernelError> {
    let Certificate::AvoidingFvs { v, color, h } = cert else {
        return Err(KernelError::WrongCertificate);
    };
    cert.validate(g)?;
    let (v, color) = (*v, *color);
    if h.is_empty() || g.degree(v, color)? < h.len() * (k + 4) {
        return Ok(None);
    }
    // components of G_i - (H_v + v) hanging off v, each with its single attachment
    let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut attach: Vec<VertexId> = Vec::new();
    for (d, _) in g.neighbors(v, color) {
        if d == v || h.contains(&d) || comp_of.contains_key(&d) {
            continue;
        }
        let id = attach.len();
        attach.push(d);
        let mut queue = VecDeque::from([d]);
        comp_of.insert(d, id);
        while let Some(x) = queue.pop_front() {
            for (y, _) in g.neighbors(x, color) {
                if y != v && !h.contains(&y) && !comp_of.contains_key(&y) {
                    comp_of.insert(y, id);
                    queue.push_back(y);
                }
            }
        }
    }
    let hs: Vec<VertexId> = h.iter().copied().collect();
    let mut touched: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (ai, &x) in hs.iter().enumerate() {
        for (y, _) in g.neighbors(x, color) {
            if let Some(&q) = comp_of.get(&y) {
                touched.insert((ai, q));
            }
        }
    }
    // components without an edge to H_v cannot be expanded into
    let useful: Vec<usize> = (0..attach.len())
        .filter(|q| touched.iter().any(|e| e.1 == *q))
        .collect();
    let index: BTreeMap<usize, usize> = useful.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let edges: Vec<(usize, usize)> = touched.iter().map(|&(a, q)| (a, index[&q])).collect();
    let q = k + 2;
    if useful.len() < q * hs.len() {
        return Ok(None);
    }
    let exp = match expansion_lemma(hs.len(), useful.len(), &edges, q) {
        Ok(e) => e,
        Err(_) => return Ok(None),
    };
    let removed: Vec<VertexId> = exp.y.iter().map(|&i| attach[useful[i]]).collect();
    let doubled: Vec<VertexId> = exp.x.iter().map(|&a| hs[a]).collect();
    let event = TraceEvent::R7Rewire {
        v,
        color,
        hitting: hs,
        removed,
        doubled,
    };
    event.apply(g)?;
    Ok(Some(event))
}

/// [`kernelize_with`] under the default configuration.
pub fn kernelize(g: &EdgeColoredGraph, k: usize) -> Kernel {
    kernelize_with(g, k, &KernelConfig::default())
}

/// Exhausts R1-R8. Rules R6/R7 fire only on validated certificates; after
/// every change R1-R5 run to exhaustion again.
pub fn kernelize_with(g: &EdgeColoredGraph, k: usize, config: &KernelConfig) -> Kernel {
    let mut state = Kernel {
        graph: g.clone(),
        k,
        forced: BTreeSet::new(),
        trace: ReductionTrace::new(),
        stats: KernelStats::default(),
        outcome: KernelOutcome::Reduced,
    };
    if cleanup(&mut state).is_err() {
        return reject(state, g.alpha());
    }
    loop {
        let approx = two_approx_all(&state.graph);
        if approx.iter().any(|s| s.len() > 2 * state.k) {
            return reject(state, g.alpha());
        }
        match degree_step(&mut state, config) {
            Err(()) => return reject(state, g.alpha()),
            Ok(true) => {
                if cleanup(&mut state).is_err() {
                    return reject(state, g.alpha());
                }
                continue;
            }
            Ok(false) => {}
        }
        if config.unravel {
            let fam =
                PathFamily::new(&state.graph, &approx).expect("approximate sets are feedback sets");
            if let Some(site) = find_r8_site(&state.graph, &fam) {
                let event = unravel(
                    &mut state.graph,
                    &fam,
                    site.color,
                    site.index,
                    &site.tuple,
                    site.u,
                )
                .expect("site satisfies the guard");
                state.trace.push(event);
                state.stats.r8 += 1;
                if cleanup(&mut state).is_err() {
                    return reject(state, g.alpha());
                }
                continue;
            }
        }
        return state;
    }
}

fn reject(mut state: Kernel, alpha: usize) -> Kernel {
    state.graph = canonical_no(alpha);
    state.k = 0;
    state.outcome = KernelOutcome::No;
    state
}

fn cleanup(state: &mut Kernel) -> Result<(), ReductionError> {
    let none = BTreeSet::new();
    let graph = std::mem::replace(&mut state.graph, EdgeColoredGraph::new(0, 0));
    let mut r = Reducer::new(graph, state.k, &none, &none, true);
    let outcome = r.exhaust();
    let reduced = r.finish();
    state.graph = reduced.graph;
    state.k = reduced.k;
    state.forced.extend(reduced.forced);
    state.trace.extend(reduced.trace);
    outcome
}

/// One R6 or R7 application at the first vertex that qualifies. `Err` means NO.
fn degree_step(state: &mut Kernel, config: &KernelConfig) -> Result<bool, ()> {
    let k = state.k;
    let floor = match config.threshold {
        Threshold::Certificate => k + 4,
        Threshold::Quadratic => (3 * k * (k + 4)).max(1),
    };
    for color in 1..=state.graph.alpha() {
        let candidates: Vec<VertexId> = state
            .graph
            .vertices()
            .filter(|&v| state.graph.deg(v, color) >= floor)
            .collect();
        for v in candidates {
            let cert = flower_or_avoiding_fvs_with(
                state.graph.view(color).expect("valid color"),
                v,
                k,
                config.search_budget,
            );
            state.stats.certificates += 1;
            match &cert {
                Certificate::Flower { .. } => {
                    let (k2, event) = apply_r6(&mut state.graph, &cert, k).map_err(|_| ())?;
                    state.k = k2;
                    state.forced.insert(v);
                    state.trace.push(event);
                    state.stats.r6 += 1;
                    return Ok(true);
                }
                Certificate::AvoidingFvs { h, .. } => {
                    state.stats.h_max = state.stats.h_max.max(h.len());
                    if let Some(event) =
                        apply_r7(&mut state.graph, &cert, k).expect("certificate was just built")
                    {
                        state.trace.push(event);
                        state.stats.r7 += 1;
                        return Ok(true);
                    }
                }
                Certificate::Neither { .. } => state.stats.neither += 1,
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_min_simfvs;

    fn oracle(g: &EdgeColoredGraph, k: usize) -> bool {
        brute_force_min_simfvs(g, k, &BTreeSet::new())
            .unwrap()
            .is_yes(k)
    }

    /// `v = 0` and `h = 1` joined through `m` middle vertices, which also form a color-2 cycle.
    fn hub(m: usize) -> EdgeColoredGraph {
        let mut g = EdgeColoredGraph::new(m + 2, 2);
        for j in 0..m {
            let c = j + 2;
            g.add_edge(0, c, 1).unwrap();
            g.add_edge(c, 1, 1).unwrap();
            g.add_edge(c, (j + 1) % m + 2, 2).unwrap();
        }
        g
    }

    #[test]
    fn r7_single_star() {
        let k = 1;
        let mut g = hub(k + 4);
        let cert = flower_or_avoiding_fvs(g.view(1).unwrap(), 0, k);
        assert_eq!(
            cert,
            Certificate::AvoidingFvs {
                v: 0,
                color: 1,
                h: [1].into()
            }
        );
        let before = oracle(&g, k);
        let ev = apply_r7(&mut g, &cert, k).unwrap().unwrap();
        match ev {
            TraceEvent::R7Rewire {
                removed, doubled, ..
            } => {
                assert_eq!(removed.len(), k + 4);
                assert_eq!(doubled, vec![1]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(g.multiplicity(0, 1, 1), 2);
        assert_eq!(g.degree(0, 1).unwrap(), 2);
        assert_eq!(before, oracle(&g, k));
    }

    #[test]
    fn r6_takes_flower_center() {
        let mut g = EdgeColoredGraph::new(3, 1);
        g.add_edges(0, 1, 1, 2).unwrap();
        g.add_edges(0, 2, 1, 2).unwrap();
        let cert = flower_or_avoiding_fvs(g.view(1).unwrap(), 0, 1);
        let (k, ev) = apply_r6(&mut g, &cert, 1).unwrap();
        assert_eq!(k, 0);
        assert_eq!(ev, TraceEvent::R6Take { v: 0, color: 1 });
        assert!(!g.contains(0));
        let mut h = EdgeColoredGraph::new(2, 1);
        h.add_edges(0, 1, 1, 2).unwrap();
        let cert = flower_or_avoiding_fvs(h.view(1).unwrap(), 0, 0);
        assert_eq!(apply_r6(&mut h, &cert, 0), Err(KernelError::Infeasible));
    }

    #[test]
    fn kernel_of_hub_matches_oracle() {
        for k in 1..=2 {
            let g = hub(8);
            let ker = kernelize(&g, k);
            let yes = oracle(&g, k);
            let kyes = !ker.is_no() && oracle(&ker.graph, ker.k);
            assert_eq!(yes, kyes, "k = {k}");
            assert!(ker.graph.num_vertices() <= g.num_vertices());
        }
    }

    #[test]
    fn already_reduced_instance_only_uses_cleanup() {
        // K4 in both colors: no high degree, no degree-two vertices
        let mut g = EdgeColoredGraph::new(4, 2);
        for (a, b) in [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)] {
            g.add_edge(a, b, 1).unwrap();
            g.add_edge(a, b, 2).unwrap();
        }
        let ker = kernelize(&g, 2);
        assert_eq!(ker.graph, g);
        assert_eq!(ker.stats.r6 + ker.stats.r7 + ker.stats.r8, 0);
        assert!(!ker.is_no());
    }

    #[test]
    fn early_rejection() {
        let mut g = EdgeColoredGraph::new(6, 1);
        for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            g.add_edge(a, b, 1).unwrap();
        }
        let ker = kernelize(&g, 1);
        assert!(ker.is_no());
        assert_eq!(ker.graph, canonical_no(1));
    }
}
