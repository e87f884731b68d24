//! Exact solver: iterative compression around the disjoint branching search.

mod base;
mod cordate;
mod disjoint;
mod measure;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeColoredGraph, GraphError, VertexId};
use crate::oracle::verify_solution;
use crate::reductions::{reduce_exhaustive, ReductionError};

pub use base::{
    base_hitting_set, base_matching_alpha2, matching_hitting_set, min_hitting_set, BaseCaseError,
    MAX_DP_SETS,
};
pub use cordate::{find_cordate, CordateWitness};
pub use disjoint::{disjoint_solve, DisjointInstance};
pub use measure::{components_in_w, Branch, Case, Measure, MeasureViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseCase {
    /// Dynamic programming over subsets of the special-cycle family.
    #[default]
    HittingSet,
    /// Maximum matching between the two cycle families; only used when there
    /// are two colors, otherwise falls back to the dynamic program.
    Matching,
}

#[derive(Debug, Clone, Default)]
pub struct SolverConfig {
    pub base: BaseCase,
    /// Count `W` components with weight one half (two colors only).
    pub alpha2_measure: bool,
    /// Try the guesses of one compression step on the rayon pool.
    pub parallel: bool,
}

impl SolverConfig {
    /// The two-color configuration: matching base case and half-weight measure.
    pub fn alpha2() -> Self {
        SolverConfig {
            base: BaseCase::Matching,
            alpha2_measure: true,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub nodes: u64,
    pub base_calls: u64,
    pub compressions: u64,
    pub max_depth: usize,
    /// Largest measure seen at the root of a disjoint search, in half units.
    pub root_measure: i64,
    pub branch_edges: BTreeMap<(Case, Branch), u64>,
    pub violation_count: u64,
    /// The first few violations, for diagnostics.
    pub violations: Vec<MeasureViolation>,
}

impl SolverStats {
    pub fn merge(&mut self, other: SolverStats) {
        self.nodes += other.nodes;
        self.base_calls += other.base_calls;
        self.compressions += other.compressions;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.root_measure = self.root_measure.max(other.root_measure);
        for (key, n) in other.branch_edges {
            *self.branch_edges.entry(key).or_insert(0) += n;
        }
        self.violation_count += other.violation_count;
        let room = 32usize.saturating_sub(self.violations.len());
        self.violations
            .extend(other.violations.into_iter().take(room));
    }

    pub fn total_branch_edges(&self) -> u64 {
        self.branch_edges.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("the given set is not a simultaneous feedback vertex set")]
    NotAFeedbackSet,
    #[error("expected one special-cycle family per color, got {0}")]
    CycleFamilies(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solution: Option<BTreeSet<VertexId>>,
    pub stats: SolverStats,
}

/// A simultaneous feedback vertex set of size at most `k`, or `None` if none exists.
pub fn solve(g: &EdgeColoredGraph, k: usize) -> Option<BTreeSet<VertexId>> {
    solve_with(g, k, &SolverConfig::default()).solution
}

pub fn solve_with(g: &EdgeColoredGraph, k: usize, config: &SolverConfig) -> SolveReport {
    let mut stats = SolverStats::default();
    let reduced = match reduce_exhaustive(g, k, &BTreeSet::new()) {
        Ok(r) => r,
        Err(ReductionError::BudgetExceeded) => {
            return SolveReport {
                solution: None,
                stats,
            }
        }
        Err(e) => panic!("top-level reduction failed: {e}"),
    };
    let inner = iterative_compression(&reduced.graph, reduced.k, config, &mut stats);
    let solution = inner.map(|s| {
        let lifted = reduced
            .trace
            .lift(&s)
            .expect("solution lives in the reduced graph");
        debug_assert!(verify_solution(g, &lifted).unwrap_or(false));
        lifted
    });
    SolveReport { solution, stats }
}

/// Adds vertices in ascending id order, keeping a solution of the induced
/// graph and compressing whenever it grows past `k`.
fn iterative_compression(
    g: &EdgeColoredGraph,
    k: usize,
    config: &SolverConfig,
    stats: &mut SolverStats,
) -> Option<BTreeSet<VertexId>> {
    let mut prefix = BTreeSet::new();
    let mut sol: BTreeSet<VertexId> = BTreeSet::new();
    for v in g.vertices() {
        prefix.insert(v);
        let gj = g.induced(&prefix);
        if verify_solution(&gj, &sol).expect("solution vertices are live") {
            continue;
        }
        sol.insert(v);
        if sol.len() > k {
            stats.compressions += 1;
            sol = compress_with(&gj, &sol, k, config, stats)
                .expect("running solution is a feedback set")?;
        }
    }
    Some(sol)
}

/// Given a solution `w_plus` of size `k + 1`, finds one of size at most `k`.
pub fn compress(
    g: &EdgeColoredGraph,
    w_plus: &BTreeSet<VertexId>,
    k: usize,
) -> Result<Option<BTreeSet<VertexId>>, SolverError> {
    compress_with(
        g,
        w_plus,
        k,
        &SolverConfig::default(),
        &mut SolverStats::default(),
    )
}

pub fn compress_with(
    g: &EdgeColoredGraph,
    w_plus: &BTreeSet<VertexId>,
    k: usize,
    config: &SolverConfig,
    stats: &mut SolverStats,
) -> Result<Option<BTreeSet<VertexId>>, SolverError> {
    if !verify_solution(g, w_plus)? {
        return Err(SolverError::NotAFeedbackSet);
    }
    let members: Vec<VertexId> = w_plus.iter().copied().collect();
    let guesses: Vec<Vec<VertexId>> = (0..=k.min(members.len()))
        .flat_map(|size| members.iter().copied().combinations(size))
        .collect();
    let attempt = |y: &Vec<VertexId>, stats: &mut SolverStats| -> Option<BTreeSet<VertexId>> {
        let keep: BTreeSet<VertexId> = members.iter().copied().filter(|v| !y.contains(v)).collect();
        if !g.induced(&keep).is_alpha_forest() {
            return None;
        }
        let inst = DisjointInstance::new(g.without(y), keep, k - y.len());
        let x = disjoint_solve(&inst, config, stats)
            .expect("guess leaves a valid disjoint instance")?;
        Some(x.into_iter().chain(y.iter().copied()).collect())
    };
    if config.parallel {
        let shared = Mutex::new(SolverStats::default());
        let found = guesses.par_iter().find_map_first(|y| {
            let mut local = SolverStats::default();
            let out = attempt(y, &mut local);
            shared.lock().expect("stats lock").merge(local);
            out
        });
        stats.merge(shared.into_inner().expect("stats lock"));
        Ok(found)
    } else {
        Ok(guesses.iter().find_map(|y| attempt(y, stats)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_min_simfvs;

    #[test]
    fn forest_needs_nothing() {
        let mut g = EdgeColoredGraph::new(3, 2);
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 2).unwrap();
        assert_eq!(solve(&g, 0), Some(BTreeSet::new()));
    }

    #[test]
    fn shared_double_edges() {
        let mut g = EdgeColoredGraph::new(2, 2);
        g.add_edges(0, 1, 1, 2).unwrap();
        g.add_edges(0, 1, 2, 2).unwrap();
        let s = solve(&g, 1).unwrap();
        assert_eq!(s.len(), 1);
        assert!(verify_solution(&g, &s).unwrap());
    }

    #[test]
    fn two_triangles_need_two() {
        let mut g = EdgeColoredGraph::new(6, 2);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            g.add_edge(u, v, 1).unwrap();
        }
        assert_eq!(solve(&g, 1), None);
        assert_eq!(solve(&g, 2).map(|s| s.len()), Some(2));
    }

    #[test]
    fn compress_triangle() {
        let mut g = EdgeColoredGraph::new(3, 1);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            g.add_edge(u, v, 1).unwrap();
        }
        let s = compress(&g, &[0, 1].into(), 1).unwrap().unwrap();
        assert_eq!(s.len(), 1);
        assert!(compress(&g, &[0].into(), 0).unwrap().is_none());
        assert_eq!(
            compress(&g, &BTreeSet::new(), 0),
            Err(SolverError::NotAFeedbackSet)
        );
    }

    #[test]
    fn disjoint_examples() {
        let g = EdgeColoredGraph::new(2, 2);
        let inst = DisjointInstance::new(g, [0, 1].into(), 0);
        let mut stats = SolverStats::default();
        let cfg = SolverConfig::default();
        assert_eq!(
            disjoint_solve(&inst, &cfg, &mut stats).unwrap(),
            Some(BTreeSet::new())
        );

        // cycle 0-1-2 with W = {0, 1}: vertex 2 is the only deletable one
        let mut g = EdgeColoredGraph::new(3, 1);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            g.add_edge(u, v, 1).unwrap();
        }
        let inst = DisjointInstance::new(g.clone(), [0, 1].into(), 1);
        assert_eq!(
            disjoint_solve(&inst, &cfg, &mut stats).unwrap(),
            Some([2].into())
        );
        let inst = DisjointInstance::new(g, [0, 1].into(), 0);
        assert_eq!(disjoint_solve(&inst, &cfg, &mut stats).unwrap(), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = EdgeColoredGraph> {
            (2usize..9, 1usize..4).prop_flat_map(|(n, alpha)| {
                proptest::collection::vec((0..n, 0..n, 1..=alpha), 0..22).prop_map(move |es| {
                    let mut g = EdgeColoredGraph::new(n, alpha);
                    for (u, v, c) in es {
                        g.add_edge(u, v, c).unwrap();
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn solve_matches_oracle(g in arb_graph(), k in 0usize..4) {
                let truth = brute_force_min_simfvs(&g, k, &BTreeSet::new()).unwrap();
                let got = solve(&g, k);
                prop_assert_eq!(got.is_some(), truth.is_yes(k));
                if let Some(s) = got {
                    prop_assert!(s.len() <= k);
                    prop_assert!(verify_solution(&g, &s).unwrap());
                }
            }

            #[test]
            fn alpha2_configuration_agrees(g in arb_graph(), k in 0usize..4) {
                let a = solve(&g, k).is_some();
                let b = solve_with(&g, k, &SolverConfig::alpha2()).solution.is_some();
                prop_assert_eq!(a, b);
            }

            #[test]
            fn disjoint_matches_avoiding_oracle(g in arb_graph(), k in 0usize..4, pick in any::<u64>()) {
                // W: a greedy feedback set seeded by `pick`
                let mut w = BTreeSet::new();
                let order: Vec<VertexId> = {
                    let mut vs: Vec<VertexId> = g.vertices().collect();
                    vs.sort_by_key(|v| (pick.rotate_left(*v as u32) & 0xff, *v));
                    vs
                };
                for v in order {
                    if verify_solution(&g, &w).unwrap() { break; }
                    w.insert(v);
                }
                let inst = DisjointInstance::new(g.clone(), w.clone(), k);
                let mut stats = SolverStats::default();
                let got = disjoint_solve(&inst, &SolverConfig::default(), &mut stats).unwrap();
                let truth = brute_force_min_simfvs(&g, k, &w).unwrap();
                prop_assert_eq!(got.is_some(), truth.is_yes(k));
                if let Some(x) = got {
                    prop_assert!(x.is_disjoint(&w));
                    prop_assert!(x.len() <= k);
                    prop_assert!(verify_solution(&g, &x).unwrap());
                }
            }
        }
    }
}
