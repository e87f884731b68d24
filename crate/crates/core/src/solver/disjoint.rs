//! Branching search for the disjoint variant: find a solution avoiding `W`
//! that also hits every special cycle.

use std::collections::BTreeSet;

use crate::graph::{ColorId, EdgeColoredGraph, VertexId};
use crate::reductions::{Reducer, ReductionError};

use super::base::{base_hitting_set, base_matching_alpha2};
use super::cordate::{find_cordate, CordateWitness};
use super::measure::{Branch, Case, Measure, MeasureViolation};
use super::{BaseCase, SolverConfig, SolverError, SolverStats};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointInstance {
    pub graph: EdgeColoredGraph,
    /// Undeletable vertices.
    pub w: BTreeSet<VertexId>,
    pub k: usize,
    /// `cycles[i - 1]` holds the special cycles of color `i` as vertex sets.
    pub cycles: Vec<Vec<BTreeSet<VertexId>>>,
}

impl DisjointInstance {
    pub fn new(graph: EdgeColoredGraph, w: BTreeSet<VertexId>, k: usize) -> Self {
        let alpha = graph.alpha();
        DisjointInstance {
            graph,
            w,
            k,
            cycles: vec![Vec::new(); alpha],
        }
    }

    fn special_vertices(&self) -> BTreeSet<VertexId> {
        self.cycles.iter().flatten().flatten().copied().collect()
    }

    /// Drops special cycles containing `v`. Returns how many were dropped.
    fn purge(&mut self, v: VertexId) -> usize {
        let mut dropped = 0;
        for list in &mut self.cycles {
            let before = list.len();
            list.retain(|c| !c.contains(&v));
            dropped += before - list.len();
        }
        dropped
    }
}

/// Decides the disjoint instance. Returns a solution avoiding `W` of size at
/// most `k` that hits every special cycle, or `None`.
pub fn disjoint_solve(
    inst: &DisjointInstance,
    config: &SolverConfig,
    stats: &mut SolverStats,
) -> Result<Option<BTreeSet<VertexId>>, SolverError> {
    let g = &inst.graph;
    for &v in &inst.w {
        g.check_vertex(v)?;
    }
    if inst.cycles.len() != g.alpha() {
        return Err(SolverError::CycleFamilies(inst.cycles.len()));
    }
    let rest = g.without(&inst.w);
    if !rest.is_alpha_forest() {
        return Err(SolverError::NotAFeedbackSet);
    }
    if !g.induced(&inst.w).is_alpha_forest() {
        return Ok(None);
    }
    let root = Measure::of(inst, config.alpha2_measure);
    stats.root_measure = stats.root_measure.max(root.halves);
    let mut search = Search { config, stats };
    Ok(search.run(inst.clone(), BTreeSet::new(), 0))
}

struct Search<'a> {
    config: &'a SolverConfig,
    stats: &'a mut SolverStats,
}

impl Search<'_> {
    fn run(
        &mut self,
        mut inst: DisjointInstance,
        mut taken: BTreeSet<VertexId>,
        depth: usize,
    ) -> Option<BTreeSet<VertexId>> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if !self.reduce(&mut inst, &mut taken) {
            return None;
        }
        if inst.cycles.iter().any(|c| c.len() > inst.k) {
            return None;
        }
        let color = (1..=inst.graph.alpha()).find(|&c| inst.graph.cycle_in(c, None).is_some());
        let Some(color) = color else {
            return self.base(&inst, taken);
        };
        let wit = find_cordate(&inst, color).expect("a cycle through W yields a cordate vertex");
        self.branch(inst, taken, wit, depth)
    }

    /// Exhausts R1-R5 with `W` frozen and special-cycle vertices protected.
    fn reduce(&mut self, inst: &mut DisjointInstance, taken: &mut BTreeSet<VertexId>) -> bool {
        let protected = inst.special_vertices();
        let graph = std::mem::replace(&mut inst.graph, EdgeColoredGraph::new(0, 0));
        let mut r = Reducer::new(graph, inst.k, &inst.w, &protected, false);
        let outcome = r.exhaust();
        let reduced = r.finish();
        inst.graph = reduced.graph;
        inst.k = reduced.k;
        match outcome {
            Err(ReductionError::BudgetExceeded) | Err(ReductionError::FrozenLoop(_)) => false,
            Err(ReductionError::Graph(e)) => panic!("reduction on a consistent graph failed: {e}"),
            Ok(()) => {
                for v in reduced.forced {
                    inst.purge(v);
                    taken.insert(v);
                }
                true
            }
        }
    }

    fn base(
        &mut self,
        inst: &DisjointInstance,
        taken: BTreeSet<VertexId>,
    ) -> Option<BTreeSet<VertexId>> {
        self.stats.base_calls += 1;
        let hit = match self.config.base {
            BaseCase::Matching if inst.cycles.len() == 2 => {
                base_matching_alpha2(&inst.cycles[0], &inst.cycles[1], inst.k)
            }
            _ => {
                let family: Vec<BTreeSet<VertexId>> =
                    inst.cycles.iter().flatten().cloned().collect();
                base_hitting_set(&family, inst.k)
            }
        }
        .expect("special cycles of one color are disjoint and at most alpha*k");
        hit.map(|h| taken.into_iter().chain(h).collect())
    }

    fn branch(
        &mut self,
        inst: DisjointInstance,
        taken: BTreeSet<VertexId>,
        wit: CordateWitness,
        depth: usize,
    ) -> Option<BTreeSet<VertexId>> {
        let case = if wit.same_component {
            Case::SameComponent
        } else {
            Case::DifferentComponents
        };
        let before = Measure::of(&inst, self.config.alpha2_measure);
        let c = wit.color;
        for b in Branch::ALL {
            let child = match b {
                Branch::TakeCordate => take(&inst, &taken, wit.vc),
                Branch::IsolateNear if wit.p.len() > 1 => isolate(&inst, &taken, c, &wit.p),
                Branch::IsolateFar if wit.p_prime.len() > 1 => {
                    let rev: Vec<VertexId> = wit.p_prime.iter().rev().copied().collect();
                    isolate(&inst, &taken, c, &rev)
                }
                Branch::MoveToW if case == Case::DifferentComponents => {
                    move_to_w(&inst, &taken, &wit.full_path())
                }
                _ => None,
            };
            let Some((child, child_taken, purged)) = child else {
                continue;
            };
            self.record(case, b, before, &child, purged);
            if let Some(sol) = self.run(child, child_taken, depth + 1) {
                return Some(sol);
            }
        }
        None
    }

    fn record(
        &mut self,
        case: Case,
        b: Branch,
        before: Measure,
        child: &DisjointInstance,
        purged: usize,
    ) {
        let after = Measure::of(child, self.config.alpha2_measure);
        let alpha = child.graph.alpha();
        *self.stats.branch_edges.entry((case, b)).or_insert(0) += 1;
        if !b.drop_ok(
            before.halves - after.halves,
            alpha,
            self.config.alpha2_measure,
        ) {
            self.stats.violation_count += 1;
            if self.stats.violations.len() < 32 {
                self.stats.violations.push(MeasureViolation {
                    case,
                    branch: b,
                    before,
                    after,
                    purged,
                });
            }
        }
    }
}

type Child = (DisjointInstance, BTreeSet<VertexId>, usize);

fn take(inst: &DisjointInstance, taken: &BTreeSet<VertexId>, v: VertexId) -> Option<Child> {
    if inst.k == 0 {
        return None;
    }
    let mut child = inst.clone();
    child
        .graph
        .remove_vertex(v)
        .expect("cordate vertex is live");
    child.k -= 1;
    let purged = child.purge(v);
    let mut t = taken.clone();
    t.insert(v);
    Some((child, t, purged))
}

/// Records `path[..len-1]` as a special cycle and deletes the path edges,
/// including the edge into the last vertex.
fn isolate(
    inst: &DisjointInstance,
    taken: &BTreeSet<VertexId>,
    color: ColorId,
    path: &[VertexId],
) -> Option<Child> {
    let mut child = inst.clone();
    for pair in path.windows(2) {
        child
            .graph
            .set_multiplicity(pair[0], pair[1], color, 0)
            .expect("path vertices are live");
    }
    let cycle: BTreeSet<VertexId> = path[..path.len() - 1].iter().copied().collect();
    debug_assert!(child.cycles[color - 1]
        .iter()
        .all(|c| c.is_disjoint(&cycle)));
    child.cycles[color - 1].push(cycle);
    Some((child, taken.clone(), 0))
}

fn move_to_w(
    inst: &DisjointInstance,
    taken: &BTreeSet<VertexId>,
    path: &[VertexId],
) -> Option<Child> {
    let mut child = inst.clone();
    child.w.extend(path.iter().copied());
    if !child.graph.induced(&child.w).is_alpha_forest() {
        return None;
    }
    let mut purged = 0;
    for list in &mut child.cycles {
        for c in list.iter_mut() {
            for v in path {
                c.remove(v);
            }
        }
        let before = list.len();
        list.retain(|c| !c.is_empty());
        purged += before - list.len();
    }
    if purged > 0 {
        // a special cycle fully inside W can no longer be hit
        return None;
    }
    Some((child, taken.clone(), 0))
}
