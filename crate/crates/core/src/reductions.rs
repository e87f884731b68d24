//! Cleanup rules R1-R5 and the trace used to lift solutions.
//!
//! | rule | effect |
//! |------|--------|
//! | R1 | delete an isolated vertex |
//! | R2 | drop the edge at a vertex of degree exactly 1 in some color |
//! | R3 | bypass a vertex of total degree 2 whose edges share a color |
//! | R4 | cap a multiplicity above 2 at 2 |
//! | R5 | take a vertex carrying a loop |
//!
//! The lowest-numbered applicable rule is applied first, scanning vertices by
//! ascending id. Kernel rules R6-R8 record into the same [`ReductionTrace`].

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{ColorId, EdgeColoredGraph, GraphError, OriginTag, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl Rule {
    pub const CLEANUP: [Rule; 5] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    R1Delete {
        v: VertexId,
    },
    R2EdgeDrop {
        v: VertexId,
        u: VertexId,
        color: ColorId,
    },
    /// `u == w` turns a double edge at `v` into a loop at `u`.
    R3Bypass {
        v: VertexId,
        u: VertexId,
        w: VertexId,
        color: ColorId,
    },
    R4Cap {
        u: VertexId,
        v: VertexId,
        color: ColorId,
    },
    R5Take {
        v: VertexId,
    },
    R6Take {
        v: VertexId,
        color: ColorId,
    },
    R7Rewire {
        v: VertexId,
        color: ColorId,
        hitting: Vec<VertexId>,
        removed: Vec<VertexId>,
        doubled: Vec<VertexId>,
    },
    /// Each copy takes over all color-`t` edges of `u`.
    R8Unravel {
        u: VertexId,
        copies: Vec<(ColorId, VertexId)>,
    },
}

impl TraceEvent {
    pub fn rule(&self) -> Rule {
        match self {
            TraceEvent::R1Delete { .. } => Rule::R1,
            TraceEvent::R2EdgeDrop { .. } => Rule::R2,
            TraceEvent::R3Bypass { .. } => Rule::R3,
            TraceEvent::R4Cap { .. } => Rule::R4,
            TraceEvent::R5Take { .. } => Rule::R5,
            TraceEvent::R6Take { .. } => Rule::R6,
            TraceEvent::R7Rewire { .. } => Rule::R7,
            TraceEvent::R8Unravel { .. } => Rule::R8,
        }
    }

    /// Applies the event to `g`. Used for replay and by the rules themselves.
    pub fn apply(&self, g: &mut EdgeColoredGraph) -> Result<(), GraphError> {
        match *self {
            TraceEvent::R1Delete { v }
            | TraceEvent::R5Take { v }
            | TraceEvent::R6Take { v, .. } => g.remove_vertex(v),
            TraceEvent::R2EdgeDrop { v, u, color } => g.remove_edge(v, u, color).map(|_| ()),
            TraceEvent::R3Bypass { v, u, w, color } => {
                g.remove_vertex(v)?;
                g.add_edge(u, w, color)
            }
            TraceEvent::R4Cap { u, v, color } => g.set_multiplicity(u, v, color, 2),
            TraceEvent::R7Rewire {
                v,
                color,
                ref removed,
                ref doubled,
                ..
            } => {
                for &d in removed {
                    g.set_multiplicity(v, d, color, 0)?;
                }
                for &h in doubled {
                    g.set_multiplicity(v, h, color, 2)?;
                }
                Ok(())
            }
            TraceEvent::R8Unravel { u, ref copies } => {
                for &(t, copy) in copies {
                    let origin = g.origin(u)?.original();
                    let fresh = g.add_vertex(OriginTag::CopyOf(origin));
                    if fresh != copy {
                        return Err(GraphError::UnknownVertex(copy));
                    }
                    let nbrs: Vec<(VertexId, u32)> = g.neighbors(u, t).collect();
                    for (x, m) in nbrs {
                        g.set_multiplicity(u, x, t, 0)?;
                        g.add_edges(copy, x, t, m)?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("vertex {0} was deleted by the trace and cannot appear in a solution")]
    DeletedVertex(VertexId),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub events: Vec<TraceEvent>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: TraceEvent) {
        self.events.push(e);
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.events.extend(other.events);
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Number of events per rule, indexed `R1..=R8`.
    pub fn counts(&self) -> [usize; 8] {
        let mut out = [0; 8];
        for e in &self.events {
            out[e.rule() as usize] += 1;
        }
        out
    }

    /// Replays every event on a copy of `g`.
    pub fn replay(&self, g: &EdgeColoredGraph) -> Result<EdgeColoredGraph, GraphError> {
        let mut h = g.clone();
        for e in &self.events {
            e.apply(&mut h)?;
        }
        Ok(h)
    }

    /// Maps a solution of the reduced graph back to the graph the trace started from.
    /// Unravel copies are replaced by their vertex; taken vertices are added.
    pub fn lift(&self, s: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, LiftError> {
        let mut out = s.clone();
        for e in self.events.iter().rev() {
            match e {
                TraceEvent::R1Delete { v } | TraceEvent::R3Bypass { v, .. } => {
                    if out.contains(v) {
                        return Err(LiftError::DeletedVertex(*v));
                    }
                }
                TraceEvent::R5Take { v } | TraceEvent::R6Take { v, .. } => {
                    out.insert(*v);
                }
                TraceEvent::R8Unravel { u, copies } => {
                    let mut hit = false;
                    for (_, c) in copies {
                        hit |= out.remove(c);
                    }
                    if hit {
                        out.insert(*u);
                    }
                }
                TraceEvent::R2EdgeDrop { .. }
                | TraceEvent::R4Cap { .. }
                | TraceEvent::R7Rewire { .. } => {}
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("budget exhausted")]
    BudgetExceeded,
    #[error("undeletable vertex {0} carries a loop")]
    FrozenLoop(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct ReducedInstance {
    pub graph: EdgeColoredGraph,
    pub k: usize,
    pub forced: BTreeSet<VertexId>,
    pub trace: ReductionTrace,
}

/// Applies R1-R5 until none applies outside `frozen`.
pub fn reduce_exhaustive(
    g: &EdgeColoredGraph,
    k: usize,
    frozen: &BTreeSet<VertexId>,
) -> Result<ReducedInstance, ReductionError> {
    let none = BTreeSet::new();
    let mut r = Reducer::new(g.clone(), k, frozen, &none, true);
    r.exhaust()?;
    Ok(r.finish())
}

/// Applies one application of `rule` at the lowest vertex where it applies,
/// ignoring rule order. Returns `None` if the rule does not apply anywhere.
pub fn apply_once(
    g: &EdgeColoredGraph,
    k: usize,
    rule: Rule,
) -> Result<Option<ReducedInstance>, ReductionError> {
    let none = BTreeSet::new();
    let mut r = Reducer::new(g.clone(), k, &none, &none, true);
    r.ordered = false;
    match r.find(rule) {
        Some(site) => {
            r.fire(site)?;
            Ok(Some(r.finish()))
        }
        None => Ok(None),
    }
}

/// The lowest-numbered cleanup rule applicable anywhere, with its site vertex.
pub fn first_applicable(
    g: &EdgeColoredGraph,
    frozen: &BTreeSet<VertexId>,
) -> Option<(Rule, VertexId)> {
    let none = BTreeSet::new();
    let r = Reducer::new(g.clone(), 0, frozen, &none, false);
    Rule::CLEANUP
        .iter()
        .find_map(|&rule| r.find(rule).map(|s| (rule, s.vertex())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyViolation {
    Loop(VertexId),
    Multiplicity(VertexId, VertexId, ColorId),
    DegreeOne(VertexId, ColorId),
    LowTotalDegree(VertexId),
}

/// Checks P1-P4 on every vertex not in `exempt`.
pub fn check_properties(
    g: &EdgeColoredGraph,
    exempt: &BTreeSet<VertexId>,
) -> Result<(), PropertyViolation> {
    for v in g.vertices().filter(|v| !exempt.contains(v)) {
        for c in 1..=g.alpha() {
            for (u, m) in g.neighbors(v, c) {
                if u == v {
                    return Err(PropertyViolation::Loop(v));
                }
                if m > 2 {
                    return Err(PropertyViolation::Multiplicity(v, u, c));
                }
            }
            if g.deg(v, c) == 1 {
                return Err(PropertyViolation::DegreeOne(v, c));
            }
        }
        if g.total_deg(v) < 3 {
            return Err(PropertyViolation::LowTotalDegree(v));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Site {
    Isolated(VertexId),
    Pendant(VertexId, VertexId, ColorId),
    Bypass(VertexId, VertexId, VertexId, ColorId),
    Heavy(VertexId, VertexId, ColorId),
    Loop(VertexId),
}

impl Site {
    fn vertex(self) -> VertexId {
        match self {
            Site::Isolated(v)
            | Site::Pendant(v, ..)
            | Site::Bypass(v, ..)
            | Site::Heavy(v, ..)
            | Site::Loop(v) => v,
        }
    }
}

/// Rule engine shared by the top-level reduction, the disjoint solver and the kernel.
///
/// `frozen` vertices are never deleted, bypassed or taken. `protected` vertices
/// may be deleted when isolated but are never bypassed.
pub(crate) struct Reducer<'a> {
    pub(crate) graph: EdgeColoredGraph,
    pub(crate) k: usize,
    pub(crate) forced: BTreeSet<VertexId>,
    pub(crate) trace: ReductionTrace,
    frozen: &'a BTreeSet<VertexId>,
    protected: &'a BTreeSet<VertexId>,
    record: bool,
    /// Whether rules are applied in order, so that R3 sites must have been cleared by R2.
    ordered: bool,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(
        graph: EdgeColoredGraph,
        k: usize,
        frozen: &'a BTreeSet<VertexId>,
        protected: &'a BTreeSet<VertexId>,
        record: bool,
    ) -> Self {
        Reducer {
            graph,
            k,
            forced: BTreeSet::new(),
            trace: ReductionTrace::new(),
            frozen,
            protected,
            record,
            ordered: true,
        }
    }

    pub(crate) fn finish(self) -> ReducedInstance {
        ReducedInstance {
            graph: self.graph,
            k: self.k,
            forced: self.forced,
            trace: self.trace,
        }
    }

    pub(crate) fn exhaust(&mut self) -> Result<(), ReductionError> {
        while let Some(site) = Rule::CLEANUP.iter().find_map(|&r| self.find(r)) {
            self.fire(site)?;
        }
        Ok(())
    }

    fn find(&self, rule: Rule) -> Option<Site> {
        let g = &self.graph;
        let alpha = g.alpha();
        match rule {
            Rule::R1 => g
                .vertices()
                .find(|&v| !self.frozen.contains(&v) && g.total_deg(v) == 0)
                .map(Site::Isolated),
            Rule::R2 => g.vertices().find_map(|v| {
                (1..=alpha).find_map(|c| {
                    if g.deg(v, c) == 1 {
                        let (u, _) = g.neighbors(v, c).next().expect("degree one");
                        Some(Site::Pendant(v, u, c))
                    } else {
                        None
                    }
                })
            }),
            Rule::R3 => g.vertices().find_map(|v| self.bypass_site(v)),
            Rule::R4 => g.vertices().find_map(|v| {
                (1..=alpha).find_map(|c| {
                    g.neighbors(v, c)
                        .find(|&(_, m)| m > 2)
                        .map(|(u, _)| Site::Heavy(v, u, c))
                })
            }),
            Rule::R5 => g
                .vertices()
                .find(|&v| (1..=alpha).any(|c| g.multiplicity(v, v, c) > 0))
                .map(Site::Loop),
            Rule::R6 | Rule::R7 | Rule::R8 => None,
        }
    }

    fn bypass_site(&self, v: VertexId) -> Option<Site> {
        let g = &self.graph;
        if self.frozen.contains(&v) || self.protected.contains(&v) || g.total_deg(v) != 2 {
            return None;
        }
        let mut ends = Vec::with_capacity(2);
        for c in 1..=g.alpha() {
            for (u, m) in g.neighbors(v, c) {
                for _ in 0..m {
                    ends.push((u, c));
                }
            }
        }
        // a loop contributes one entry of weight two; R5 handles it
        if ends.len() != 2 {
            return None;
        }
        let ((u, cu), (w, cw)) = (ends[0], ends[1]);
        if u == v || w == v {
            return None;
        }
        if cu != cw {
            // exhausting R2 first rules this out
            assert!(!self.ordered, "R3 site {v} with edges of two colors");
            return None;
        }
        let replaceable = if u == w {
            !self.frozen.contains(&u)
        } else {
            !self.frozen.contains(&u) || !self.frozen.contains(&w)
        };
        replaceable.then_some(Site::Bypass(v, u, w, cu))
    }

    pub(crate) fn fire(&mut self, site: Site) -> Result<(), ReductionError> {
        let event = match site {
            Site::Isolated(v) => TraceEvent::R1Delete { v },
            Site::Pendant(v, u, color) => TraceEvent::R2EdgeDrop { v, u, color },
            Site::Bypass(v, u, w, color) => TraceEvent::R3Bypass { v, u, w, color },
            Site::Heavy(u, v, color) => TraceEvent::R4Cap { u, v, color },
            Site::Loop(v) => {
                if self.frozen.contains(&v) {
                    return Err(ReductionError::FrozenLoop(v));
                }
                self.k = self
                    .k
                    .checked_sub(1)
                    .ok_or(ReductionError::BudgetExceeded)?;
                self.forced.insert(v);
                TraceEvent::R5Take { v }
            }
        };
        event.apply(&mut self.graph)?;
        if self.record {
            self.trace.push(event);
        }
        Ok(())
    }
}
