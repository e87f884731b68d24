//! Maximal degree-two paths, path tuples and the unravel operation.
//!
//! A tuple picks one path per color or `φ` (`None`). The intercept of a path
//! in a tuple is the set of its vertices lying on every chosen path.
//!
//! Unravelling `u` hands each chosen path a private copy of `u`. It is only
//! performed when `u` has no edge in any color where the tuple has `φ`:
//! otherwise `u` could sit on cycles that avoid every chosen path, and moving
//! it to another intercept vertex would not cover them. Under that guard the
//! applicable tuples are exactly the path signatures of such vertices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{ColorId, ColorView, EdgeColoredGraph, GraphError, VertexId};
use crate::reductions::TraceEvent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("the given set is not a feedback vertex set of color {0}")]
    NotAFeedbackSet(ColorId),
    #[error("intercept has {0} vertices; unravel needs at least two")]
    SmallIntercept(usize),
    #[error("vertex {0} is not in the intercept")]
    NotInIntercept(VertexId),
    #[error("vertex {0} has edges in a color the tuple leaves empty")]
    UnsafeVertex(VertexId),
    #[error("tuple has {0} entries")]
    TupleLength(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Maximal paths of `G_i - s` whose vertices all have degree exactly two in
/// `G_i`. Each path runs from its smaller end; paths are sorted by first vertex.
pub fn enumerate_deg2_paths(
    view: ColorView<'_>,
    s: &BTreeSet<VertexId>,
) -> Result<Vec<Vec<VertexId>>, PathError> {
    if !view.is_forest_without(s) {
        return Err(PathError::NotAFeedbackSet(view.color()));
    }
    let inner: BTreeSet<VertexId> = view
        .vertices()
        .filter(|v| !s.contains(v) && view.degree(*v) == Ok(2) && view.multiplicity(*v, *v) == 0)
        .collect();
    let inner_nbrs = |v: VertexId| -> Vec<VertexId> {
        view.neighbors(v)
            .map(|(u, _)| u)
            .filter(|u| inner.contains(u))
            .collect()
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &inner {
        if seen.contains(&start) || inner_nbrs(start).len() == 2 {
            continue;
        }
        // `start` is an end: walk to the other end
        let mut path = vec![start];
        seen.insert(start);
        let mut prev = None;
        let mut cur = start;
        loop {
            let next = inner_nbrs(cur)
                .into_iter()
                .find(|&u| Some(u) != prev && !seen.contains(&u));
            match next {
                Some(u) => {
                    seen.insert(u);
                    path.push(u);
                    prev = Some(cur);
                    cur = u;
                }
                None => break,
            }
        }
        if path.last() < path.first() {
            path.reverse();
        }
        out.push(path);
    }
    // every inner vertex is on a path with two ends because G_i - s is a forest
    debug_assert_eq!(seen.len(), inner.len());
    out.sort();
    Ok(out)
}

/// One entry per color: an index into that color's paths, or `None` for `φ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathTuple(pub Vec<Option<usize>>);

impl PathTuple {
    /// Order with `φ` after every path, colors compared in turn.
    fn key(&self) -> Vec<(bool, usize)> {
        self.0
            .iter()
            .map(|e| (e.is_none(), e.unwrap_or(0)))
            .collect()
    }
}

impl PartialOrd for PathTuple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PathTuple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for PathTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|e| e.map_or_else(|| "φ".to_string(), |i| i.to_string()))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The degree-two paths of every color, relative to fixed feedback vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    /// `paths[c - 1]` lists the paths of color `c`.
    pub paths: Vec<Vec<Vec<VertexId>>>,
    /// `(color, vertex) -> path index`.
    owner: BTreeMap<(ColorId, VertexId), usize>,
}

impl PathFamily {
    /// `fvs[c - 1]` must be a feedback vertex set of color `c`.
    pub fn new(g: &EdgeColoredGraph, fvs: &[BTreeSet<VertexId>]) -> Result<Self, PathError> {
        let mut paths = Vec::new();
        let mut owner = BTreeMap::new();
        for c in 1..=g.alpha() {
            let list = enumerate_deg2_paths(g.view(c)?, &fvs[c - 1])?;
            for (i, p) in list.iter().enumerate() {
                for &v in p {
                    owner.insert((c, v), i);
                }
            }
            paths.push(list);
        }
        Ok(PathFamily { paths, owner })
    }

    pub fn alpha(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, color: ColorId, index: usize) -> &[VertexId] {
        &self.paths[color - 1][index]
    }

    /// The tuple of paths through `v`, `φ` where `v` is on no path.
    pub fn signature(&self, v: VertexId) -> PathTuple {
        PathTuple(
            (1..=self.alpha())
                .map(|c| self.owner.get(&(c, v)).copied())
                .collect(),
        )
    }

    /// Vertices of the path that lie on every non-`φ` path of `tau`; empty if
    /// the path is not part of `tau`.
    pub fn intercept(&self, color: ColorId, index: usize, tau: &PathTuple) -> BTreeSet<VertexId> {
        if tau.0.get(color - 1).copied().flatten() != Some(index) {
            return BTreeSet::new();
        }
        self.path(color, index)
            .iter()
            .copied()
            .filter(|&v| {
                tau.0
                    .iter()
                    .enumerate()
                    .all(|(t, e)| e.is_none_or(|j| self.owner.get(&(t + 1, v)) == Some(&j)))
            })
            .collect()
    }

    /// Number of tuples, `φ` included in every color.
    pub fn num_tuples(&self) -> u128 {
        self.paths.iter().map(|p| p.len() as u128 + 1).product()
    }

    /// Largest intercept over all paths and tuples. Since an intercept is
    /// contained in its path and `(p, φ, .., φ)` gives all of `p`, this is the
    /// longest path length.
    pub fn max_intercept(&self) -> usize {
        self.paths.iter().flatten().map(Vec::len).max().unwrap_or(0)
    }
}

/// Where R8 applies: a path, a tuple containing it and the vertex to unravel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R8Site {
    pub color: ColorId,
    pub index: usize,
    pub tuple: PathTuple,
    pub u: VertexId,
    pub intercept: BTreeSet<VertexId>,
}

fn safe_to_unravel(g: &EdgeColoredGraph, tau: &PathTuple, u: VertexId) -> bool {
    tau.0
        .iter()
        .enumerate()
        .all(|(t, e)| e.is_some() || g.deg(u, t + 1) == 0)
}

/// The first applicable site: smallest tuple (φ last), its lowest-color path,
/// and the smallest vertex that may be unravelled.
pub fn find_r8_site(g: &EdgeColoredGraph, fam: &PathFamily) -> Option<R8Site> {
    let mut by_tuple: BTreeMap<PathTuple, VertexId> = BTreeMap::new();
    for u in g.vertices() {
        let tau = fam.signature(u);
        if tau.0.iter().all(Option::is_none) || !safe_to_unravel(g, &tau, u) {
            continue;
        }
        by_tuple.entry(tau).or_insert(u);
    }
    by_tuple.into_iter().find_map(|(tau, u)| {
        let color = tau.0.iter().position(Option::is_some)? + 1;
        let index = tau.0[color - 1]?;
        let intercept = fam.intercept(color, index, &tau);
        (intercept.len() > 1).then_some(R8Site {
            color,
            index,
            tuple: tau,
            u,
            intercept,
        })
    })
}

/// Gives every path of `tau` its own copy of `u`. Copies get the next free ids
/// in color order. Returns the applied trace event.
pub fn unravel(
    g: &mut EdgeColoredGraph,
    fam: &PathFamily,
    color: ColorId,
    index: usize,
    tau: &PathTuple,
    u: VertexId,
) -> Result<TraceEvent, PathError> {
    if tau.0.len() != g.alpha() {
        return Err(PathError::TupleLength(tau.0.len()));
    }
    let inter = fam.intercept(color, index, tau);
    if inter.len() <= 1 {
        return Err(PathError::SmallIntercept(inter.len()));
    }
    if !inter.contains(&u) {
        return Err(PathError::NotInIntercept(u));
    }
    if !safe_to_unravel(g, tau, u) {
        return Err(PathError::UnsafeVertex(u));
    }
    let mut next = g.capacity();
    let copies: Vec<(ColorId, VertexId)> = tau
        .0
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_some())
        .map(|(t, _)| {
            next += 1;
            (t + 1, next - 1)
        })
        .collect();
    let event = TraceEvent::R8Unravel { u, copies };
    event.apply(g)?;
    Ok(event)
}
