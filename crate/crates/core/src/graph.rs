//! Edge-colored undirected multigraphs.
//!
//! A graph carries `alpha` color classes numbered `1..=alpha`. Multiplicity is
//! stored per (unordered pair, color), so parallel edges and loops are
//! first-class: a loop contributes 2 to the degree of its vertex, and both a
//! loop and an edge of multiplicity two count as a cycle in its color class.
//!
//! Vertex ids are dense indices that are never reused. Deleting a vertex leaves
//! a tombstone, which keeps ids stable across reductions and lets every
//! solution be lifted back to the input graph. Each vertex carries an
//! [`OriginTag`] naming the input vertex it stands for.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

pub type VertexId = usize;
pub type ColorId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OriginTag {
    Original(VertexId),
    /// Private copy created by the unravel operation of the kernel.
    CopyOf(VertexId),
}

impl OriginTag {
    pub fn original(self) -> VertexId {
        match self {
            OriginTag::Original(v) | OriginTag::CopyOf(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown color {0}")]
    UnknownColor(ColorId),
    #[error("merge pairs do not form a forest: ({0}, {1}) closes a cycle")]
    MergeCycle(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    alpha: usize,
    alive: Vec<bool>,
    origin: Vec<OriginTag>,
    /// `adj[c - 1][v]` maps a neighbour to the multiplicity of the color-`c`
    /// edge. A loop is stored as `v -> v`.
    adj: Vec<Vec<BTreeMap<VertexId, u32>>>,
    degree: Vec<Vec<usize>>,
    live: usize,
}

impl EdgeColoredGraph {
    /// Creates `n` isolated vertices `0..n` with `alpha` color classes.
    pub fn new(n: usize, alpha: usize) -> Self {
        EdgeColoredGraph {
            alpha,
            alive: vec![true; n],
            origin: (0..n).map(OriginTag::Original).collect(),
            adj: vec![vec![BTreeMap::new(); n]; alpha],
            degree: vec![vec![0; n]; alpha],
            live: n,
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Upper bound (exclusive) on vertex ids ever handed out by this graph.
    pub fn capacity(&self) -> usize {
        self.alive.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.live
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    pub fn origin(&self, v: VertexId) -> Result<OriginTag, GraphError> {
        self.check_vertex(v)?;
        Ok(self.origin[v])
    }

    pub fn add_vertex(&mut self, origin: OriginTag) -> VertexId {
        let id = self.alive.len();
        self.alive.push(true);
        self.origin.push(origin);
        for c in 0..self.alpha {
            self.adj[c].push(BTreeMap::new());
            self.degree[c].push(0);
        }
        self.live += 1;
        id
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub(crate) fn check_color(&self, c: ColorId) -> Result<(), GraphError> {
        if c >= 1 && c <= self.alpha {
            Ok(())
        } else {
            Err(GraphError::UnknownColor(c))
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, c: ColorId) -> Result<(), GraphError> {
        self.add_edges(u, v, c, 1)
    }

    /// Adds `mult` parallel color-`c` edges between `u` and `v`.
    pub fn add_edges(
        &mut self,
        u: VertexId,
        v: VertexId,
        c: ColorId,
        mult: u32,
    ) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_color(c)?;
        let current = self.multiplicity(u, v, c);
        self.write_multiplicity(u, v, c, current + mult);
        Ok(())
    }

    /// Removes one color-`c` edge between `u` and `v`. Returns whether one existed.
    pub fn remove_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        c: ColorId,
    ) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_color(c)?;
        let current = self.multiplicity(u, v, c);
        if current == 0 {
            return Ok(false);
        }
        self.write_multiplicity(u, v, c, current - 1);
        Ok(true)
    }

    pub fn set_multiplicity(
        &mut self,
        u: VertexId,
        v: VertexId,
        c: ColorId,
        mult: u32,
    ) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_color(c)?;
        self.write_multiplicity(u, v, c, mult);
        Ok(())
    }

    fn write_multiplicity(&mut self, u: VertexId, v: VertexId, c: ColorId, mult: u32) {
        let ci = c - 1;
        let old = self.adj[ci][u].get(&v).copied().unwrap_or(0);
        if mult == old {
            return;
        }
        let per_end = if u == v { 2 } else { 1 };
        self.degree[ci][u] = self.degree[ci][u] + per_end * mult as usize - per_end * old as usize;
        if u != v {
            self.degree[ci][v] = self.degree[ci][v] + mult as usize - old as usize;
        }
        if mult == 0 {
            self.adj[ci][u].remove(&v);
            self.adj[ci][v].remove(&u);
        } else {
            self.adj[ci][u].insert(v, mult);
            self.adj[ci][v].insert(u, mult);
        }
    }

    /// Multiplicity of the color-`c` edge `{u, v}`; 0 for unknown vertices.
    pub fn multiplicity(&self, u: VertexId, v: VertexId, c: ColorId) -> u32 {
        if !self.contains(u) || !self.contains(v) || c == 0 || c > self.alpha {
            return 0;
        }
        self.adj[c - 1][u].get(&v).copied().unwrap_or(0)
    }

    /// Deletes `v` together with all incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        for ci in 0..self.alpha {
            let nbrs: Vec<VertexId> = self.adj[ci][v].keys().copied().collect();
            for u in nbrs {
                self.write_multiplicity(v, u, ci + 1, 0);
            }
        }
        self.alive[v] = false;
        self.live -= 1;
        Ok(())
    }

    pub fn degree(&self, v: VertexId, c: ColorId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        self.check_color(c)?;
        Ok(self.degree[c - 1][v])
    }

    pub fn total_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok((0..self.alpha).map(|ci| self.degree[ci][v]).sum())
    }

    /// Unchecked degree for hot loops; callers guarantee validity.
    pub(crate) fn deg(&self, v: VertexId, c: ColorId) -> usize {
        self.degree[c - 1][v]
    }

    pub(crate) fn total_deg(&self, v: VertexId) -> usize {
        (0..self.alpha).map(|ci| self.degree[ci][v]).sum()
    }

    /// Color-`c` neighbours of `v` with multiplicities, ascending by id.
    /// Yields nothing for unknown vertices or colors.
    pub fn neighbors(&self, v: VertexId, c: ColorId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        let map = if self.contains(v) && c >= 1 && c <= self.alpha {
            Some(&self.adj[c - 1][v])
        } else {
            None
        };
        map.into_iter()
            .flat_map(|m| m.iter().map(|(&u, &k)| (u, k)))
    }

    /// Color-`c` edges as `(u, v, multiplicity)` with `u <= v`, sorted.
    pub fn edges(&self, c: ColorId) -> Vec<(VertexId, VertexId, u32)> {
        let mut out = Vec::new();
        if c == 0 || c > self.alpha {
            return out;
        }
        for u in self.vertices() {
            for (&v, &m) in self.adj[c - 1][u].range(u..) {
                out.push((u, v, m));
            }
        }
        out
    }

    /// Total number of edges counted with multiplicity.
    pub fn num_edges(&self) -> usize {
        (1..=self.alpha)
            .map(|c| self.edges(c).iter().map(|e| e.2 as usize).sum::<usize>())
            .sum()
    }

    pub fn view(&self, c: ColorId) -> Result<ColorView<'_>, GraphError> {
        self.check_color(c)?;
        Ok(ColorView {
            graph: self,
            color: c,
        })
    }

    pub fn is_forest(&self, c: ColorId) -> Result<bool, GraphError> {
        Ok(self.find_cycle(c)?.is_none())
    }

    pub fn is_alpha_forest(&self) -> bool {
        (1..=self.alpha).all(|c| self.cycle_in(c, None).is_none())
    }

    /// A cycle of the color-`c` graph as a vertex sequence: a loop gives `[v]`,
    /// a double edge `[u, v]`.
    pub fn find_cycle(&self, c: ColorId) -> Result<Option<Vec<VertexId>>, GraphError> {
        self.check_color(c)?;
        Ok(self.cycle_in(c, None))
    }

    /// Cycle search restricted to vertices not in `skip`.
    pub(crate) fn cycle_in(
        &self,
        c: ColorId,
        skip: Option<&BTreeSet<VertexId>>,
    ) -> Option<Vec<VertexId>> {
        let ci = c - 1;
        let usable = |v: VertexId| skip.is_none_or(|s| !s.contains(&v));
        let n = self.capacity();
        for u in self.vertices().filter(|&u| usable(u)) {
            if self.adj[ci][u].contains_key(&u) {
                return Some(vec![u]);
            }
            for (&v, &m) in self.adj[ci][u].range(u + 1..) {
                if m >= 2 && usable(v) {
                    return Some(vec![u, v]);
                }
            }
        }
        let mut dsu = Dsu::new(n);
        let mut forest: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for u in self.vertices().filter(|&u| usable(u)) {
            for (&v, _) in self.adj[ci][u].range(u + 1..) {
                if !usable(v) {
                    continue;
                }
                if !dsu.union(u, v) {
                    let mut path = tree_path(&forest, u, v);
                    path.rotate_left(0);
                    return Some(path);
                }
                forest[u].push(v);
                forest[v].push(u);
            }
        }
        None
    }

    /// Connected components of the color-`c` graph induced on `restrict`.
    /// Parts are sorted internally and ordered by their smallest vertex.
    pub fn components(
        &self,
        c: ColorId,
        restrict: &BTreeSet<VertexId>,
    ) -> Result<Vec<Vec<VertexId>>, GraphError> {
        self.check_color(c)?;
        for &v in restrict {
            self.check_vertex(v)?;
        }
        let mut seen = BTreeSet::new();
        let mut parts = Vec::new();
        for &s in restrict {
            if !seen.insert(s) {
                continue;
            }
            let mut part = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in self.adj[c - 1][x].keys() {
                    if restrict.contains(&y) && seen.insert(y) {
                        part.push(y);
                        queue.push_back(y);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        Ok(parts)
    }

    /// Copy of the graph keeping only `keep`; other ids become tombstones.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Self {
        let mut g = self.clone();
        for v in self.vertices() {
            if !keep.contains(&v) {
                g.remove_vertex(v).expect("live vertex");
            }
        }
        g
    }

    /// Copy of the graph with the vertices of `remove` deleted.
    pub fn without<'a>(&self, remove: impl IntoIterator<Item = &'a VertexId>) -> Self {
        let mut g = self.clone();
        for &v in remove {
            if g.contains(v) {
                g.remove_vertex(v).expect("live vertex");
            }
        }
        g
    }

    /// Single-color copy (alpha = 1) of color class `c`, same ids.
    pub fn color_subgraph(&self, c: ColorId) -> Result<Self, GraphError> {
        self.check_color(c)?;
        Ok(EdgeColoredGraph {
            alpha: 1,
            alive: self.alive.clone(),
            origin: self.origin.clone(),
            adj: vec![self.adj[c - 1].clone()],
            degree: vec![self.degree[c - 1].clone()],
            live: self.live,
        })
    }

    /// Copy with ids renumbered densely `0..n` in ascending order, together with
    /// the map from new ids to old ids. Origin tags are preserved.
    pub fn compacted(&self) -> (Self, Vec<VertexId>) {
        let old: Vec<VertexId> = self.vertices().collect();
        let mut new_id = vec![usize::MAX; self.capacity()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = EdgeColoredGraph::new(old.len(), self.alpha);
        for (i, &v) in old.iter().enumerate() {
            g.origin[i] = self.origin[v];
        }
        for c in 1..=self.alpha {
            for (u, v, m) in self.edges(c) {
                g.write_multiplicity(new_id[u], new_id[v], c, m);
            }
        }
        (g, old)
    }

    /// Contracts the uncolored ("color zero") edges given as `pairs`. Every
    /// merge class becomes one vertex; colored edges are re-attached and
    /// parallel edges of one color add up. New ids are dense and ordered by
    /// the smallest old id of each class; the returned vector maps old ids to
    /// new ids (`usize::MAX` for tombstones).
    pub fn contract_zero_edges(
        &self,
        pairs: &[(VertexId, VertexId)],
    ) -> Result<(Self, Vec<VertexId>), GraphError> {
        let mut dsu = Dsu::new(self.capacity());
        for &(u, v) in pairs {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !dsu.union(u, v) {
                return Err(GraphError::MergeCycle(u, v));
            }
        }
        let mut rep_new: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut map = vec![usize::MAX; self.capacity()];
        let mut origins = Vec::new();
        for v in self.vertices() {
            let r = dsu.find(v);
            let next = rep_new.len();
            let id = *rep_new.entry(r).or_insert_with(|| {
                origins.push(self.origin[v]);
                next
            });
            map[v] = id;
        }
        let mut g = EdgeColoredGraph::new(rep_new.len(), self.alpha);
        for (i, o) in origins.into_iter().enumerate() {
            g.origin[i] = o;
        }
        for c in 1..=self.alpha {
            for (u, v, m) in self.edges(c) {
                let (a, b) = (map[u], map[v]);
                let cur = g.multiplicity(a, b, c);
                g.write_multiplicity(a, b, c, cur + m);
            }
        }
        Ok((g, map))
    }
}

/// Read-only view of one color class `G_i`.
#[derive(Debug, Clone, Copy)]
pub struct ColorView<'a> {
    graph: &'a EdgeColoredGraph,
    color: ColorId,
}

impl<'a> ColorView<'a> {
    pub fn graph(&self) -> &'a EdgeColoredGraph {
        self.graph
    }

    pub fn color(&self) -> ColorId {
        self.color
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.graph.degree(v, self.color)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + 'a {
        self.graph.neighbors(v, self.color)
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.graph.multiplicity(u, v, self.color)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + 'a {
        self.graph.vertices()
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId, u32)> {
        self.graph.edges(self.color)
    }

    pub fn is_forest(&self) -> bool {
        self.graph.cycle_in(self.color, None).is_none()
    }

    pub fn find_cycle(&self) -> Option<Vec<VertexId>> {
        self.graph.cycle_in(self.color, None)
    }

    /// Whether `G_i` minus `removed` is a forest.
    pub fn is_forest_without(&self, removed: &BTreeSet<VertexId>) -> bool {
        self.graph.cycle_in(self.color, Some(removed)).is_none()
    }

    pub fn components(
        &self,
        restrict: &BTreeSet<VertexId>,
    ) -> Result<Vec<Vec<VertexId>>, GraphError> {
        self.graph.components(self.color, restrict)
    }

    /// Standalone single-color copy of this view.
    pub fn to_graph(&self) -> EdgeColoredGraph {
        self.graph
            .color_subgraph(self.color)
            .expect("view color is valid")
    }
}

/// Path between `from` and `to` in an adjacency-list forest.
fn tree_path(forest: &[Vec<VertexId>], from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    parent.insert(from, from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &forest[x] {
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(y) {
                e.insert(x);
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}
