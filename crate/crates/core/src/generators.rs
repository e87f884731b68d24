//! Instance builders.
//!
//! * [`from_hitting_set`] and [`phs_to_simfvs`] turn (partitioned) hitting set
//!   instances into edge-colored graphs: every set becomes a cycle on
//!   `2|U|` vertices whose odd positions stand for the elements, and the
//!   positions of one element are merged across cycles.
//! * [`psi_to_phs`] turns a partitioned subgraph isomorphism instance with a
//!   pattern of maximum degree three into a partitioned hitting set instance
//!   with `16t + 1` groups.
//! * [`random_instance`] and friends produce seeded test corpora.
//!
//! Id schemes: before contraction, vertex `m` (1-based) of the cycle of set
//! `i` (0-based, in group order) has id `i * 2|U| + m - 1` and element `j`
//! (0-based) has id `|F| * 2|U| + j`. After contraction ids are renumbered
//! densely in order of the smallest merged id. In the hitting set built from a
//! PSI instance, vertex `j` of class `x` is element `x * 2^t + j` and the host
//! edges follow in sorted order.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Dsu, EdgeColoredGraph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("element {0} lies in no set")]
    ElementUncovered(usize),
    #[error("element {0} is outside the universe")]
    ElementOutOfRange(usize),
    #[error("sets {1} and {2} of group {0} intersect")]
    NotDisjoint(usize, usize, usize),
    #[error("pattern vertex {0} has degree {1} > 3")]
    DegreeTooHigh(usize, usize),
    #[error("invalid host edge {0:?}")]
    InvalidHostEdge(HostEdge),
    #[error("invalid pattern edge ({0}, {1})")]
    InvalidPatternEdge(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An edge between vertex `i` of class `x` and vertex `j` of class `y`, as `((x, i), (y, j))`.
pub type HostEdge = ((usize, usize), (usize, usize));

/// A universe `0..universe` with a family of sets split into groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub universe: usize,
    pub groups: Vec<Vec<Vec<usize>>>,
    pub k: usize,
}

impl SetSystem {
    /// Plain hitting set: a single group, budget 0.
    pub fn plain(universe: usize, sets: Vec<Vec<usize>>) -> Self {
        SetSystem {
            universe,
            groups: vec![sets],
            k: 0,
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn alpha(&self) -> usize {
        self.groups.len()
    }

    pub fn sets(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.groups.iter().flatten()
    }

    pub fn num_sets(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Checks that every element is in range and that the sets of each group
    /// are pairwise disjoint.
    pub fn check_partition(&self) -> Result<(), GeneratorError> {
        for (gi, group) in self.groups.iter().enumerate() {
            let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
            for (si, set) in group.iter().enumerate() {
                for &e in set {
                    if e >= self.universe {
                        return Err(GeneratorError::ElementOutOfRange(e));
                    }
                    if let Some(&prev) = owner.get(&e) {
                        if prev != si {
                            return Err(GeneratorError::NotDisjoint(gi, prev, si));
                        }
                    }
                    owner.insert(e, si);
                }
            }
        }
        Ok(())
    }
}

/// Output of the set-to-cycle construction.
#[derive(Debug, Clone)]
pub struct CycleEncoding {
    pub graph: EdgeColoredGraph,
    /// Vertex carrying each element after contraction.
    pub element_vertex: Vec<VertexId>,
}

/// One color per set: the graph has an `|F|`-simfvs of size `k` iff the sets
/// have a hitting set of size `k`.
pub fn from_hitting_set(sys: &SetSystem) -> Result<CycleEncoding, GeneratorError> {
    let split = SetSystem {
        universe: sys.universe,
        groups: sys.sets().map(|s| vec![s.clone()]).collect(),
        k: sys.k,
    };
    encode(&split)
}

/// One color per group; the groups must consist of pairwise disjoint sets.
pub fn phs_to_simfvs(sys: &SetSystem) -> Result<CycleEncoding, GeneratorError> {
    sys.check_partition()?;
    encode(sys)
}

fn encode(sys: &SetSystem) -> Result<CycleEncoding, GeneratorError> {
    let u = sys.universe;
    let f = sys.num_sets();
    let mut covered = vec![false; u];
    for set in sys.sets() {
        for &e in set {
            if e >= u {
                return Err(GeneratorError::ElementOutOfRange(e));
            }
            covered[e] = true;
        }
    }
    if let Some(e) = covered.iter().position(|c| !c) {
        return Err(GeneratorError::ElementUncovered(e));
    }
    if f == 0 {
        return Ok(CycleEncoding {
            graph: EdgeColoredGraph::new(0, sys.alpha().max(1)),
            element_vertex: Vec::new(),
        });
    }
    let len = 2 * u;
    let mut g = EdgeColoredGraph::new(f * len + u, sys.alpha().max(1));
    let mut merges = Vec::new();
    let mut i = 0;
    for (gi, group) in sys.groups.iter().enumerate() {
        for set in group {
            let base = i * len;
            for m in 0..len {
                g.add_edge(base + m, base + (m + 1) % len, gi + 1)?;
            }
            for &e in set {
                merges.push((f * len + e, base + 2 * e));
            }
            i += 1;
        }
    }
    let (graph, map) = g.contract_zero_edges(&merges)?;
    let element_vertex = (0..u).map(|e| map[f * len + e]).collect();
    Ok(CycleEncoding {
        graph,
        element_vertex,
    })
}

/// Partitioned subgraph isomorphism: find one host vertex per pattern vertex,
/// taken from the class of that pattern vertex, such that pattern edges map
/// to host edges. Every class has `2^t` vertices indexed `0..2^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiInstance {
    pub pattern_vertices: usize,
    /// Pattern edges `(x, y)` with `x < y`, sorted.
    pub pattern_edges: Vec<(usize, usize)>,
    pub t: u32,
    /// Host edges `((x, i), (y, j))` with `x < y`, sorted and deduplicated.
    pub host_edges: Vec<HostEdge>,
}

impl PsiInstance {
    /// Builds an instance, padding every class with isolated vertices up to the
    /// next power of two (at least 2).
    pub fn new(
        pattern_vertices: usize,
        pattern_edges: &[(usize, usize)],
        class_sizes: &[usize],
        host_edges: &[HostEdge],
    ) -> Result<Self, GeneratorError> {
        let mut pe: Vec<(usize, usize)> = Vec::new();
        for &(x, y) in pattern_edges {
            if x == y || x >= pattern_vertices || y >= pattern_vertices {
                return Err(GeneratorError::InvalidPatternEdge(x, y));
            }
            pe.push((x.min(y), x.max(y)));
        }
        pe.sort_unstable();
        pe.dedup();
        let largest = class_sizes.iter().copied().max().unwrap_or(1).max(2);
        let t = largest.next_power_of_two().trailing_zeros();
        let mut he = Vec::new();
        for &(a, b) in host_edges {
            let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
            let ok = a.0 != b.0
                && b.0 < pattern_vertices
                && a.1 < class_sizes.get(a.0).copied().unwrap_or(0)
                && b.1 < class_sizes.get(b.0).copied().unwrap_or(0)
                && pe.binary_search(&(a.0, b.0)).is_ok();
            if !ok {
                return Err(GeneratorError::InvalidHostEdge((a, b)));
            }
            he.push((a, b));
        }
        he.sort_unstable();
        he.dedup();
        Ok(PsiInstance {
            pattern_vertices,
            pattern_edges: pe,
            t,
            host_edges: he,
        })
    }

    pub fn class_size(&self) -> usize {
        1 << self.t
    }

    /// Budget of the source problem: the number of pattern edges.
    pub fn k(&self) -> usize {
        self.pattern_edges.len()
    }

    /// Exhaustive search for a colorful embedding; returns the host index per class.
    pub fn brute_force(&self) -> Option<Vec<usize>> {
        let edges: BTreeSet<_> = self.host_edges.iter().copied().collect();
        (0..self.pattern_vertices)
            .map(|_| 0..self.class_size())
            .multi_cartesian_product()
            .find(|pick| {
                self.pattern_edges
                    .iter()
                    .all(|&(x, y)| edges.contains(&((x, pick[x]), (y, pick[y]))))
            })
            .or_else(|| (self.pattern_vertices == 0).then(Vec::new))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiElement {
    Vertex {
        class: usize,
        index: usize,
    },
    Edge {
        a: (usize, usize),
        b: (usize, usize),
    },
}

#[derive(Debug, Clone)]
pub struct PsiReduction {
    /// Partitioned system with `16t + 1` groups and budget `k + l`.
    pub system: SetSystem,
    pub elements: Vec<PsiElement>,
}

/// Selector-gadget reduction from PSI to partitioned hitting set.
pub fn psi_to_phs(psi: &PsiInstance) -> Result<PsiReduction, GeneratorError> {
    let l = psi.pattern_vertices;
    let t = psi.t as usize;
    let size = psi.class_size();
    let coloring = edge_coloring_4(l, &psi.pattern_edges)?;
    let edge_color: BTreeMap<(usize, usize), u8> =
        psi.pattern_edges.iter().copied().zip(coloring).collect();

    let mut elements: Vec<PsiElement> = Vec::new();
    for class in 0..l {
        for index in 0..size {
            elements.push(PsiElement::Vertex { class, index });
        }
    }
    let edge_base = elements.len();
    for &(a, b) in &psi.host_edges {
        elements.push(PsiElement::Edge { a, b });
    }
    let vertex_id = |x: usize, i: usize| x * size + i;
    // bit p (1-based, most significant first) of a t-bit index
    let bit = |i: usize, p: usize| (i >> (t - p)) & 1;

    let mut groups: Vec<Vec<Vec<usize>>> = vec![Vec::new(); 16 * t + 1];
    for &(lo, hi) in &psi.pattern_edges {
        let beta = edge_color[&(lo, hi)] as usize;
        for (x, y) in [(lo, hi), (hi, lo)] {
            let dir = usize::from(x > y);
            for p in 1..=t {
                let mut up = Vec::new();
                let mut down = Vec::new();
                for i in 0..size {
                    if bit(i, p) == 0 {
                        down.push(vertex_id(x, i));
                    } else {
                        up.push(vertex_id(x, i));
                    }
                }
                for (ei, &(a, b)) in psi.host_edges.iter().enumerate() {
                    if (a.0, b.0) != (lo, hi) {
                        continue;
                    }
                    let own = if a.0 == x { a.1 } else { b.1 };
                    if bit(own, p) == 0 {
                        up.push(edge_base + ei);
                    } else {
                        down.push(edge_base + ei);
                    }
                }
                for (ud, set) in [(0usize, up), (1usize, down)] {
                    let part = (((beta - 1) * t + (p - 1)) * 2 + ud) * 2 + dir;
                    let mut set = set;
                    set.sort_unstable();
                    groups[part].push(set);
                }
            }
        }
    }
    let q = &mut groups[16 * t];
    for x in 0..l {
        q.push((0..size).map(|i| vertex_id(x, i)).collect());
    }
    for &(lo, hi) in &psi.pattern_edges {
        q.push(
            psi.host_edges
                .iter()
                .enumerate()
                .filter(|(_, (a, b))| (a.0, b.0) == (lo, hi))
                .map(|(ei, _)| edge_base + ei)
                .collect(),
        );
    }
    let system = SetSystem {
        universe: elements.len(),
        groups,
        k: psi.k() + l,
    };
    system.check_partition()?;
    Ok(PsiReduction { system, elements })
}

/// Proper edge coloring with colors `1..=4` of a simple graph of maximum
/// degree at most three (Misra-Gries fan rotation).
pub fn edge_coloring_4(n: usize, edges: &[(usize, usize)]) -> Result<Vec<u8>, GeneratorError> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u == v || u >= n || v >= n {
            return Err(GeneratorError::InvalidPatternEdge(u, v));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    if let Some((v, d)) = adj.iter().map(Vec::len).enumerate().find(|&(_, d)| d > 3) {
        return Err(GeneratorError::DegreeTooHigh(v, d));
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut color: BTreeMap<(usize, usize), u8> = BTreeMap::new();
    let free = |color: &BTreeMap<(usize, usize), u8>, x: usize, c: u8| {
        adj[x].iter().all(|&y| color.get(&key(x, y)) != Some(&c))
    };
    let first_free = |color: &BTreeMap<(usize, usize), u8>, x: usize| {
        (0u8..4)
            .find(|&c| free(color, x, c))
            .expect("degree at most three")
    };
    for &(u, v) in edges {
        // maximal fan at u starting with v
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("nonempty");
            let next = adj[u].iter().copied().find(|&w| {
                !fan.contains(&w)
                    && color
                        .get(&key(u, w))
                        .is_some_and(|&c| free(&color, last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = first_free(&color, u);
        let d = first_free(&color, *fan.last().expect("nonempty"));
        if c != d {
            // invert the c/d path starting at u with a d edge
            let mut path = Vec::new();
            let (mut cur, mut want, mut prev) = (u, d, usize::MAX);
            while let Some(&nx) = adj[cur]
                .iter()
                .find(|&&y| y != prev && color.get(&key(cur, y)) == Some(&want))
            {
                path.push(key(cur, nx));
                prev = cur;
                cur = nx;
                want = if want == c { d } else { c };
            }
            for e in path {
                let x = color[&e];
                color.insert(e, if x == c { d } else { c });
            }
        }
        let is_fan = |color: &BTreeMap<(usize, usize), u8>, upto: usize| {
            (1..=upto).all(|j| {
                color
                    .get(&key(u, fan[j]))
                    .is_some_and(|&cj| free(color, fan[j - 1], cj))
            })
        };
        let w = (0..fan.len())
            .find(|&i| free(&color, fan[i], d) && is_fan(&color, i))
            .expect("fan rotation target exists");
        for j in 0..w {
            let next = color[&key(u, fan[j + 1])];
            color.insert(key(u, fan[j]), next);
        }
        color.insert(key(u, fan[w]), d);
    }
    Ok(edges.iter().map(|&(u, v)| color[&key(u, v)] + 1).collect())
}

/// Parameters of [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    pub alpha: usize,
    pub edges_per_color: usize,
    /// Size of a planted solution: every color class minus the planted set is
    /// a forest, and the remaining edges touch the planted set.
    pub planted: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub graph: EdgeColoredGraph,
    pub planted: Option<BTreeSet<VertexId>>,
}

/// Reproducible random multigraph without loops and with multiplicities at most 2.
pub fn random_instance(spec: &RandomSpec) -> RandomInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let mut g = EdgeColoredGraph::new(n, spec.alpha.max(1));
    if n < 2 {
        return RandomInstance {
            graph: g,
            planted: spec.planted.map(|_| BTreeSet::new()),
        };
    }
    let planted: Option<BTreeSet<VertexId>> = spec.planted.map(|s| {
        let mut ids: Vec<VertexId> = (0..n).collect();
        ids.shuffle(&mut rng);
        ids.into_iter().take(s.min(n)).collect()
    });
    for c in 1..=spec.alpha {
        match &planted {
            None => {
                for _ in 0..spec.edges_per_color {
                    let (u, v) = distinct_pair(&mut rng, n);
                    if g.multiplicity(u, v, c) < 2 {
                        g.add_edge(u, v, c).expect("valid ids");
                    }
                }
            }
            Some(s) => {
                let rest: Vec<VertexId> = (0..n).filter(|v| !s.contains(v)).collect();
                let mut dsu = Dsu::new(n);
                let forest_target = if s.is_empty() {
                    spec.edges_per_color
                } else {
                    spec.edges_per_color * rest.len() / n
                };
                let mut added = 0;
                let mut tries = 0;
                while added < forest_target
                    && tries < 20 * spec.edges_per_color + 20
                    && rest.len() > 1
                {
                    tries += 1;
                    let a = rest[rng.gen_range(0..rest.len())];
                    let b = rest[rng.gen_range(0..rest.len())];
                    if a != b && dsu.union(a, b) {
                        g.add_edge(a, b, c).expect("valid ids");
                        added += 1;
                    }
                }
                let hubs: Vec<VertexId> = s.iter().copied().collect();
                if hubs.is_empty() {
                    continue;
                }
                for _ in added..spec.edges_per_color {
                    let a = hubs[rng.gen_range(0..hubs.len())];
                    let b = rng.gen_range(0..n);
                    if a != b && g.multiplicity(a, b, c) < 2 {
                        g.add_edge(a, b, c).expect("valid ids");
                    }
                }
            }
        }
    }
    RandomInstance { graph: g, planted }
}

fn distinct_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

/// Random plain hitting set instance; every element ends up in some set.
pub fn random_set_system(universe: usize, sets: usize, max_size: usize, seed: u64) -> SetSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut family: Vec<Vec<usize>> = (0..sets)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.max(1).min(universe.max(1)));
            let mut s: Vec<usize> = (0..universe).collect();
            s.shuffle(&mut rng);
            s.truncate(size);
            s.sort_unstable();
            s
        })
        .collect();
    cover_all(&mut family, universe, &mut rng);
    SetSystem::plain(universe, family)
}

/// Random partitioned system: each group is a random partial partition of the universe.
pub fn random_partitioned(universe: usize, groups: usize, max_size: usize, seed: u64) -> SetSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for _ in 0..groups {
        let mut perm: Vec<usize> = (0..universe).collect();
        perm.shuffle(&mut rng);
        let keep = rng.gen_range(0..=universe);
        perm.truncate(keep);
        let mut group = Vec::new();
        let mut rest = perm.as_slice();
        while !rest.is_empty() {
            let size = rng.gen_range(1..=max_size.max(1)).min(rest.len());
            let mut set = rest[..size].to_vec();
            set.sort_unstable();
            group.push(set);
            rest = &rest[size..];
        }
        out.push(group);
    }
    // every element must lie in some set: add missing ones as singletons of group 0
    let covered: BTreeSet<usize> = out.iter().flatten().flatten().copied().collect();
    if groups > 0 {
        for e in (0..universe).filter(|e| !covered.contains(e)) {
            out[0].push(vec![e]);
        }
    }
    SetSystem {
        universe,
        groups: out,
        k: 0,
    }
}

fn cover_all(family: &mut Vec<Vec<usize>>, universe: usize, rng: &mut ChaCha8Rng) {
    let covered: BTreeSet<usize> = family.iter().flatten().copied().collect();
    for e in (0..universe).filter(|e| !covered.contains(e)) {
        if family.is_empty() {
            family.push(vec![e]);
        } else {
            let i = rng.gen_range(0..family.len());
            family[i].push(e);
            family[i].sort_unstable();
        }
    }
}

/// Random PSI instance on a pattern of maximum degree at most three.
/// With `plant`, a random colorful embedding is added to the host.
pub fn random_psi(
    pattern_vertices: usize,
    pattern_edges: usize,
    class_size: usize,
    host_edges: usize,
    plant: bool,
    seed: u64,
) -> PsiInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = pattern_vertices.max(2);
    let mut deg = vec![0usize; l];
    let mut pe: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut tries = 0;
    while pe.len() < pattern_edges && tries < 200 {
        tries += 1;
        let (x, y) = distinct_pair(&mut rng, l);
        let key = (x.min(y), x.max(y));
        if deg[x] < 3 && deg[y] < 3 && pe.insert(key) {
            deg[x] += 1;
            deg[y] += 1;
        }
    }
    let pe: Vec<(usize, usize)> = pe.into_iter().collect();
    let size = class_size.max(1);
    let mut he: BTreeSet<HostEdge> = BTreeSet::new();
    if !pe.is_empty() {
        for _ in 0..host_edges {
            let (x, y) = pe[rng.gen_range(0..pe.len())];
            he.insert(((x, rng.gen_range(0..size)), (y, rng.gen_range(0..size))));
        }
    }
    if plant {
        let pick: Vec<usize> = (0..l).map(|_| rng.gen_range(0..size)).collect();
        for &(x, y) in &pe {
            he.insert(((x, pick[x]), (y, pick[y])));
        }
    }
    let he: Vec<_> = he.into_iter().collect();
    PsiInstance::new(l, &pe, &vec![size; l], &he).expect("generated instance is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_hitting_set, brute_force_min_simfvs};

    fn star_system() -> SetSystem {
        SetSystem::plain(4, vec![vec![0, 1], vec![1, 2], vec![1, 3]]).with_k(1)
    }

    #[test]
    fn star_instance_shape() {
        let enc = from_hitting_set(&star_system()).unwrap();
        assert_eq!(enc.graph.alpha(), 3);
        // element u2 sits on all three cycles, the others on one
        let hub = enc.element_vertex[1];
        for c in 1..=3 {
            assert_eq!(enc.graph.degree(hub, c).unwrap(), 2);
        }
        for e in [0, 2, 3] {
            let v = enc.element_vertex[e];
            let colors = (1..=3)
                .filter(|&c| enc.graph.degree(v, c).unwrap() > 0)
                .count();
            assert_eq!(colors, 1);
        }
        // 3 cycles of 8 vertices, with 2 extra merges at u2
        assert_eq!(enc.graph.num_vertices(), 24 - 2);
        let r = brute_force_min_simfvs(&enc.graph, 1, &BTreeSet::new()).unwrap();
        assert_eq!(r.min_size, Some(1));
        assert_eq!(r.witness, Some([hub].into()));
    }

    #[test]
    fn empty_family() {
        let enc = from_hitting_set(&SetSystem::plain(0, vec![])).unwrap();
        assert_eq!(enc.graph.num_vertices(), 0);
        assert!(matches!(
            from_hitting_set(&SetSystem::plain(2, vec![vec![0]])),
            Err(GeneratorError::ElementUncovered(1))
        ));
    }

    #[test]
    fn single_set_group() {
        let sys = SetSystem::plain(2, vec![vec![0, 1]]).with_k(1);
        let enc = phs_to_simfvs(&sys).unwrap();
        assert_eq!(enc.graph.alpha(), 1);
        assert_eq!(enc.graph.num_vertices(), 4);
        assert!(!enc.graph.is_forest(1).unwrap());
        let bad = SetSystem {
            universe: 2,
            groups: vec![vec![vec![0, 1], vec![1]]],
            k: 1,
        };
        assert_eq!(
            phs_to_simfvs(&bad).unwrap_err(),
            GeneratorError::NotDisjoint(0, 0, 1)
        );
    }

    #[test]
    fn two_groups_share_an_element() {
        let sys = SetSystem {
            universe: 3,
            groups: vec![vec![vec![0, 1]], vec![vec![1, 2]]],
            k: 1,
        };
        let enc = phs_to_simfvs(&sys).unwrap();
        let s: BTreeSet<VertexId> = [enc.element_vertex[1]].into();
        assert!(crate::oracle::verify_solution(&enc.graph, &s).unwrap());
    }

    #[test]
    fn single_edge_psi() {
        let psi = PsiInstance::new(2, &[(0, 1)], &[2, 2], &[((0, 0), (1, 1))]).unwrap();
        assert_eq!(psi.t, 1);
        let red = psi_to_phs(&psi).unwrap();
        assert_eq!(red.system.k, 3);
        assert_eq!(red.system.alpha(), 17);
        let hs = brute_force_hitting_set(&red.system, 3).unwrap().unwrap();
        assert_eq!(hs.len(), 3);
        // v^1_0 = 0, v^2_1 = 3, the edge element = 4
        let expected: BTreeSet<usize> = [0, 3, 4].into();
        assert!(red
            .system
            .sets()
            .all(|s| s.iter().any(|e| expected.contains(e))));
        assert_eq!(brute_force_hitting_set(&red.system, 2).unwrap(), None);
    }

    #[test]
    fn edge_coloring_examples() {
        let path = edge_coloring_4(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.iter().copied().collect::<BTreeSet<_>>(), [1, 2].into());
        let tri = edge_coloring_4(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.iter().copied().collect::<BTreeSet<_>>().len(), 3);
        let star = [(0, 1), (0, 2), (0, 3), (0, 4)];
        assert_eq!(
            edge_coloring_4(5, &star),
            Err(GeneratorError::DegreeTooHigh(0, 4))
        );
    }

    #[test]
    fn random_is_deterministic() {
        let spec = RandomSpec {
            n: 10,
            alpha: 2,
            edges_per_color: 12,
            planted: None,
            seed: 7,
        };
        assert_eq!(random_instance(&spec).graph, random_instance(&spec).graph);
        let empty = RandomSpec {
            edges_per_color: 0,
            ..spec
        };
        assert_eq!(random_instance(&empty).graph.num_edges(), 0);
    }

    #[test]
    fn planted_solution_works() {
        for seed in 0..20 {
            let spec = RandomSpec {
                n: 10,
                alpha: 2,
                edges_per_color: 14,
                planted: Some(2),
                seed,
            };
            let inst = random_instance(&spec);
            let s = inst.planted.unwrap();
            assert!(crate::oracle::verify_solution(&inst.graph, &s).unwrap());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn coloring_is_proper(n in 2usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
                let mut deg = vec![0; n];
                let mut edges = BTreeSet::new();
                for (u, v) in raw {
                    if u < n && v < n && u != v && deg[u] < 3 && deg[v] < 3 && edges.insert((u.min(v), u.max(v))) {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                let edges: Vec<_> = edges.into_iter().collect();
                let colors = edge_coloring_4(n, &edges).unwrap();
                for (i, a) in edges.iter().enumerate() {
                    prop_assert!((1..=4).contains(&colors[i]));
                    for (j, b) in edges.iter().enumerate().skip(i + 1) {
                        let touch = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
                        prop_assert!(!touch || colors[i] != colors[j]);
                    }
                }
            }

            #[test]
            fn psi_partition_is_disjoint(seed in any::<u64>(), l in 2usize..6, m in 1usize..7) {
                let psi = random_psi(l, m, 3, 6, seed % 2 == 0, seed);
                let red = psi_to_phs(&psi).unwrap();
                prop_assert_eq!(red.system.check_partition(), Ok(()));
                prop_assert_eq!(red.system.alpha(), 16 * psi.t as usize + 1);
            }
        }
    }
}
