//! Cordate vertices of the forest `F_i = G_i - W`.
//!
//! Every tree of `F_i` is rooted at its smallest vertex. The attachment weight
//! of a vertex is its number of color-`i` edges into `W`, counted with
//! multiplicity; a vertex is cordate when its subtree has weight at least two.
//! The deepest cordate vertex of a tree has subtrees of weight at most one
//! below it, so the paths to its attachments run through vertices of degree
//! two in `G_i`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{ColorId, Dsu, VertexId};

use super::disjoint::DisjointInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CordateWitness {
    pub color: ColorId,
    pub vc: VertexId,
    pub uc: VertexId,
    pub wc: VertexId,
    /// `W`-neighbours used by `uc` and `wc`.
    pub u_anchor: VertexId,
    pub w_anchor: VertexId,
    /// `uc, x_1, .., x_t, vc`.
    pub p: Vec<VertexId>,
    /// `vc, y_1, .., y_t', wc`.
    pub p_prime: Vec<VertexId>,
    pub same_component: bool,
}

impl CordateWitness {
    /// The whole path from `uc` to `wc`.
    pub fn full_path(&self) -> Vec<VertexId> {
        let mut out = self.p.clone();
        out.extend(self.p_prime.iter().skip(1));
        out
    }

    pub fn depth_index(&self) -> usize {
        self.p.len() - 1
    }
}

/// Rooted view of one tree of `F_i`.
#[derive(Debug, Clone)]
pub(crate) struct RootedTree {
    pub(crate) order: Vec<VertexId>,
    pub(crate) parent: BTreeMap<VertexId, VertexId>,
    pub(crate) depth: BTreeMap<VertexId, usize>,
    pub(crate) children: BTreeMap<VertexId, Vec<VertexId>>,
}

pub(crate) fn rooted_trees(inst: &DisjointInstance, color: ColorId) -> Vec<RootedTree> {
    let g = &inst.graph;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for root in g.vertices().filter(|v| !inst.w.contains(v)) {
        if !seen.insert(root) {
            continue;
        }
        let mut t = RootedTree {
            order: vec![],
            parent: BTreeMap::new(),
            depth: BTreeMap::from([(root, 0)]),
            children: BTreeMap::new(),
        };
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            t.order.push(x);
            let mut kids = Vec::new();
            for (y, _) in g.neighbors(x, color) {
                if y != x && !inst.w.contains(&y) && seen.insert(y) {
                    t.parent.insert(y, x);
                    t.depth.insert(y, t.depth[&x] + 1);
                    kids.push(y);
                    queue.push_back(y);
                }
            }
            t.children.insert(x, kids);
        }
        out.push(t);
    }
    out
}

/// Attachment edges of `v` into `W` in color `c`: `(w, multiplicity)`.
fn anchors(inst: &DisjointInstance, v: VertexId, c: ColorId) -> Vec<(VertexId, u32)> {
    inst.graph
        .neighbors(v, c)
        .filter(|(u, _)| inst.w.contains(u))
        .collect()
}

/// The deepest cordate vertex of one tree, or `None` if the tree has none.
/// Ties in depth go to the smaller id.
pub(crate) fn deepest_in_tree(
    inst: &DisjointInstance,
    color: ColorId,
    tree: &RootedTree,
    comp: &mut Dsu,
) -> Option<CordateWitness> {
    let mut weight: BTreeMap<VertexId, u32> = BTreeMap::new();
    // for subtrees of weight one, the attached vertex and its anchor
    let mut single: BTreeMap<VertexId, (VertexId, VertexId)> = BTreeMap::new();
    for &v in tree.order.iter().rev() {
        let own = anchors(inst, v, color);
        let mut w: u32 = own.iter().map(|a| a.1).sum();
        for c in &tree.children[&v] {
            w += weight[c];
        }
        weight.insert(v, w);
        if w == 1 {
            let entry = match own.first() {
                Some(&(a, _)) => (v, a),
                None => {
                    let c = tree.children[&v]
                        .iter()
                        .find(|c| weight[*c] == 1)
                        .expect("weight one child");
                    single[c]
                }
            };
            single.insert(v, entry);
        }
    }
    let vc = tree
        .order
        .iter()
        .copied()
        .filter(|v| weight[v] >= 2)
        .max_by(|a, b| tree.depth[a].cmp(&tree.depth[b]).then(b.cmp(a)))?;

    let mut slots: Vec<(VertexId, VertexId)> = Vec::new();
    for (a, m) in anchors(inst, vc, color) {
        for _ in 0..m {
            slots.push((vc, a));
        }
    }
    for c in &tree.children[&vc] {
        if let Some(&s) = single.get(c) {
            slots.push(s);
        }
    }
    debug_assert!(
        slots.len() >= 2,
        "cordate vertex {vc} has fewer than two slots"
    );
    let mut pick = None;
    'outer: for i in 0..slots.len() {
        for j in i + 1..slots.len() {
            if comp.find(slots[i].1) == comp.find(slots[j].1) {
                pick = Some((i, j, true));
                break 'outer;
            }
        }
    }
    let (i, j, same) = pick.unwrap_or((0, 1, false));
    let ((uc, ua), (wc, wa)) = (slots[i], slots[j]);
    let up = |from: VertexId| {
        let mut path = vec![from];
        let mut cur = from;
        while cur != vc {
            cur = tree.parent[&cur];
            path.push(cur);
        }
        path
    };
    let p = up(uc);
    let mut p_prime = up(wc);
    p_prime.reverse();
    Some(CordateWitness {
        color,
        vc,
        uc,
        wc,
        u_anchor: ua,
        w_anchor: wa,
        p,
        p_prime,
        same_component: same,
    })
}

/// A deepest cordate vertex of some tree of `F_i`. Trees are scanned by
/// smallest vertex; the first tree whose witness closes a cycle through one
/// component of `W_i` wins, otherwise the first tree with a cordate vertex.
pub fn find_cordate(inst: &DisjointInstance, color: ColorId) -> Option<CordateWitness> {
    let g = &inst.graph;
    let mut comp = Dsu::new(g.capacity());
    for &u in &inst.w {
        for (v, _) in g.neighbors(u, color) {
            if inst.w.contains(&v) {
                comp.union(u, v);
            }
        }
    }
    let mut fallback = None;
    for tree in rooted_trees(inst, color) {
        if let Some(wit) = deepest_in_tree(inst, color, &tree, &mut comp) {
            if wit.same_component {
                return Some(wit);
            }
            fallback.get_or_insert(wit);
        }
    }
    fallback
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColoredGraph;

    fn inst(g: EdgeColoredGraph, w: &[VertexId]) -> DisjointInstance {
        DisjointInstance::new(g, w.iter().copied().collect(), 3)
    }

    #[test]
    fn leaf_with_two_anchors() {
        // W = {0, 1} joined; leaf 2 adjacent to both
        let mut g = EdgeColoredGraph::new(3, 1);
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(2, 0, 1).unwrap();
        g.add_edge(2, 1, 1).unwrap();
        let w = find_cordate(&inst(g, &[0, 1]), 1).unwrap();
        assert_eq!((w.vc, w.uc, w.wc), (2, 2, 2));
        assert_eq!(w.p, vec![2]);
        assert_eq!(w.p_prime, vec![2]);
        assert!(w.same_component);
    }

    #[test]
    fn single_attachment_path_is_not_cordate() {
        let mut g = EdgeColoredGraph::new(4, 1);
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 1).unwrap();
        g.add_edge(2, 3, 1).unwrap();
        assert_eq!(find_cordate(&inst(g, &[0]), 1), None);
    }

    #[test]
    fn deepest_candidate_wins() {
        // tree rooted at 1: 1-2, 2-3, 2-4, 1-5; anchors at 3, 4 and 5 into W = {0}
        let mut g = EdgeColoredGraph::new(6, 1);
        for (u, v) in [(1, 2), (2, 3), (2, 4), (1, 5), (3, 0), (4, 0), (5, 0)] {
            g.add_edge(u, v, 1).unwrap();
        }
        let w = find_cordate(&inst(g, &[0]), 1).unwrap();
        assert_eq!(w.vc, 2);
        assert_eq!(w.p, vec![3, 2]);
        assert_eq!(w.p_prime, vec![2, 4]);
        assert_eq!(w.full_path(), vec![3, 2, 4]);
    }

    #[test]
    fn different_components() {
        let mut g = EdgeColoredGraph::new(4, 1);
        for (u, v) in [(2, 3), (2, 0), (3, 1)] {
            g.add_edge(u, v, 1).unwrap();
        }
        let w = find_cordate(&inst(g, &[0, 1]), 1).unwrap();
        assert!(!w.same_component);
        assert_eq!(w.vc, 2);
        assert_eq!(w.p_prime, vec![2, 3]);
    }
}
