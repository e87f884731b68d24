//! Maximum bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

/// Bipartite graph with `left` and `right` sides indexed from zero.
#[derive(Debug, Clone, Default)]
pub struct Bipartite {
    pub left: usize,
    pub right: usize,
    pub adj: Vec<Vec<usize>>,
}

impl Bipartite {
    pub fn new(left: usize, right: usize) -> Self {
        Bipartite {
            left,
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        debug_assert!(l < self.left && r < self.right);
        self.adj[l].push(r);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
    pub size: usize,
}

impl Matching {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate_left
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
    }
}

const INF: usize = usize::MAX;

pub fn maximum_matching(g: &Bipartite) -> Matching {
    let mut mate_left = vec![None; g.left];
    let mut mate_right: Vec<Option<usize>> = vec![None; g.right];
    let mut dist = vec![INF; g.left];
    let mut size = 0;

    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for l in 0..g.left {
            if mate_left[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &g.adj[l] {
                match mate_right[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == INF => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; g.left];
        for l in 0..g.left {
            if mate_left[l].is_none()
                && augment(g, l, &mut dist, &mut next, &mut mate_left, &mut mate_right)
            {
                size += 1;
            }
        }
    }
    Matching {
        mate_left,
        mate_right,
        size,
    }
}

fn augment(
    g: &Bipartite,
    start: usize,
    dist: &mut [usize],
    next: &mut [usize],
    mate_left: &mut [Option<usize>],
    mate_right: &mut [Option<usize>],
) -> bool {
    // iterative DFS along the layered graph
    let mut stack = vec![start];
    while let Some(&l) = stack.last() {
        if next[l] == g.adj[l].len() {
            dist[l] = INF;
            stack.pop();
            continue;
        }
        let r = g.adj[l][next[l]];
        next[l] += 1;
        match mate_right[r] {
            None => {
                // flip the path recorded on the stack
                let mut r = r;
                while let Some(l) = stack.pop() {
                    let prev = mate_left[l];
                    mate_left[l] = Some(r);
                    mate_right[r] = Some(l);
                    match prev {
                        Some(p) => r = p,
                        None => break,
                    }
                }
                return true;
            }
            Some(l2) if dist[l2] == dist[l].wrapping_add(1) => stack.push(l2),
            _ => {}
        }
    }
    false
}
