//! The branching measure and its per-edge bookkeeping.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::Dsu;

use super::disjoint::DisjointInstance;

/// A measure value stored in half units so the two-color variant stays integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure {
    pub halves: i64,
}

impl Measure {
    /// `alpha*k + sum(eta_i) - sum(|C_i|)`, or for two colors with `variant`,
    /// `2k + eta_1/2 + eta_2/2 - |C_1| - |C_2|`.
    pub fn of(inst: &DisjointInstance, variant: bool) -> Self {
        let alpha = inst.graph.alpha() as i64;
        let k = inst.k as i64;
        let eta: i64 = (1..=inst.graph.alpha())
            .map(|c| components_in_w(inst, c) as i64)
            .sum();
        let special: i64 = inst.cycles.iter().map(|c| c.len() as i64).sum();
        let halves = if variant && alpha == 2 {
            4 * k + eta - 2 * special
        } else {
            2 * (alpha * k + eta - special)
        };
        Measure { halves }
    }

    pub fn value(self) -> f64 {
        self.halves as f64 / 2.0
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.halves % 2 == 0 {
            write!(f, "{}", self.halves / 2)
        } else {
            write!(f, "{}.5", self.halves / 2)
        }
    }
}

/// Number of connected components of the color-`c` graph induced on `W`.
pub fn components_in_w(inst: &DisjointInstance, c: usize) -> usize {
    components_of(&inst.graph, &inst.w, c)
}

pub(crate) fn components_of(
    g: &crate::graph::EdgeColoredGraph,
    w: &BTreeSet<usize>,
    c: usize,
) -> usize {
    let mut dsu = Dsu::new(g.capacity());
    let mut count = w.len();
    for &u in w {
        for (v, _) in g.neighbors(u, c) {
            if v > u && w.contains(&v) && dsu.union(u, v) {
                count -= 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    /// Both attachments reach one component of `W_i`.
    SameComponent,
    /// The attachments reach different components of `W_i`.
    DifferentComponents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    TakeCordate,
    IsolateNear,
    IsolateFar,
    MoveToW,
}

impl Branch {
    pub const ALL: [Branch; 4] = [
        Branch::TakeCordate,
        Branch::IsolateNear,
        Branch::IsolateFar,
        Branch::MoveToW,
    ];

    /// Whether a drop of `drop` half units meets the declared amount.
    pub fn drop_ok(self, drop: i64, alpha: usize, variant: bool) -> bool {
        match self {
            Branch::TakeCordate => {
                let expected = if variant && alpha == 2 {
                    4
                } else {
                    2 * alpha as i64
                };
                drop == expected
            }
            Branch::IsolateNear | Branch::IsolateFar => drop == 2,
            Branch::MoveToW => drop >= if variant && alpha == 2 { 1 } else { 2 },
        }
    }
}

/// One branch edge whose measure drop differs from the declared amount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureViolation {
    pub case: Case,
    pub branch: Branch,
    pub before: Measure,
    pub after: Measure,
    /// Special cycles dropped because the branch put one of their vertices
    /// into the solution or into `W`.
    pub purged: usize,
}
