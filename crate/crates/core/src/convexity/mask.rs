//! Single-word kernel for graphs with at most 64 vertices, used by the exact
//! solvers' inner loops.

use super::ConvexityKind;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[inline]
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Adjacency masks of a graph on at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskGraph {
    adj: Vec<u64>,
    all: u64,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        let adj = g.adjacency_masks().ok_or(Error::BudgetExceeded {
            what: "bit-mask representation (n <= 64)".into(),
            lower: 0,
            upper: g.order(),
        })?;
        let n = g.order();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Self { adj, all })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn all(&self) -> u64 {
        self.all
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// The component of `start` inside the subgraph induced by `within`.
    pub fn flood(&self, start: u64, within: u64) -> u64 {
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Component masks of the subgraph induced by `s`.
    pub fn components(&self, s: u64) -> impl Iterator<Item = u64> + '_ {
        let mut rest = s;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let comp = self.flood(rest & rest.wrapping_neg(), s);
            rest &= !comp;
            Some(comp)
        })
    }

    pub fn interval(&self, s: u64, kind: ConvexityKind) -> u64 {
        let mut out = s;
        match kind {
            ConvexityKind::P3 => {
                for w in bits(self.all & !s) {
                    if (self.adj[w] & s).count_ones() >= 2 {
                        out |= 1 << w;
                    }
                }
            }
            ConvexityKind::Cycle => {
                for comp in self.components(s) {
                    if comp.count_ones() < 2 {
                        continue;
                    }
                    let mut cand = 0;
                    for v in bits(comp) {
                        cand |= self.adj[v];
                    }
                    for w in bits(cand & !s) {
                        if (self.adj[w] & comp).count_ones() >= 2 {
                            out |= 1 << w;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn closure(&self, s: u64, kind: ConvexityKind) -> u64 {
        let mut cur = s;
        loop {
            let next = self.interval(cur, kind);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_convex(&self, s: u64, kind: ConvexityKind) -> bool {
        self.interval(s, kind) == s
    }

    pub fn is_hull_set(&self, s: u64, kind: ConvexityKind) -> bool {
        self.closure(s, kind) == self.all
    }
}
