//! Interval operators, convex hulls and convexity predicates for the cycle
//! and P3 convexities.
//!
//! A vertex `w` outside `S` is in the cycle interval of `S` when the subgraph
//! induced by `S ∪ {w}` has a cycle through `w`. Such a cycle leaves `w` by
//! one neighbor and returns by another, so the test is: two distinct
//! neighbors of `w` lie in one component of `G[S]`. The P3 interval adds
//! every `w` with at least two neighbors in `S`.

mod dsu;
pub mod mask;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use dsu::DisjointSet;
pub use mask::MaskGraph;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConvexityKind {
    #[serde(rename = "cc")]
    Cycle,
    P3,
}

impl fmt::Display for ConvexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConvexityKind::Cycle => "cc",
            ConvexityKind::P3 => "p3",
        })
    }
}

impl FromStr for ConvexityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cc" | "cycle" => Ok(ConvexityKind::Cycle),
            "p3" | "P3" => Ok(ConvexityKind::P3),
            _ => Err(Error::Precondition(format!("unknown convexity `{s}`"))),
        }
    }
}

/// A convex hull together with its generation trace.
///
/// `rounds[0]` is the seed; `rounds[r]` holds the vertices first generated by
/// the `r`-th application of the interval operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub closed: VertexSet,
    pub rounds: Vec<VertexSet>,
}

/// Component tracking for the members of a growing set.
struct Members<'g> {
    g: &'g Graph,
    set: VertexSet,
    dsu: DisjointSet,
}

impl<'g> Members<'g> {
    fn new(g: &'g Graph, seed: &VertexSet) -> Self {
        let mut m = Self {
            g,
            set: seed.clone(),
            dsu: DisjointSet::new(g.order()),
        };
        for (u, v) in g.edges() {
            if m.set.contains(u) && m.set.contains(v) {
                m.dsu.union(u, v);
            }
        }
        m
    }

    /// Outside vertices the interval operator adds to the current members.
    fn generated(&mut self, kind: ConvexityKind) -> Vec<usize> {
        let mut out = Vec::new();
        let mut roots = Vec::new();
        for w in 0..self.g.order() {
            if self.set.contains(w) {
                continue;
            }
            let inside = self.g.neighbors(w).iter().filter(|&&x| self.set.contains(x));
            let hit = match kind {
                ConvexityKind::P3 => inside.count() >= 2,
                ConvexityKind::Cycle => {
                    roots.clear();
                    let mut hit = false;
                    for &x in inside {
                        let r = self.dsu.find(x);
                        if roots.contains(&r) {
                            hit = true;
                            break;
                        }
                        roots.push(r);
                    }
                    hit
                }
            };
            if hit {
                out.push(w);
            }
        }
        out
    }

    fn add(&mut self, new: &[usize]) {
        for &w in new {
            self.set.insert(w);
        }
        for &w in new {
            for &x in self.g.neighbors(w) {
                if self.set.contains(x) {
                    self.dsu.union(w, x);
                }
            }
        }
    }
}

/// One application of the interval operator.
pub fn interval(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> Result<VertexSet> {
    g.check_set(s)?;
    let mut m = Members::new(g, s);
    let new = m.generated(kind);
    m.add(&new);
    Ok(m.set)
}

/// The convex hull of `s`: the least fixpoint of the interval operator above
/// `s`. Vertices generated in one round only act as generators from the next
/// round on.
pub fn closure(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> Result<ClosureResult> {
    g.check_set(s)?;
    let mut m = Members::new(g, s);
    let mut rounds = vec![s.clone()];
    loop {
        let new = m.generated(kind);
        if new.is_empty() {
            break;
        }
        m.add(&new);
        rounds.push(VertexSet::from_vertices(g.order(), new)?);
    }
    Ok(ClosureResult {
        closed: m.set,
        rounds,
    })
}

pub fn is_convex(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> Result<bool> {
    Ok(interval(g, s, kind)? == *s)
}

pub fn is_hull_set(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> Result<bool> {
    Ok(closure(g, s, kind)?.closed.is_full())
}

/// Convex hull without the trace.
pub fn hull(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> Result<VertexSet> {
    Ok(closure(g, s, kind)?.closed)
}
