//! Reference cycle interval by explicit cycle search.
//!
//! Exponential in the worst case; meant for cross-checking the
//! component-based operator on small graphs.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Whether the subgraph induced by `s ∪ {w}` contains a cycle through `w`,
/// found by enumerating simple paths that leave `w` and return to it.
pub fn has_cycle_through(g: &Graph, s: &VertexSet, w: usize) -> bool {
    fn extend(g: &Graph, s: &VertexSet, w: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        for &x in g.neighbors(last) {
            if x == w && path.len() >= 3 {
                return true;
            }
            if x != w && s.contains(x) && !on_path[x] {
                on_path[x] = true;
                path.push(x);
                if extend(g, s, w, path, on_path) {
                    return true;
                }
                path.pop();
                on_path[x] = false;
            }
        }
        false
    }
    let mut on_path = vec![false; g.order()];
    on_path[w] = true;
    let mut path = vec![w];
    extend(g, s, w, &mut path, &mut on_path)
}

/// `S` plus every outside vertex closing a cycle with `S`.
pub fn cycle_interval(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    for w in 0..g.order() {
        if !s.contains(w) && has_cycle_through(g, s, w) {
            out.insert(w);
        }
    }
    out
}

/// Iterates [`cycle_interval`] to its fixpoint.
pub fn cycle_hull(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut cur = s.clone();
    loop {
        let next = cycle_interval(g, &cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Whether some simple cycle of `g` contains `v`, by path enumeration.
pub fn on_some_cycle(g: &Graph, v: usize) -> bool {
    let mut others = g.vertex_set();
    others.remove(v);
    has_cycle_through(g, &others, v)
}
