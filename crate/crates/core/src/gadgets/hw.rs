//! The 14-vertex gadget `H(w)` and the 74-vertex non-edge gadget `F^uv`.

use crate::convexity::{ConvexityKind, MaskGraph};
use crate::graph::{Graph, GraphBuilder};
use crate::vertex_set::VertexSet;

/// Number of vertices of `H(w)`.
pub const HW_ORDER: usize = 14;

/// Vertex names of `H(w)` in id order: `y0..y5` then `x1..x8`.
pub const HW_NAMES: [&str; HW_ORDER] = [
    "y0", "y1", "y2", "y3", "y4", "y5", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8",
];

/// The five defining cycles, by vertex name.
pub const HW_CYCLES: [&[&str]; 5] = [
    &["x1", "y1", "y2", "x2"],
    &["x3", "y2", "y3", "x4"],
    &["x6", "y4", "y3", "x5"],
    &["x8", "y5", "y4", "x7"],
    &["y0", "y1", "y2", "y3", "y4", "y5"],
];

/// The seed set `{y1..y5, x1, x3, x5, x7}` by name.
pub const HW_SEEDS: [&str; 9] = ["y1", "y2", "y3", "y4", "y5", "x1", "x3", "x5", "x7"];

/// Id of a named vertex of `H(w)`.
pub fn hw_vertex(name: &str) -> usize {
    HW_NAMES
        .iter()
        .position(|&n| n == name)
        .unwrap_or_else(|| panic!("no vertex `{name}` in H(w)"))
}

/// `H(w)` with its vertices labeled by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetHw {
    pub graph: Graph,
}

impl GadgetHw {
    pub fn y0(&self) -> usize {
        hw_vertex("y0")
    }
}

/// Builds `H(w)` as the union of its five cycles.
pub fn build_hw() -> GadgetHw {
    let mut b = GraphBuilder::new(0);
    for name in HW_NAMES {
        b.add_vertex(name);
    }
    for cycle in HW_CYCLES {
        for i in 0..cycle.len() {
            let (a, c) = (hw_vertex(cycle[i]), hw_vertex(cycle[(i + 1) % cycle.len()]));
            // y1y2, y2y3, y3y4 and y4y5 are shared with the hexagon
            let _ = b.add_edge(a, c);
        }
    }
    GadgetHw { graph: b.build() }
}

/// The 9-vertex hull set of `H(w)`.
pub fn hull_set_hw() -> VertexSet {
    VertexSet::from_vertices(HW_ORDER, HW_SEEDS.iter().map(|n| hw_vertex(n))).expect("names are in range")
}

/// The least 8-set `T` (by bit mask) avoiding `y0` such that `T ∪ {y0}` is a
/// hull set of `H(w)`. When `y0` is generated from outside the gadget, `T`
/// alone finishes the copy.
pub fn hw_completion_set() -> VertexSet {
    let g = build_hw().graph;
    let mg = MaskGraph::new(&g).expect("H(w) fits a mask");
    let y0 = 1u64 << hw_vertex("y0");
    let t = (0u64..1 << HW_ORDER)
        .find(|&m| m & y0 == 0 && m.count_ones() == 8 && mg.is_hull_set(m | y0, ConvexityKind::Cycle))
        .expect("an 8-set completes H(w) together with y0");
    VertexSet::from_mask(HW_ORDER, t)
}

/// `F^uv`: vertices `u, v, u', v'` (ids 0..4) followed by five copies of
/// `H(w)` at offsets `4 + 14 i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetFuv {
    pub graph: Graph,
    pub u: usize,
    pub u_prime: usize,
    pub v: usize,
    pub v_prime: usize,
    /// Id offset of copy `w_{i+1}`.
    pub copies: [usize; 5],
}

impl GadgetFuv {
    /// Id of `y0` in copy `i` (1-based, as in `w_1..w_5`).
    pub fn y0(&self, i: usize) -> usize {
        self.copies[i - 1] + hw_vertex("y0")
    }

    /// The three attachment structures: two 4-cycles and one path.
    pub fn attachments(&self) -> [Vec<usize>; 3] {
        [
            vec![self.u, self.u_prime, self.y0(2), self.y0(1)],
            vec![self.v, self.v_prime, self.y0(4), self.y0(5)],
            vec![self.u_prime, self.y0(3), self.v_prime],
        ]
    }
}

pub(crate) fn fuv_into(b: &mut GraphBuilder, u: usize, v: usize, tag: &str) -> GadgetFuv {
    let hw = build_hw().graph;
    let u_prime = b.add_vertex(format!("u'^{tag}"));
    let v_prime = b.add_vertex(format!("v'^{tag}"));
    let mut copies = [0; 5];
    for (i, slot) in copies.iter_mut().enumerate() {
        *slot = b.append(&hw, |x| format!("w{}^{tag}:{}", i + 1, HW_NAMES[x]));
    }
    let f = GadgetFuv {
        graph: Graph::empty(0),
        u,
        u_prime,
        v,
        v_prime,
        copies,
    };
    let [c1, c2, p] = f.attachments();
    for cycle in [c1, c2] {
        for i in 0..4 {
            b.add_edge(cycle[i], cycle[(i + 1) % 4]).expect("attachment edges are new");
        }
    }
    b.add_edge(p[0], p[1]).expect("attachment edges are new");
    b.add_edge(p[1], p[2]).expect("attachment edges are new");
    f
}

/// Builds `F^uv` standalone.
pub fn build_fuv() -> GadgetFuv {
    let mut b = GraphBuilder::new(0);
    let u = b.add_vertex("u");
    let v = b.add_vertex("v");
    let mut f = fuv_into(&mut b, u, v, "");
    // u, v, u', v' take ids 0..4
    debug_assert_eq!((f.u_prime, f.v_prime), (2, 3));
    f.graph = b.build();
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::{closure, is_hull_set};

    #[test]
    fn hw_structure() {
        let hw = build_hw();
        assert_eq!(hw.graph.order(), 14);
        assert_eq!(hw.graph.size(), 18);
        assert!(hw.graph.is_bipartite());
        assert_eq!(hw.graph.label(hw.y0()), "y0");
        for cycle in HW_CYCLES {
            for i in 0..cycle.len() {
                let (a, c) = (hw_vertex(cycle[i]), hw_vertex(cycle[(i + 1) % cycle.len()]));
                assert!(hw.graph.has_edge(a, c));
            }
        }
    }

    #[test]
    fn hw_seed_set_closes() {
        let hw = build_hw();
        let s = hull_set_hw();
        assert_eq!(s.len(), 9);
        assert!(is_hull_set(&hw.graph, &s, ConvexityKind::Cycle).unwrap());
        let rounds = closure(&hw.graph, &s, ConvexityKind::Cycle).unwrap().rounds;
        assert_eq!(rounds.len(), 2);
        let names: Vec<&str> = rounds[1].iter().map(|v| HW_NAMES[v]).collect();
        assert_eq!(names, ["y0", "x2", "x4", "x6", "x8"]);
    }

    #[test]
    fn fuv_structure() {
        let f = build_fuv();
        assert_eq!(f.graph.order(), 74);
        assert!(f.graph.is_bipartite());
        assert_eq!((f.u, f.v, f.u_prime, f.v_prime), (0, 1, 2, 3));
        let mut around_u = vec![f.u_prime, f.y0(1)];
        around_u.sort();
        assert_eq!(f.graph.neighbors(f.u), around_u.as_slice());
        assert_eq!(f.graph.degree(f.v), 2);
        assert!(f.graph.has_edge(f.v, f.y0(5)));
        assert_eq!(f.graph.label(f.y0(3)), "w3^:y0");
        for structure in f.attachments() {
            for pair in structure.windows(2) {
                assert!(f.graph.has_edge(pair[0], pair[1]));
            }
        }
    }

    #[test]
    fn completion_set() {
        let t = hw_completion_set();
        let names: Vec<&str> = t.iter().map(|x| HW_NAMES[x]).collect();
        assert_eq!(names, ["y1", "y2", "y3", "y4", "x1", "x3", "x5", "x7"]);
        let mut with_y0 = t.clone();
        with_y0.insert(hw_vertex("y0"));
        let g = build_hw().graph;
        assert!(is_hull_set(&g, &with_y0, ConvexityKind::Cycle).unwrap());
        assert!(!is_hull_set(&g, &t, ConvexityKind::Cycle).unwrap());
    }
}
