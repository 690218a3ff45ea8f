//! Cartesian, strong and lexicographic products with layer and projection
//! queries.
//!
//! Vertex `(g, h)` of a product of `G` (order `m`) and `H` (order `n`) has id
//! `g * n + h`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Strong => "⊠",
            ProductKind::Lexicographic => "∘",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "cart" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            _ => Err(Error::Precondition(format!("unknown product kind `{s}`"))),
        }
    }
}

/// Which factor a layer or projection refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// The left factor `G`.
    First,
    /// The right factor `H`.
    Second,
}

/// A product graph together with its factor orders and kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub m: usize,
    pub n: usize,
    pub kind: ProductKind,
}

/// Builds `G * H` for the given kind. Labels are `(gLabel,hLabel)`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<ProductGraph> {
    let (m, n) = (g.order(), h.order());
    if m == 0 || n == 0 {
        return Err(Error::EmptyFactor);
    }
    let mut b = GraphBuilder::new(0);
    for gv in 0..m {
        for hv in 0..n {
            b.add_vertex(format!("({},{})", g.label(gv), h.label(hv)));
        }
    }
    let idx = |a: usize, c: usize| a * n + c;
    for g1 in 0..m {
        for h1 in 0..n {
            for g2 in g1..m {
                let h_start = if g2 == g1 { h1 + 1 } else { 0 };
                for h2 in h_start..n {
                    let g_adj = g.has_edge(g1, g2);
                    let h_adj = h.has_edge(h1, h2);
                    let cartesian = (g_adj && h1 == h2) || (g1 == g2 && h_adj);
                    let adjacent = match kind {
                        ProductKind::Cartesian => cartesian,
                        ProductKind::Strong => cartesian || (g_adj && h_adj),
                        ProductKind::Lexicographic => g_adj || (g1 == g2 && h_adj),
                    };
                    if adjacent {
                        b.add_edge(idx(g1, h1), idx(g2, h2))?;
                    }
                }
            }
        }
    }
    Ok(ProductGraph {
        graph: b.build(),
        m,
        n,
        kind,
    })
}

impl ProductGraph {
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.m && h < self.n);
        g * self.n + h
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n, v % self.n)
    }

    pub fn order(&self) -> usize {
        self.m * self.n
    }

    pub fn describe(&self, g_name: &str, h_name: &str) -> String {
        format!("{g_name}{}{h_name}", self.kind.symbol())
    }

    /// `layer(First, u)` is the H-layer `{u} × V(H)`; `layer(Second, v)` is the
    /// G-layer `V(G) × {v}`.
    pub fn layer(&self, fixed: Factor, index: usize) -> Result<VertexSet> {
        let mut s = VertexSet::empty(self.order());
        match fixed {
            Factor::First => {
                if index >= self.m {
                    return Err(Error::VertexOutOfRange { vertex: index, n: self.m });
                }
                for h in 0..self.n {
                    s.insert(self.index(index, h));
                }
            }
            Factor::Second => {
                if index >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: index, n: self.n });
                }
                for g in 0..self.m {
                    s.insert(self.index(g, index));
                }
            }
        }
        Ok(s)
    }

    /// `π_G(S)` for `First`, `π_H(S)` for `Second`.
    pub fn projection(&self, s: &VertexSet, side: Factor) -> VertexSet {
        let universe = match side {
            Factor::First => self.m,
            Factor::Second => self.n,
        };
        let mut out = VertexSet::empty(universe);
        for v in s {
            let (g, h) = self.coords(v);
            out.insert(match side {
                Factor::First => g,
                Factor::Second => h,
            });
        }
        out
    }

    /// `A × B` as a vertex set of the product.
    pub fn cross(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for g in a {
            for h in b {
                out.insert(self.index(g, h));
            }
        }
        out
    }

    /// Whether `S = π_G(S) × π_H(S)`.
    pub fn is_subproduct(&self, s: &VertexSet) -> bool {
        let pg = self.projection(s, Factor::First);
        let ph = self.projection(s, Factor::Second);
        pg.len() * ph.len() == s.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn k2() -> Graph {
        generate(FamilySpec::Complete(2)).unwrap()
    }

    #[test]
    fn k2_products() {
        let c4 = product(&k2(), &k2(), ProductKind::Cartesian).unwrap();
        assert_eq!(c4.graph.size(), 4);
        assert!((0..4).all(|v| c4.graph.degree(v) == 2));
        let k4 = generate(FamilySpec::Complete(4)).unwrap();
        for kind in [ProductKind::Strong, ProductKind::Lexicographic] {
            assert_eq!(product(&k2(), &k2(), kind).unwrap().graph.without_labels(), k4);
        }
        assert_eq!(c4.graph.label(c4.index(1, 0)), "(1,0)");
        assert_eq!(product(&Graph::empty(0), &k2(), ProductKind::Strong), Err(Error::EmptyFactor));
    }

    #[test]
    fn layers() {
        let p = product(&k2(), &k2(), ProductKind::Cartesian).unwrap();
        assert_eq!(p.layer(Factor::Second, 0).unwrap().to_vec(), vec![p.index(0, 0), p.index(1, 0)]);
        let g = generate(FamilySpec::Path(3)).unwrap();
        let h = generate(FamilySpec::Path(4)).unwrap();
        let p = product(&g, &h, ProductKind::Cartesian).unwrap();
        let layer = p.layer(Factor::First, 1).unwrap();
        assert_eq!(layer.to_vec(), (0..4).map(|h| p.index(1, h)).collect::<Vec<_>>());
        assert!(p.layer(Factor::First, 3).is_err());
        let single = product(&Graph::empty(1), &h, ProductKind::Strong).unwrap();
        for v in 0..4 {
            assert_eq!(single.layer(Factor::Second, v).unwrap().to_vec(), vec![v]);
        }
    }

    #[test]
    fn projections_and_subproducts() {
        let g = generate(FamilySpec::Path(3)).unwrap();
        let h = generate(FamilySpec::Path(4)).unwrap();
        let p = product(&g, &h, ProductKind::Cartesian).unwrap();
        let layer = p.layer(Factor::First, 2).unwrap();
        assert_eq!(p.projection(&layer, Factor::First).to_vec(), vec![2]);
        assert!(p.projection(&VertexSet::empty(12), Factor::First).is_empty());
        assert_eq!(p.projection(&VertexSet::full(12), Factor::Second).len(), 4);

        let s = VertexSet::from_vertices(12, [p.index(0, 0), p.index(0, 1)]).unwrap();
        assert!(p.is_subproduct(&s));
        let s = VertexSet::from_vertices(12, [p.index(0, 0), p.index(1, 1)]).unwrap();
        assert!(!p.is_subproduct(&s));
        assert!(p.is_subproduct(&VertexSet::empty(12)));
    }
}
