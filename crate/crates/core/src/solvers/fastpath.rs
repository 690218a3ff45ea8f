use super::cnum::convexity_number_exact;
use super::independence::independence_number_exact;
use super::{ConvexityNumberResult, HullResult, Method, SearchBudget};
use crate::convexity::ConvexityKind;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{ProductGraph, ProductKind};
use crate::vertex_set::VertexSet;

fn check_factors(p: &ProductGraph, g: &Graph, h: &Graph) -> Result<()> {
    if p.m != g.order() || p.n != h.order() {
        return Err(Error::Precondition(format!(
            "factor orders {}x{} do not match the product's {}x{}",
            g.order(),
            h.order(),
            p.m,
            p.n
        )));
    }
    for (name, f) in [("first", g), ("second", h)] {
        if f.order() < 2 || !f.is_connected() {
            return Err(Error::Precondition(format!(
                "{name} factor must be connected with at least two vertices"
            )));
        }
    }
    Ok(())
}

/// Cycle hull number from a product formula, when one applies: 2 for strong
/// and lexicographic products, `m + n - 1` for Cartesian products of trees.
pub fn hull_fastpath(p: &ProductGraph, g: &Graph, h: &Graph) -> Result<Option<HullResult>> {
    check_factors(p, g, h)?;
    match p.kind {
        ProductKind::Strong | ProductKind::Lexicographic => {
            let (h1, h2) = h.edges().next().expect("a connected factor has an edge");
            let witness = VertexSet::from_vertices(p.order(), [p.index(0, h1), p.index(0, h2)])?;
            let method = if p.kind == ProductKind::Strong {
                Method::FastpathStrong
            } else {
                Method::FastpathLex
            };
            Ok(Some(HullResult {
                value: 2,
                witness,
                method,
            }))
        }
        ProductKind::Cartesian if g.is_tree() && h.is_tree() => {
            let witness = super::cartesian_hull_witness(g, h, &g.vertex_set(), &h.vertex_set())?;
            let method = if g.is_path() && h.is_path() {
                Method::FastpathGrid
            } else {
                Method::FastpathTreeProduct
            };
            Ok(Some(HullResult {
                value: g.order() + h.order() - 1,
                witness,
                method,
            }))
        }
        ProductKind::Cartesian => Ok(None),
    }
}

/// Cycle convexity number of a product: `max(n C(G), m C(H))` with a
/// product witness for Cartesian products, the independence number for
/// strong and lexicographic products.
pub fn convexity_fastpath(
    p: &ProductGraph,
    g: &Graph,
    h: &Graph,
    budget: SearchBudget,
) -> Result<ConvexityNumberResult> {
    check_factors(p, g, h)?;
    match p.kind {
        ProductKind::Cartesian => {
            let cc = ConvexityKind::Cycle;
            let cg = convexity_number_exact(g, cc, budget)?;
            let ch = convexity_number_exact(h, cc, budget)?;
            let left = p.cross(&cg.witness, &h.vertex_set());
            let right = p.cross(&g.vertex_set(), &ch.witness);
            let witness = if left.len() > right.len() || (left.len() == right.len() && left <= right) {
                left
            } else {
                right
            };
            Ok(ConvexityNumberResult {
                value: witness.len(),
                witness,
                method: Method::FastpathCartesian,
            })
        }
        ProductKind::Strong | ProductKind::Lexicographic => {
            let alpha = independence_number_exact(&p.graph, budget)?;
            Ok(ConvexityNumberResult {
                value: alpha.value,
                witness: alpha.witness,
                method: Method::FastpathAlpha,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::{is_convex, is_hull_set};
    use crate::graph::{generate, FamilySpec};
    use crate::product::product;

    fn fam(spec: FamilySpec) -> Graph {
        generate(spec).unwrap()
    }

    #[test]
    fn hull_examples() {
        let cases = [
            (FamilySpec::Path(4), FamilySpec::Cycle(5), ProductKind::Strong, 2, Method::FastpathStrong),
            (FamilySpec::Cycle(3), FamilySpec::Path(2), ProductKind::Lexicographic, 2, Method::FastpathLex),
            (
                FamilySpec::RandomTree { order: 4, seed: 1 },
                FamilySpec::RandomTree { order: 5, seed: 2 },
                ProductKind::Cartesian,
                8,
                Method::FastpathTreeProduct,
            ),
            (FamilySpec::Path(3), FamilySpec::Path(4), ProductKind::Cartesian, 6, Method::FastpathGrid),
        ];
        for (a, b, kind, value, method) in cases {
            let (g, h) = (fam(a), fam(b));
            let p = product(&g, &h, kind).unwrap();
            let r = hull_fastpath(&p, &g, &h).unwrap().unwrap();
            assert_eq!(r.value, value);
            assert_eq!(r.witness.len(), value);
            assert!(is_hull_set(&p.graph, &r.witness, ConvexityKind::Cycle).unwrap());
            assert_eq!(r.method, method);
        }
        let c4 = fam(FamilySpec::Cycle(4));
        let p = product(&c4, &c4, ProductKind::Cartesian).unwrap();
        assert_eq!(hull_fastpath(&p, &c4, &c4).unwrap(), None);
    }

    #[test]
    fn preconditions() {
        let k1 = Graph::empty(1);
        let p2 = fam(FamilySpec::Path(2));
        let p = product(&k1, &p2, ProductKind::Strong).unwrap();
        assert!(matches!(hull_fastpath(&p, &k1, &p2), Err(Error::Precondition(_))));
        let split = Graph::empty(2);
        let p = product(&split, &p2, ProductKind::Cartesian).unwrap();
        assert!(matches!(
            convexity_fastpath(&p, &split, &p2, SearchBudget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn convexity_examples() {
        let cases = [
            (FamilySpec::Complete(3), FamilySpec::Complete(5), ProductKind::Cartesian, 5),
            (FamilySpec::Cycle(4), FamilySpec::Cycle(6), ProductKind::Cartesian, 16),
            (FamilySpec::Cycle(4), FamilySpec::Cycle(4), ProductKind::Lexicographic, 4),
        ];
        for (a, b, kind, value) in cases {
            let (g, h) = (fam(a), fam(b));
            let p = product(&g, &h, kind).unwrap();
            let r = convexity_fastpath(&p, &g, &h, SearchBudget::default()).unwrap();
            assert_eq!(r.value, value);
            assert!(is_convex(&p.graph, &r.witness, ConvexityKind::Cycle).unwrap());
        }
    }
}
