use crate::convexity::{closure, is_hull_set, ConvexityKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{product, ProductGraph, ProductKind};
use crate::vertex_set::VertexSet;

use super::PartitionWitness;

/// Lower and upper bounds on the Cartesian hull number from the factor hull
/// numbers: `max(a, b, 3)` and `a + b - 1`.
pub fn cartesian_hull_bounds(hn_g: usize, hn_h: usize) -> (usize, usize) {
    (hn_g.max(hn_h).max(3), (hn_g + hn_h).saturating_sub(1))
}

/// The L-shaped set `({g1} x SH) ∪ (SG x {hs})` with `g1 = min SG` and
/// `hs = max SH`, verified to be a hull set of `G □ H`.
pub fn cartesian_hull_witness(g: &Graph, h: &Graph, sg: &VertexSet, sh: &VertexSet) -> Result<VertexSet> {
    let cc = ConvexityKind::Cycle;
    if !is_hull_set(g, sg, cc)? {
        return Err(Error::NotHullSet(format!("{sg} is not a hull set of the first factor")));
    }
    if !is_hull_set(h, sh, cc)? {
        return Err(Error::NotHullSet(format!("{sh} is not a hull set of the second factor")));
    }
    let p = product(g, h, ProductKind::Cartesian)?;
    let g1 = sg.first().expect("a hull set of a nonempty graph is nonempty");
    let hs = sh.last().expect("a hull set of a nonempty graph is nonempty");
    let mut s = VertexSet::empty(p.order());
    for y in sh {
        s.insert(p.index(g1, y));
    }
    for x in sg {
        s.insert(p.index(x, hs));
    }
    if !closure(&p.graph, &s, cc)?.closed.is_full() {
        return Err(Error::Counterexample(format!(
            "L-shaped set {s} does not close {}",
            p.describe("G", "H")
        )));
    }
    Ok(s)
}

/// Lifts a split minimum hull set `S = S1 ∪ S2` of `G` into `G □ H` using a
/// hull set `{h, h2}` of `H`: the part of `S` inside the component `B1` of
/// `G[⟨S2⟩]` that holds the least meeting vertex goes to layer `h2`, the
/// rest to layer `h`.
///
/// The result is returned whether or not it is a hull set of the product;
/// callers check that separately.
pub fn cartesian_partition_lift(
    p: &ProductGraph,
    witness: &PartitionWitness,
    h: usize,
    h2: usize,
) -> Result<VertexSet> {
    if p.kind != ProductKind::Cartesian {
        return Err(Error::Precondition("partition lift needs a Cartesian product".into()));
    }
    if h >= p.n || h2 >= p.n || h == h2 {
        return Err(Error::Precondition(format!(
            "layers {h} and {h2} must be distinct vertices of the second factor"
        )));
    }
    if witness.hull_set.universe() != p.m {
        return Err(Error::UniverseMismatch {
            expected: p.m,
            found: witness.hull_set.universe(),
        });
    }
    let b1 = &witness.block;
    let mut t = VertexSet::empty(p.order());
    for x in &witness.hull_set {
        let layer = if b1.contains(x) { h2 } else { h };
        t.insert(p.index(x, layer));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn bounds_examples() {
        assert_eq!(cartesian_hull_bounds(2, 2), (3, 3));
        assert_eq!(cartesian_hull_bounds(4, 2), (4, 5));
        assert_eq!(cartesian_hull_bounds(3, 3), (3, 5));
    }

    #[test]
    fn l_shaped_witnesses() {
        let k3 = generate(FamilySpec::Complete(3)).unwrap();
        let s = VertexSet::from_vertices(3, [0, 1]).unwrap();
        let w = cartesian_hull_witness(&k3, &k3, &s, &s).unwrap();
        assert_eq!(w.len(), 3);
        // (0,0), (0,1), (1,1)
        assert_eq!(w.to_vec(), vec![0, 1, 4]);

        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let p2 = generate(FamilySpec::Path(2)).unwrap();
        let sg = VertexSet::from_vertices(4, [0, 1, 2]).unwrap();
        let sh = VertexSet::full(2);
        let w = cartesian_hull_witness(&c4, &p2, &sg, &sh).unwrap();
        assert_eq!(w.len(), 4);
        let p = product(&c4, &p2, ProductKind::Cartesian).unwrap();
        assert!(is_hull_set(&p.graph, &w, ConvexityKind::Cycle).unwrap());
    }

    #[test]
    fn l_shape_rejects_non_hull_sets() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let bad = VertexSet::from_vertices(4, [0, 2]).unwrap();
        let ok = VertexSet::from_vertices(4, [0, 1, 2]).unwrap();
        assert!(matches!(
            cartesian_hull_witness(&c4, &c4, &bad, &ok),
            Err(Error::NotHullSet(_))
        ));
    }
}
