use serde::Serialize;

use super::hull::{hull_number_exact, minimum_hull_sets};
use super::{Control, SearchBudget};
use crate::convexity::{hull, ConvexityKind, MaskGraph};
use crate::convexity::mask::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A minimum hull set split into two nonempty parts whose hulls meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionWitness {
    pub hull_set: VertexSet,
    pub part1: VertexSet,
    pub part2: VertexSet,
    /// `⟨part1⟩ ∩ ⟨part2⟩`.
    pub meet: VertexSet,
    /// The component of the subgraph induced by `⟨part2⟩` containing the
    /// least vertex of `meet`.
    pub block: VertexSet,
}

/// `⟨S1⟩ ∩ ⟨S2⟩` under the cycle convexity.
pub fn split_hulls_meet(g: &Graph, s1: &VertexSet, s2: &VertexSet) -> Result<VertexSet> {
    let a = hull(g, s1, ConvexityKind::Cycle)?;
    let b = hull(g, s2, ConvexityKind::Cycle)?;
    Ok(a.intersection(&b))
}

/// Builds the witness record for a given split, or `None` when the hulls
/// of the two parts are disjoint.
pub fn witness_for_split(g: &Graph, hull_set: &VertexSet, part1: &VertexSet) -> Result<Option<PartitionWitness>> {
    let part2 = hull_set.difference(part1);
    if part1.is_empty() || part2.is_empty() || !part1.is_subset(hull_set) {
        return Err(Error::Precondition("both parts of the split must be nonempty".into()));
    }
    let meet = split_hulls_meet(g, part1, &part2)?;
    let Some(g0) = meet.first() else {
        return Ok(None);
    };
    let closed2 = hull(g, &part2, ConvexityKind::Cycle)?;
    let (sub, ids) = g.induced_subgraph(&closed2);
    let block = sub
        .components()
        .into_iter()
        .map(|c| VertexSet::from_vertices(g.order(), c.iter().map(|v| ids[v])).expect("ids in range"))
        .find(|c| c.contains(g0))
        .expect("the meeting vertex lies in the hull of the second part");
    Ok(Some(PartitionWitness {
        hull_set: hull_set.clone(),
        part1: part1.clone(),
        part2,
        meet,
        block,
    }))
}

/// The first minimum cycle hull set (in mask order) with a split into two
/// nonempty parts whose hulls intersect, together with the first such split
/// (the part holding the least vertex of the hull set is `part1`; splits are
/// tried in increasing mask order of `part1`).
pub fn partition_witness(g: &Graph, budget: SearchBudget) -> Result<Option<PartitionWitness>> {
    let hn = hull_number_exact(g, ConvexityKind::Cycle, budget)?.value;
    if hn < 2 {
        return Ok(None);
    }
    let mg = MaskGraph::new(g)?;
    let ctl = Control::new(&budget);
    let mut found = None;
    let outcome = minimum_hull_sets(g, ConvexityKind::Cycle, hn, &ctl, |s| {
        let members: Vec<usize> = bits(s).collect();
        let low = 1u64 << members[0];
        let rest = &members[1..];
        // part1 = least member plus any proper subset of the rest
        for pick in 0u64..(1 << rest.len()) - 1 {
            let p1 = low | super::expand(pick, rest);
            let p2 = s & !p1;
            let meet = mg.closure(p1, ConvexityKind::Cycle) & mg.closure(p2, ConvexityKind::Cycle);
            if meet != 0 {
                found = Some((s, p1));
                return false;
            }
        }
        true
    });
    if outcome.is_err() {
        return Err(Error::BudgetExceeded {
            what: "partition condition search".into(),
            lower: 0,
            upper: 1,
        });
    }
    let Some((s, p1)) = found else {
        return Ok(None);
    };
    let n = g.order();
    witness_for_split(g, &VertexSet::from_mask(n, s), &VertexSet::from_mask(n, p1))
}

/// Whether some minimum cycle hull set splits into two nonempty parts with
/// intersecting hulls.
pub fn partition_condition(g: &Graph, budget: SearchBudget) -> Result<bool> {
    Ok(partition_witness(g, budget)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    /// Every subset, every split: the definition spelled out.
    fn brute_force(g: &Graph) -> bool {
        let n = g.order();
        let cc = ConvexityKind::Cycle;
        let hulls: Vec<u64> = (0u64..1 << n)
            .filter(|&m| crate::convexity::is_hull_set(g, &VertexSet::from_mask(n, m), cc).unwrap())
            .collect();
        let hn = hulls.iter().map(|m| m.count_ones()).min().unwrap();
        hulls.iter().filter(|m| m.count_ones() == hn).any(|&s| {
            let mut sub = (s - 1) & s;
            while sub != 0 {
                let a = VertexSet::from_mask(n, sub);
                let b = VertexSet::from_mask(n, s & !sub);
                if !split_hulls_meet(g, &a, &b).unwrap().is_empty() {
                    return true;
                }
                sub = (sub - 1) & s;
            }
            false
        })
    }

    #[test]
    fn c4_and_trees() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        assert_eq!(partition_condition(&c4, SearchBudget::default()).unwrap(), brute_force(&c4));
        for seed in 0..5 {
            let t = generate(FamilySpec::RandomTree { order: 6, seed }).unwrap();
            assert!(!partition_condition(&t, SearchBudget::default()).unwrap());
        }
        assert!(!partition_condition(&Graph::empty(1), SearchBudget::default()).unwrap());
    }

    #[test]
    fn agrees_with_definition_on_small_connected_graphs() {
        for n in 2..=6 {
            for g in crate::catalog::connected_graphs(n) {
                let fast = partition_witness(&g, SearchBudget::default()).unwrap();
                assert_eq!(fast.is_some(), brute_force(&g), "{g:?}");
                if let Some(w) = fast {
                    assert!(!w.meet.is_empty());
                    assert!(w.block.contains(w.meet.first().unwrap()));
                    assert_eq!(w.part1.union(&w.part2), w.hull_set);
                }
            }
        }
    }
}
