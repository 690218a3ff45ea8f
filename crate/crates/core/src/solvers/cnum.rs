use super::{find_first_subset, Control, ConvexityNumberResult, Method, SearchBudget};
use crate::convexity::{ConvexityKind, MaskGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest proper convex set, searched from size `n - 1` downward.
///
/// On a disconnected graph the best proper convex set keeps every component
/// but one whole, so each component is solved on its own and the best
/// combination is returned.
pub fn convexity_number_exact(
    g: &Graph,
    kind: ConvexityKind,
    budget: SearchBudget,
) -> Result<ConvexityNumberResult> {
    budget.validate("convexity number", g.order())?;
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("the empty graph has no proper subset".into()));
    }
    let ctl = Control::new(&budget);
    let mut best: Option<VertexSet> = None;
    for comp in g.components() {
        let (sub, ids) = g.induced_subgraph(&comp);
        let inner = solve_connected(&sub, kind, &ctl).map_err(|lower| Error::BudgetExceeded {
            what: "convexity number search".into(),
            lower: n - comp.len() + lower,
            upper: n - 1,
        })?;
        let mut candidate = comp.complement();
        for b in crate::convexity::mask::bits(inner) {
            candidate.insert(ids[b]);
        }
        let better = match &best {
            None => true,
            Some(b) => candidate.len() > b.len() || (candidate.len() == b.len() && candidate < *b),
        };
        if better {
            best = Some(candidate);
        }
    }
    let witness = best.expect("a nonempty graph has a component");
    Ok(ConvexityNumberResult {
        value: witness.len(),
        witness,
        method: Method::Exact,
    })
}

/// Least maximum proper convex set of a connected graph, or the best lower
/// bound on its size known when the budget ran out.
fn solve_connected(g: &Graph, kind: ConvexityKind, ctl: &Control) -> std::result::Result<u64, usize> {
    let n = g.order();
    if n == 1 {
        return Ok(0);
    }
    // Removing a vertex no convex superset can regenerate leaves a convex set.
    if kind == ConvexityKind::Cycle {
        if let Some(v) = (0..n).rev().find(|&v| !g.lies_on_cycle(v)) {
            let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            return Ok(all & !(1 << v));
        }
    }
    let mg = MaskGraph::new(g).map_err(|_| 0usize)?;
    let positions: Vec<usize> = (0..n).collect();
    for r in (0..n).rev() {
        match find_first_subset(&positions, r, 0, ctl, |s| mg.is_convex(s, kind).then_some(())) {
            Ok(Some((mask, ()))) => return Ok(mask),
            Ok(None) => {}
            Err(()) => return Err(0),
        }
    }
    unreachable!("the empty set is convex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_convex;
    use crate::graph::{generate, FamilySpec};

    fn cnum(g: &Graph, kind: ConvexityKind) -> ConvexityNumberResult {
        convexity_number_exact(g, kind, SearchBudget::default()).unwrap()
    }

    fn brute_force(g: &Graph, kind: ConvexityKind) -> usize {
        let n = g.order();
        (0u64..(1 << n) - 1)
            .filter(|&m| is_convex(g, &VertexSet::from_mask(n, m), kind).unwrap())
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        let cc = ConvexityKind::Cycle;
        assert_eq!(cnum(&generate(FamilySpec::Cycle(5)).unwrap(), cc).value, 3);
        assert_eq!(cnum(&generate(FamilySpec::Complete(4)).unwrap(), cc).value, 1);
        let tree = generate(FamilySpec::RandomTree { order: 6, seed: 7 }).unwrap();
        assert_eq!(cnum(&tree, cc).value, 5);
        assert_eq!(cnum(&Graph::empty(1), cc).value, 0);
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for n in 1..=6 {
            for g in crate::catalog::all_graphs(n) {
                for kind in [ConvexityKind::Cycle, ConvexityKind::P3] {
                    let r = cnum(&g, kind);
                    assert_eq!(r.value, brute_force(&g, kind), "{g:?} {kind}");
                    assert!(is_convex(&g, &r.witness, kind).unwrap());
                    assert!(!r.witness.is_full());
                }
            }
        }
    }

    #[test]
    fn witness_is_least() {
        // in C5 the least 3-set that is convex is three consecutive vertices {0,1,2}
        let r = cnum(&generate(FamilySpec::Cycle(5)).unwrap(), ConvexityKind::Cycle);
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2]);
        let r = cnum(&generate(FamilySpec::Path(4)).unwrap(), ConvexityKind::Cycle);
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2]);
    }
}
