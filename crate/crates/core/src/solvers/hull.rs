use super::{find_first_subset, Control, HullResult, Method, SearchBudget};
use crate::convexity::{ConvexityKind, MaskGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Vertices no hull set can leave out: those never generated by anything.
/// For the cycle convexity these are the vertices on no cycle; for P3 the
/// vertices of degree at most one.
pub(crate) fn forced_vertices(g: &Graph, kind: ConvexityKind) -> VertexSet {
    let mut forced = VertexSet::empty(g.order());
    for v in 0..g.order() {
        let never = match kind {
            ConvexityKind::Cycle => !g.lies_on_cycle(v),
            ConvexityKind::P3 => g.degree(v) < 2,
        };
        if never {
            forced.insert(v);
        }
    }
    forced
}

/// Minimum hull set by iterative deepening over the set size.
///
/// Components are solved independently and their values summed. Within a
/// component the forced vertices are always seeds and only the remaining
/// vertices are enumerated, in increasing mask order.
pub fn hull_number_exact(g: &Graph, kind: ConvexityKind, budget: SearchBudget) -> Result<HullResult> {
    budget.validate("hull number", g.order())?;
    let ctl = Control::new(&budget);
    let mut value = 0;
    let mut witness = VertexSet::empty(g.order());
    let comps = g.components();
    let mut bounds = Vec::with_capacity(comps.len());
    let mut failed = false;
    for comp in &comps {
        let (sub, ids) = g.induced_subgraph(comp);
        match solve_connected(&sub, kind, &ctl) {
            Ok(mask) => {
                let size = mask.count_ones() as usize;
                value += size;
                bounds.push((size, size));
                for b in crate::convexity::mask::bits(mask) {
                    witness.insert(ids[b]);
                }
            }
            Err(lower) => {
                failed = true;
                bounds.push((lower, sub.order()));
            }
        }
    }
    if failed {
        return Err(Error::BudgetExceeded {
            what: "hull number search".into(),
            lower: bounds.iter().map(|b| b.0).sum(),
            upper: bounds.iter().map(|b| b.1).sum(),
        });
    }
    Ok(HullResult {
        value,
        witness,
        method: Method::Exact,
    })
}

/// Least minimum hull set of a connected graph, or the best lower bound
/// proven before the budget ran out.
fn solve_connected(g: &Graph, kind: ConvexityKind, ctl: &Control) -> std::result::Result<u64, usize> {
    let mg = MaskGraph::new(g).map_err(|_| 0usize)?;
    let forced = forced_vertices(g, kind).to_mask().unwrap_or(0);
    let free: Vec<usize> = (0..g.order()).filter(|v| forced >> v & 1 == 0).collect();
    let base = forced.count_ones() as usize;
    for r in 0..=free.len() {
        match find_first_subset(&free, r, forced, ctl, |s| mg.is_hull_set(s, kind).then_some(())) {
            Ok(Some((mask, ()))) => return Ok(mask),
            Ok(None) => {}
            Err(()) => return Err(base + r),
        }
    }
    unreachable!("the full vertex set is a hull set")
}

/// Every minimum hull set of a connected graph with at most 64 vertices, in
/// increasing mask order.
pub(crate) fn minimum_hull_sets(
    g: &Graph,
    kind: ConvexityKind,
    size: usize,
    ctl: &Control,
    mut visit: impl FnMut(u64) -> bool,
) -> std::result::Result<(), ()> {
    let mg = MaskGraph::new(g).map_err(|_| ())?;
    let forced = forced_vertices(g, kind).to_mask().unwrap_or(0);
    let free: Vec<usize> = (0..g.order()).filter(|v| forced >> v & 1 == 0).collect();
    let base = forced.count_ones() as usize;
    if size < base {
        return Ok(());
    }
    let mut stop = false;
    let mut pending = 0u64;
    super::for_each_combination(free.len(), size - base, |c| {
        pending += 1;
        if pending == super::TICK {
            pending = 0;
            if !ctl.spend(super::TICK) {
                stop = true;
                return false;
            }
        }
        let s = forced | super::expand(c, &free);
        if mg.is_hull_set(s, kind) && !visit(s) {
            return false;
        }
        true
    });
    if stop {
        Err(())
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_hull_set;
    use crate::graph::{generate, FamilySpec};
    use crate::product::{product, ProductKind};

    fn hn(g: &Graph, kind: ConvexityKind) -> usize {
        hull_number_exact(g, kind, SearchBudget::representation_cap()).unwrap().value
    }

    /// Smallest hull set size by scanning every subset.
    fn brute_force(g: &Graph, kind: ConvexityKind) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&m| is_hull_set(g, &VertexSet::from_mask(n, m), kind).unwrap())
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        let cc = ConvexityKind::Cycle;
        let tree = generate(FamilySpec::RandomTree { order: 9, seed: 1 }).unwrap();
        assert_eq!(hn(&tree, cc), 9);
        let c5 = generate(FamilySpec::Cycle(5)).unwrap();
        assert_eq!(brute_force(&c5, cc), 4);
        assert_eq!(hn(&c5, cc), 4);
        let p3 = generate(FamilySpec::Path(3)).unwrap();
        let p4 = generate(FamilySpec::Path(4)).unwrap();
        let grid = product(&p3, &p4, ProductKind::Cartesian).unwrap();
        assert_eq!(hn(&grid.graph, cc), 6);
        let k3 = generate(FamilySpec::Complete(3)).unwrap();
        let kk = product(&k3, &k3, ProductKind::Cartesian).unwrap();
        assert_eq!(hn(&kk.graph, cc), 3);
        assert_eq!(hn(&p3, ConvexityKind::P3), 2);
    }

    #[test]
    fn witness_is_least_and_valid() {
        let c5 = generate(FamilySpec::Cycle(5)).unwrap();
        let r = hull_number_exact(&c5, ConvexityKind::Cycle, SearchBudget::default()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2, 3]);
        assert!(is_hull_set(&c5, &r.witness, ConvexityKind::Cycle).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for n in 1..=6 {
            for g in crate::catalog::all_graphs(n) {
                for kind in [ConvexityKind::Cycle, ConvexityKind::P3] {
                    let r = hull_number_exact(&g, kind, SearchBudget::default()).unwrap();
                    assert_eq!(r.value, brute_force(&g, kind), "{g:?} {kind}");
                    assert_eq!(r.witness.len(), r.value);
                    assert!(is_hull_set(&g, &r.witness, kind).unwrap());
                }
            }
        }
    }

    #[test]
    fn disconnected_inputs_sum_components() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let g = c4.disjoint_union(&Graph::empty(1)).disjoint_union(&c4);
        assert_eq!(hn(&g, ConvexityKind::Cycle), 3 + 1 + 3);
    }

    #[test]
    fn budget_errors() {
        let g = generate(FamilySpec::Grid(5, 5)).unwrap();
        assert!(matches!(
            hull_number_exact(&g, ConvexityKind::Cycle, SearchBudget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
        let g = generate(FamilySpec::Grid(4, 5)).unwrap();
        let tight = SearchBudget::default().with_max_subsets(10_000);
        match hull_number_exact(&g, ConvexityKind::Cycle, tight) {
            Err(Error::BudgetExceeded { lower, upper, .. }) => {
                assert!(lower <= 8 && upper >= 8);
            }
            other => panic!("{other:?}"),
        }
    }
}
