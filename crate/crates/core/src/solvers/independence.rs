use super::{Control, IndependenceResult, SearchBudget, TICK};
use crate::convexity::mask::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct Search<'a> {
    adj: &'a [u64],
    ctl: &'a Control,
    nodes: u64,
    stopped: bool,
}

impl Search<'_> {
    /// Greedy clique cover of `cand`; its size bounds any independent set in it.
    fn clique_cover(&self, mut cand: u64) -> usize {
        let mut count = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let mut clique_room = cand & self.adj[v];
            cand &= !(1 << v);
            while clique_room != 0 {
                let u = clique_room.trailing_zeros() as usize;
                cand &= !(1 << u);
                clique_room &= self.adj[u] & !(1 << u);
            }
            count += 1;
        }
        count
    }

    /// Size of a maximum independent set inside `cand`, provided it exceeds
    /// `floor`; otherwise some value `<= floor`.
    fn best(&mut self, cand: u64, floor: usize) -> usize {
        self.nodes += 1;
        if self.nodes == TICK {
            self.nodes = 0;
            if !self.ctl.spend(TICK) {
                self.stopped = true;
            }
        }
        if self.stopped || cand == 0 {
            return 0;
        }
        // isolated vertices are always taken
        let mut isolated = 0u64;
        let mut pick = None;
        let mut pick_degree = 0;
        for v in bits(cand) {
            let d = (self.adj[v] & cand).count_ones();
            if d == 0 {
                isolated |= 1 << v;
            } else if pick.is_none() || d > pick_degree {
                pick = Some(v);
                pick_degree = d;
            }
        }
        let taken = isolated.count_ones() as usize;
        let Some(v) = pick else {
            return taken;
        };
        let rest = cand & !isolated;
        let floor = floor.saturating_sub(taken);
        if self.clique_cover(rest) <= floor {
            return taken;
        }
        let with = 1 + self.best(rest & !self.adj[v] & !(1 << v), floor.saturating_sub(1));
        let floor = floor.max(with);
        let without = self.best(rest & !(1 << v), floor);
        taken + with.max(without)
    }
}

/// Maximum independent set by branch and bound on the highest-degree
/// vertex with a greedy clique-cover bound. The witness is the least
/// maximum independent set in bit-mask order.
pub fn independence_number_exact(g: &Graph, budget: SearchBudget) -> Result<IndependenceResult> {
    budget.validate("independence number", g.order())?;
    let n = g.order();
    let adj = g.adjacency_masks().expect("validated order fits a mask");
    let ctl = Control::new(&budget);
    let mut search = Search {
        adj: &adj,
        ctl: &ctl,
        nodes: 0,
        stopped: false,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let alpha = search.best(all, 0);
    // Settle vertices from the highest down, dropping each one whenever the
    // optimum survives without it.
    let mut chosen = 0u64;
    let mut cand = all;
    for v in (0..n).rev() {
        if cand >> v & 1 == 0 {
            continue;
        }
        let need = alpha - chosen.count_ones() as usize;
        if search.best(cand & !(1 << v), need.saturating_sub(1)) >= need {
            cand &= !(1 << v);
        } else {
            chosen |= 1 << v;
            cand &= !adj[v] & !(1 << v);
        }
    }
    if search.stopped {
        return Err(Error::BudgetExceeded {
            what: "independence number search".into(),
            lower: 0,
            upper: n,
        });
    }
    debug_assert_eq!(chosen.count_ones() as usize, alpha);
    Ok(IndependenceResult {
        value: alpha,
        witness: VertexSet::from_mask(n, chosen),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::product::{product, ProductKind};

    fn alpha(g: &Graph) -> IndependenceResult {
        independence_number_exact(g, SearchBudget::representation_cap()).unwrap()
    }

    /// Least maximum independent set by scanning every subset.
    fn brute_force(g: &Graph) -> (usize, u64) {
        let n = g.order();
        let adj = g.adjacency_masks().unwrap();
        let mut best = (0, 0);
        for m in 0u64..1 << n {
            if bits(m).all(|v| adj[v] & m == 0) && m.count_ones() as usize > best.0 {
                best = (m.count_ones() as usize, m);
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(alpha(&generate(FamilySpec::Cycle(5)).unwrap()).value, 2);
        for n in 1..7 {
            assert_eq!(alpha(&generate(FamilySpec::Complete(n)).unwrap()).value, 1);
        }
        let p3 = generate(FamilySpec::Path(3)).unwrap();
        let strong = product(&p3, &p3, ProductKind::Strong).unwrap();
        assert_eq!(alpha(&strong.graph).value, 4);
        assert_eq!(alpha(&generate(FamilySpec::Grid(5, 5)).unwrap()).value, 13);
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = crate::catalog::rng(5);
        for n in 1..=12 {
            for _ in 0..20 {
                let p = crate::catalog::unit(&mut rng);
                let g = crate::catalog::random_graph(n, p, &mut rng);
                let r = alpha(&g);
                let (value, mask) = brute_force(&g);
                assert_eq!(r.value, value);
                assert_eq!(r.witness.to_mask(), Some(mask), "{g:?}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::empty(40);
        let r = independence_number_exact(&g, SearchBudget::representation_cap());
        assert_eq!(r.unwrap().value, 40);
        let g = crate::catalog::random_graph(60, 0.1, &mut crate::catalog::rng(3));
        let tight = SearchBudget::representation_cap().with_max_subsets(2048);
        assert!(matches!(
            independence_number_exact(&g, tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
