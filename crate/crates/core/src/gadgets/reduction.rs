//! Reduction instances: P3 hull number on bipartite graphs to the cycle hull
//! number, and the Cartesian-product construction `G' □ K2`.

use serde::{Deserialize, Serialize};

use super::hw::{build_hw, fuv_into, hull_set_hw, hw_completion_set, hw_vertex, HW_NAMES, HW_ORDER};
use crate::convexity::{is_hull_set, ConvexityKind};
use crate::error::{Error, Result};
use crate::format::to_edge_list;
use crate::graph::{generate, Bipartiteness, FamilySpec, Graph, GraphBuilder};
use crate::product::{product, ProductGraph, ProductKind};
use crate::vertex_set::VertexSet;

/// Where an output vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Base,
    Gadget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub origin: Origin,
    pub label: String,
}

/// Which construction produced an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Non-edge gadgets glued onto a bipartite base graph.
    P3ToCycle,
    /// Base plus two identified `H(w)` copies, multiplied by `K2`.
    CartesianK2,
    /// Base plus a bowtie, multiplied by `K2`; small enough for exact checks.
    CartesianK2Mini,
}

/// Ids of one non-edge gadget inside the output graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetIds {
    pub pair: (usize, usize),
    pub u_prime: usize,
    pub v_prime: usize,
    /// Offsets of the five `H(w)` copies.
    pub copies: [usize; 5],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub construction: Construction,
    /// Base vertices keep their ids `0..base_order` in the output.
    pub base_order: usize,
    pub output: Graph,
    pub k: usize,
    pub k_prime: usize,
    /// Non-edge pairs (empty for the Cartesian constructions).
    pub pairs: Vec<(usize, usize)>,
    pub gadgets: Vec<GadgetIds>,
    pub provenance: Vec<Provenance>,
    /// `output □ K2` for the Cartesian constructions.
    pub product: Option<ProductGraph>,
    /// Cut vertex joining the base to the attached gadget (Cartesian only).
    pub cut_vertex: Option<usize>,
    /// Gadget halves hanging off the cut vertex (Cartesian only).
    pub halves: Vec<VertexSet>,
}

/// The JSON form written by the command line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionEnvelope {
    pub construction: Construction,
    pub edge_list: String,
    pub labels: Vec<String>,
    pub k_prime: usize,
    #[serde(rename = "L")]
    pub l: Vec<(usize, usize)>,
    pub provenance: Vec<Provenance>,
}

impl ReductionInstance {
    /// The graph whose hull number `k_prime` bounds: the product when there
    /// is one, the output graph otherwise.
    pub fn target(&self) -> &Graph {
        self.product.as_ref().map_or(&self.output, |p| &p.graph)
    }

    pub fn envelope(&self) -> ReductionEnvelope {
        let target = self.target();
        let provenance = match &self.product {
            None => self.provenance.clone(),
            Some(p) => (0..p.order())
                .map(|x| {
                    let (a, b) = p.coords(x);
                    Provenance {
                        origin: self.provenance[a].origin,
                        label: format!("({},{b})", self.provenance[a].label),
                    }
                })
                .collect(),
        };
        ReductionEnvelope {
            construction: self.construction,
            edge_list: to_edge_list(&target.clone().without_labels()),
            labels: (0..target.order()).map(|v| target.label(v)).collect(),
            k_prime: self.k_prime,
            l: self.pairs.clone(),
            provenance,
        }
    }
}

/// Non-adjacent pairs with a common neighbor, as `(min, max)` in
/// lexicographic order.
pub fn nonedge_set(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) && g.neighbors(u).iter().any(|x| g.neighbors(v).binary_search(x).is_ok()) {
                out.push((u, v));
            }
        }
    }
    out
}

fn base_builder(g: &Graph) -> (GraphBuilder, Vec<Provenance>) {
    let mut b = GraphBuilder::new(0);
    let mut provenance = Vec::new();
    b.append(g, |v| g.label(v));
    for v in 0..g.order() {
        provenance.push(Provenance {
            origin: Origin::Base,
            label: g.label(v),
        });
    }
    (b, provenance)
}

/// Marks every vertex past the base as gadget-made.
fn extend_provenance(provenance: &mut Vec<Provenance>, output: &Graph) {
    for v in provenance.len()..output.order() {
        provenance.push(Provenance {
            origin: Origin::Gadget,
            label: output.label(v),
        });
    }
}

/// Glues a non-edge gadget `F^uv` onto the bipartite graph `g` for every
/// pair in [`nonedge_set`]; the gadget's `u` and `v` are the base vertices.
/// The budget becomes `k + 45 |L|`.
pub fn reduce_p3_to_cc(g: &Graph, k: usize) -> Result<ReductionInstance> {
    if let Bipartiteness::OddCycle(witness) = g.bipartition() {
        return Err(Error::NotBipartite { witness });
    }
    let pairs = nonedge_set(g);
    let (mut b, mut provenance) = base_builder(g);
    let mut gadgets = Vec::with_capacity(pairs.len());
    for &(u, v) in &pairs {
        let f = fuv_into(&mut b, u, v, &format!("{{({u},{v})}}"));
        gadgets.push(GadgetIds {
            pair: (u, v),
            u_prime: f.u_prime,
            v_prime: f.v_prime,
            copies: f.copies,
        });
    }
    let output = b.build();
    extend_provenance(&mut provenance, &output);
    Ok(ReductionInstance {
        construction: Construction::P3ToCycle,
        base_order: g.order(),
        k,
        k_prime: k + 45 * pairs.len(),
        pairs,
        gadgets,
        provenance,
        output,
        product: None,
        cut_vertex: None,
        halves: Vec::new(),
    })
}

/// `S ∪ ⋃ S(w_i^{uv})`: a P3 hull set of the base plus the nine seeds of
/// every `H(w)` copy, verified to be a cycle hull set of the output.
pub fn lift_hull_set(inst: &ReductionInstance, s_p3: &VertexSet) -> Result<VertexSet> {
    if inst.construction != Construction::P3ToCycle {
        return Err(Error::Precondition("lifting needs a P3-to-cycle instance".into()));
    }
    let base = base_graph(inst);
    if !is_hull_set(&base, s_p3, ConvexityKind::P3)? {
        return Err(Error::NotHullSet(format!("{s_p3} is not a P3 hull set of the base graph")));
    }
    let seeds = hull_set_hw();
    let mut out = VertexSet::from_vertices(inst.output.order(), s_p3.iter())?;
    for gadget in &inst.gadgets {
        for offset in gadget.copies {
            for x in &seeds {
                out.insert(offset + x);
            }
        }
    }
    if !is_hull_set(&inst.output, &out, ConvexityKind::Cycle)? {
        return Err(Error::Counterexample(format!(
            "lifted set of size {} does not close the reduction output",
            out.len()
        )));
    }
    Ok(out)
}

/// Maps a cycle hull set of the output back to the base: primed gadget
/// vertices become their base twins and other gadget vertices are dropped.
/// Whether the result is a P3 hull set is left to the caller.
pub fn project_back(inst: &ReductionInstance, s_cc: &VertexSet) -> Result<VertexSet> {
    if inst.construction != Construction::P3ToCycle {
        return Err(Error::Precondition("projection needs a P3-to-cycle instance".into()));
    }
    if !is_hull_set(&inst.output, s_cc, ConvexityKind::Cycle)? {
        return Err(Error::NotHullSet("input is not a cycle hull set of the output".into()));
    }
    let mut out = VertexSet::empty(inst.base_order);
    for x in s_cc.iter().filter(|&x| x < inst.base_order) {
        out.insert(x);
    }
    for gadget in &inst.gadgets {
        if s_cc.contains(gadget.u_prime) {
            out.insert(gadget.pair.0);
        }
        if s_cc.contains(gadget.v_prime) {
            out.insert(gadget.pair.1);
        }
    }
    Ok(out)
}

/// The base graph as embedded in the output.
pub fn base_graph(inst: &ReductionInstance) -> Graph {
    let keep = VertexSet::from_vertices(inst.output.order(), 0..inst.base_order).expect("ids in range");
    inst.output.induced_subgraph(&keep).0
}

/// Two `H(w)` copies sharing their `y0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentifiedPair {
    pub graph: Graph,
    /// The shared vertex `v`.
    pub cut_vertex: usize,
    /// Vertices of each copy, both containing `v`.
    pub halves: [VertexSet; 2],
    /// The seed sets `S(w1)` and `S(w2)`.
    pub seeds: [VertexSet; 2],
}

/// Two copies of `H(w)` with `y0(w1)` and `y0(w2)` identified as `v`.
/// `v` has id 0; the other vertices of copy `i` follow in `H(w)` order.
pub fn build_identified_hh() -> IdentifiedPair {
    let hw = build_hw().graph;
    let y0 = hw_vertex("y0");
    let n = 2 * HW_ORDER - 1;
    let mut b = GraphBuilder::new(0);
    let v = b.add_vertex("v");
    let mut maps = [[0usize; HW_ORDER]; 2];
    for (i, map) in maps.iter_mut().enumerate() {
        for x in 0..HW_ORDER {
            map[x] = if x == y0 {
                v
            } else {
                b.add_vertex(format!("w{}:{}", i + 1, HW_NAMES[x]))
            };
        }
    }
    for map in &maps {
        for (x, y) in hw.edges() {
            b.add_edge(map[x], map[y]).expect("copies only share v");
        }
    }
    let seeds = hull_set_hw();
    let halves = maps.map(|map| VertexSet::from_vertices(n, map).expect("ids in range"));
    let seeds = maps.map(|map| VertexSet::from_vertices(n, seeds.iter().map(|x| map[x])).expect("ids in range"));
    IdentifiedPair {
        graph: b.build(),
        cut_vertex: v,
        halves,
        seeds,
    }
}

/// A bowtie: two triangles sharing vertex 0. Each triangle needs two seeds
/// and the shared vertex never belongs to a minimum hull set.
fn bowtie_pair() -> IdentifiedPair {
    let g = generate(FamilySpec::Complete(3))
        .expect("valid family")
        .disjoint_union(&generate(FamilySpec::Complete(3)).expect("valid family"));
    // merge vertex 3 into 0
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(a, c)| {
            let f = |x: usize| match x {
                3 => 0,
                x if x > 3 => x - 1,
                x => x,
            };
            (f(a), f(c))
        })
        .collect();
    let labels = ["v", "t1:a", "t1:b", "t2:a", "t2:b"].map(String::from).to_vec();
    let graph = Graph::from_edges(5, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("bowtie is simple");
    let set = |vs: &[usize]| VertexSet::from_vertices(5, vs.iter().copied()).expect("ids in range");
    IdentifiedPair {
        graph,
        cut_vertex: 0,
        halves: [set(&[0, 1, 2]), set(&[0, 3, 4])],
        seeds: [set(&[1, 2]), set(&[3, 4])],
    }
}

fn attach(g: &Graph, u: usize, k: usize, pair: IdentifiedPair, construction: Construction, extra: usize) -> Result<ReductionInstance> {
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.order(),
        });
    }
    let (mut b, mut provenance) = base_builder(g);
    let offset = b.append(&pair.graph, |x| pair.graph.label(x));
    let cut = offset + pair.cut_vertex;
    b.add_edge(u, cut)?;
    let output = b.build();
    extend_provenance(&mut provenance, &output);
    let n = output.order();
    let shift = |s: &VertexSet| VertexSet::from_vertices(n, s.iter().map(|x| x + offset)).expect("ids in range");
    let halves = vec![shift(&pair.halves[0]), shift(&pair.halves[1])];
    let k2 = generate(FamilySpec::Complete(2))?;
    let prod = product(&output, &k2, ProductKind::Cartesian)?;
    if output.is_bipartite() && !prod.graph.is_bipartite() {
        return Err(Error::Counterexample("product of bipartite graphs is not bipartite".into()));
    }
    Ok(ReductionInstance {
        construction,
        base_order: g.order(),
        output,
        k,
        k_prime: k + extra,
        pairs: Vec::new(),
        gadgets: Vec::new(),
        provenance,
        product: Some(prod),
        cut_vertex: Some(cut),
        halves,
    })
}

/// `G' = G ⊔ HH` plus the edge `u v`, recorded together with `G' □ K2`;
/// the budget becomes `k + 18`.
pub fn build_cartesian_hardness(g: &Graph, u: usize, k: usize) -> Result<ReductionInstance> {
    attach(g, u, k, build_identified_hh(), Construction::CartesianK2, 18)
}

/// The same construction with a bowtie in place of `HH`; the budget becomes
/// `k + 4`. Small bases keep `G' □ K2` within exact reach.
pub fn build_cartesian_mini(g: &Graph, u: usize, k: usize) -> Result<ReductionInstance> {
    attach(g, u, k, bowtie_pair(), Construction::CartesianK2Mini, 4)
}

/// The seed sets of the attached gadget halves inside `G'`.
pub fn attached_seeds(inst: &ReductionInstance) -> Result<[VertexSet; 2]> {
    let pair = match inst.construction {
        Construction::CartesianK2 => build_identified_hh(),
        Construction::CartesianK2Mini => bowtie_pair(),
        Construction::P3ToCycle => {
            return Err(Error::Precondition("no attached pair in a P3-to-cycle instance".into()))
        }
    };
    let offset = inst.base_order;
    let n = inst.output.order();
    Ok(pair
        .seeds
        .map(|s| VertexSet::from_vertices(n, s.iter().map(|x| x + offset)).expect("ids in range")))
}

/// `S_G ∪ S(w1) ∪ S(w2)` for a hull set `S_G` of the base, verified to be a
/// cycle hull set of `G'`.
pub fn cartesian_certificate(inst: &ReductionInstance, s_base: &VertexSet) -> Result<VertexSet> {
    let [a, b] = attached_seeds(inst)?;
    let mut s = VertexSet::from_vertices(inst.output.order(), s_base.iter())?;
    s.union_with(&a);
    s.union_with(&b);
    if !is_hull_set(&inst.output, &s, ConvexityKind::Cycle)? {
        return Err(Error::Counterexample("certificate does not close G'".into()));
    }
    Ok(s)
}

/// `S_G ∪ S(w1) ∪ T(w2)` with `T` the completion set of [`hw_completion_set`]:
/// the first half generates `v`, after which eight seeds finish the second
/// half. Verified to be a cycle hull set of `G'`; one vertex smaller than
/// [`cartesian_certificate`].
pub fn compact_cartesian_certificate(inst: &ReductionInstance, s_base: &VertexSet) -> Result<VertexSet> {
    if inst.construction != Construction::CartesianK2 {
        return Err(Error::Precondition("compact certificate needs the identified-pair construction".into()));
    }
    let [a, _] = attached_seeds(inst)?;
    let n = inst.output.order();
    let half = &inst.halves[1];
    // v comes first, then the copy in H(w) order, so position x is vertex x
    let ids: Vec<usize> = half.iter().collect();
    let mut s = VertexSet::from_vertices(n, s_base.iter())?;
    s.union_with(&a);
    for x in &hw_completion_set() {
        s.insert(ids[x]);
    }
    if !is_hull_set(&inst.output, &s, ConvexityKind::Cycle)? {
        return Err(Error::Counterexample("compact certificate does not close G'".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::closure;
    use crate::graph::FamilySpec;

    fn fam(spec: FamilySpec) -> Graph {
        generate(spec).unwrap()
    }

    #[test]
    fn nonedge_examples() {
        assert_eq!(nonedge_set(&fam(FamilySpec::Path(3))), vec![(0, 2)]);
        assert!(nonedge_set(&fam(FamilySpec::Complete(3))).is_empty());
        assert_eq!(nonedge_set(&fam(FamilySpec::Cycle(4))), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn p3_reduction() {
        let p3 = fam(FamilySpec::Path(3));
        let inst = reduce_p3_to_cc(&p3, 2).unwrap();
        assert_eq!(inst.output.order(), 75);
        assert_eq!(inst.k_prime, 47);
        assert!(inst.output.is_bipartite());
        assert_eq!(inst.provenance.len(), 75);
        let g = &inst.gadgets[0];
        assert_eq!(inst.output.label(g.copies[2] + hw_vertex("y0")), "w3^{(0,2)}:y0");
        assert_eq!(inst.output.label(g.u_prime), "u'^{(0,2)}");
        // the quoted 6-cycle through the base middle vertex
        let y03 = g.copies[2] + hw_vertex("y0");
        for (a, c) in [(0, g.u_prime), (g.u_prime, y03), (y03, g.v_prime), (g.v_prime, 2), (2, 1), (1, 0)] {
            assert!(inst.output.has_edge(a, c));
        }

        let s = VertexSet::from_vertices(3, [0, 2]).unwrap();
        let lifted = lift_hull_set(&inst, &s).unwrap();
        assert_eq!(lifted.len(), 47);
        assert_eq!(project_back(&inst, &lifted).unwrap(), s);

        let mut primed = lifted.clone();
        primed.remove(0);
        primed.insert(g.u_prime);
        assert!(closure(&inst.output, &primed, ConvexityKind::Cycle).unwrap().closed.is_full());
        assert_eq!(project_back(&inst, &primed).unwrap(), s);

        let bad = VertexSet::from_vertices(3, [0]).unwrap();
        assert!(matches!(lift_hull_set(&inst, &bad), Err(Error::NotHullSet(_))));
    }

    #[test]
    fn c4_and_k3_reductions() {
        let c4 = fam(FamilySpec::Cycle(4));
        let inst = reduce_p3_to_cc(&c4, 2).unwrap();
        let s = VertexSet::from_vertices(4, [0, 2]).unwrap();
        assert_eq!(lift_hull_set(&inst, &s).unwrap().len(), 92);
        let k3 = fam(FamilySpec::Complete(3));
        assert!(matches!(reduce_p3_to_cc(&k3, 2), Err(Error::NotBipartite { .. })));
        let k2 = fam(FamilySpec::Path(2));
        let inst = reduce_p3_to_cc(&k2, 2).unwrap();
        assert_eq!((inst.output.order(), inst.k_prime), (2, 2));
    }

    #[test]
    fn identified_pair() {
        let hh = build_identified_hh();
        assert_eq!(hh.graph.order(), 27);
        assert!(hh.graph.is_cut_vertex(hh.cut_vertex));
        let seeds = hh.seeds[0].union(&hh.seeds[1]);
        assert_eq!(seeds.len(), 18);
        assert!(is_hull_set(&hh.graph, &seeds, ConvexityKind::Cycle).unwrap());
        assert!(hh.halves[0].intersection(&hh.halves[1]).to_vec() == vec![hh.cut_vertex]);
    }

    #[test]
    fn cartesian_hardness() {
        let g = fam(FamilySpec::Cycle(4));
        let inst = build_cartesian_hardness(&g, 0, 3).unwrap();
        assert_eq!(inst.output.order(), 31);
        assert_eq!(inst.product.as_ref().unwrap().order(), 62);
        assert_eq!(inst.k_prime, 21);
        assert!(inst.target().is_bipartite());
        let s = VertexSet::from_vertices(4, [0, 1, 2]).unwrap();
        let cert = cartesian_certificate(&inst, &s).unwrap();
        assert_eq!(cert.len(), 21);
        let compact = compact_cartesian_certificate(&inst, &s).unwrap();
        assert_eq!(compact.len(), 20);
        assert!(compact.contains(0) && !compact.contains(inst.cut_vertex.unwrap()));
        let v = inst.cut_vertex.unwrap();
        assert!(inst.output.is_cut_vertex(v));
        assert!(matches!(build_cartesian_hardness(&g, 4, 3), Err(Error::VertexOutOfRange { .. })));
        let mini = build_cartesian_mini(&g, 0, 3).unwrap();
        assert_eq!((mini.output.order(), mini.k_prime), (9, 7));
    }

    #[test]
    fn envelope_round_trips() {
        let inst = reduce_p3_to_cc(&fam(FamilySpec::Path(3)), 2).unwrap();
        let env = inst.envelope();
        let json = serde_json::to_string(&env).unwrap();
        assert!(json.contains("\"L\":[[0,2]]"));
        let back: ReductionEnvelope = serde_json::from_str(&json).unwrap();
        assert_eq!(back, env);
        let g = crate::format::parse_edge_list(&env.edge_list).unwrap();
        assert_eq!(g, inst.output.clone().without_labels());
        let cart = build_cartesian_hardness(&fam(FamilySpec::Path(2)), 1, 2).unwrap();
        assert_eq!(cart.envelope().labels.len(), 58);
    }
}
