use rand_core::RngCore;

use super::{CheckInfo, Counterexample, TheoremCheck};
use crate::catalog::{connected_graphs, random_graph, rng, uniform, unit, MAX_CATALOG_ORDER};
use crate::convexity::{hull, interval, is_convex, is_hull_set, oracle, ConvexityKind, MaskGraph};
use crate::error::{Error, Result};
use crate::gadgets::{
    attached_seeds, build_cartesian_hardness, build_cartesian_mini, build_fuv, build_hw, build_identified_hh,
    cartesian_certificate, compact_cartesian_certificate, hull_set_hw, hw_completion_set, hw_vertex, lift_hull_set,
    project_back, reduce_p3_to_cc, ReductionInstance, HW_CYCLES, HW_ORDER,
};
use crate::graph::{generate, FamilySpec, Graph};
use crate::product::{product, Factor, ProductGraph, ProductKind};
use crate::solvers::{
    cartesian_hull_bounds, cartesian_hull_witness, cartesian_partition_lift, convexity_fastpath,
    convexity_number_exact, hull_fastpath, hull_number_exact, independence_number_exact, partition_condition,
    partition_witness, witness_for_split, HullResult, SearchBudget,
};
use crate::vertex_set::VertexSet;

const CC: ConvexityKind = ConvexityKind::Cycle;
const P3: ConvexityKind = ConvexityKind::P3;

/// `None` passes; `Some` fails with the counterexample.
pub(crate) type Verdict = Result<Option<Counterexample>>;

pub(crate) struct Ctx<'a> {
    check: &'a TheoremCheck,
    info: &'static CheckInfo,
    pub instances: usize,
    pub notes: Vec<String>,
}

impl<'a> Ctx<'a> {
    pub fn new(check: &'a TheoremCheck, info: &'static CheckInfo) -> Self {
        Self {
            check,
            info,
            instances: 0,
            notes: Vec::new(),
        }
    }

    fn cap(&self) -> usize {
        self.check.max_order.unwrap_or(self.info.cap.1)
    }

    /// The cap, or an empty-range error when it is below `least`.
    fn cap_at_least(&self, least: usize) -> Result<usize> {
        let cap = self.cap();
        if cap < least {
            return Err(Error::EmptyInstanceRange(self.info.id.to_string()));
        }
        Ok(cap)
    }

    fn budget(&self) -> SearchBudget {
        self.check.budget
    }

    fn hn(&self, g: &Graph, kind: ConvexityKind) -> Result<HullResult> {
        hull_number_exact(g, kind, self.budget())
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

pub(crate) fn dispatch(ctx: &mut Ctx) -> Verdict {
    match ctx.info.id {
        "strong-hull" => product_hull_is_two(ctx, ProductKind::Strong),
        "lex-hull" => product_hull_is_two(ctx, ProductKind::Lexicographic),
        "tree-cartesian-hull" => tree_cartesian_hull(ctx),
        "cartesian-hull-bounds" => cartesian_hull_bounds_check(ctx),
        "hull-two-factor" => hull_two_factor(ctx),
        "structural-lemmas" => structural_lemmas(ctx),
        "cartesian-cnum" => cartesian_cnum(ctx),
        "strong-lex-cnum" => strong_lex_cnum(ctx),
        "cnum-closed-forms" => cnum_closed_forms(ctx),
        "gadget-hw" => gadget_hw(ctx),
        "p3-reduction-forward" => p3_reduction_forward(ctx),
        "p3-reduction-converse" => p3_reduction_converse(ctx),
        "cartesian-hardness" => cartesian_hardness(ctx),
        "identified-pair-count" => identified_pair_count(ctx),
        "kernel-properties" => kernel_properties(ctx),
        "negative-control" => negative_control(ctx),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

fn fam(spec: FamilySpec) -> Graph {
    generate(spec).expect("valid family")
}

/// `P_n`, and `C_n`, `K_n` from order 3, for `2 <= n <= cap`.
fn named_factors(cap: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=cap {
        out.push(FamilySpec::Path(n));
        if n >= 3 {
            out.push(FamilySpec::Cycle(n));
            out.push(FamilySpec::Complete(n));
        }
    }
    out.into_iter().map(|f| (f.name(), fam(f))).collect()
}

/// Every connected graph of order `2..=cap` up to isomorphism, named
/// `g{order}.{index}`.
fn connected_factors(ctx: &mut Ctx, cap: usize) -> Vec<(String, Graph)> {
    let top = cap.min(MAX_CATALOG_ORDER);
    if top < cap {
        ctx.note(format!("factor catalog stops at order {MAX_CATALOG_ORDER}"));
    }
    (2..=top)
        .flat_map(|n| {
            connected_graphs(n)
                .into_iter()
                .enumerate()
                .map(move |(i, g)| (format!("g{n}.{i}"), g))
        })
        .collect()
}

fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("diamond is simple")
}

fn product_cx(message: String, g: &Graph, h: &Graph, p: &ProductGraph) -> Counterexample {
    Counterexample::new(message).graph("G", g).graph("H", h).graph("product", &p.graph)
}

fn product_hull_is_two(ctx: &mut Ctx, kind: ProductKind) -> Verdict {
    let cap = ctx.cap_at_least(2)?;
    let factors = named_factors(cap);
    for (gn, g) in &factors {
        for (hn, h) in &factors {
            let p = product(g, h, kind)?;
            let exact = ctx.hn(&p.graph, CC)?;
            let fast = hull_fastpath(&p, g, h)?.expect("strong and lexicographic products have a fast path");
            ctx.instances += 1;
            if exact.value != 2 || fast.value != 2 || !is_hull_set(&p.graph, &fast.witness, CC)? {
                let cx = product_cx(
                    format!("hn({}) = {}, expected 2", p.describe(gn, hn), exact.value),
                    g,
                    h,
                    &p,
                )
                .set("exact_witness", &exact.witness)
                .set("fastpath_witness", &fast.witness)
                .value("exact", exact.value);
                return Ok(Some(cx));
            }
        }
    }
    let names: Vec<&str> = factors.iter().map(|(n, _)| n.as_str()).collect();
    ctx.note(format!("all ordered pairs of {}", names.join(", ")));
    Ok(None)
}

fn tree_cartesian_hull(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(4)?;
    let mut pairs = Vec::new();
    for m in 2..=cap - 2 {
        for n in 2..=cap - m {
            pairs.push((FamilySpec::Path(m), FamilySpec::Path(n)));
        }
    }
    let paths = pairs.len();
    let mut r = rng(ctx.check.seed);
    for _ in 0..20 {
        let m = uniform(&mut r, 2, cap - 2);
        let n = uniform(&mut r, 2, cap - m);
        let a = FamilySpec::RandomTree {
            order: m,
            seed: r.next_u64(),
        };
        let b = FamilySpec::RandomTree {
            order: n,
            seed: r.next_u64(),
        };
        pairs.push((a, b));
    }
    for (a, b) in pairs {
        let (g, h) = (fam(a), fam(b));
        let p = product(&g, &h, ProductKind::Cartesian)?;
        let formula = g.order() + h.order() - 1;
        let exact = ctx.hn(&p.graph, CC)?;
        let fast = hull_fastpath(&p, &g, &h)?.expect("trees have a fast path");
        ctx.instances += 1;
        if exact.value != formula || fast.value != formula || fast.witness.len() != formula {
            let cx = product_cx(
                format!("hn({}) = {}, formula gives {formula}", p.describe(&a.name(), &b.name()), exact.value),
                &g,
                &h,
                &p,
            )
            .set("exact_witness", &exact.witness)
            .value("exact", exact.value)
            .value("formula", formula);
            return Ok(Some(cx));
        }
    }
    ctx.note(format!("{paths} grids with m + n <= {cap} and 20 seeded tree pairs"));
    Ok(None)
}

/// Whether the hull of every adjacent pair stays inside one layer.
fn two_subsets_stay_in_layers(p: &ProductGraph) -> Result<Option<VertexSet>> {
    let n = p.order();
    for (a, b) in p.graph.edges() {
        let s = VertexSet::from_vertices(n, [a, b])?;
        let h = hull(&p.graph, &s, CC)?;
        if p.projection(&h, Factor::First).len() > 1 && p.projection(&h, Factor::Second).len() > 1 {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn cartesian_hull_bounds_check(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(2)?;
    let factors = connected_factors(ctx, cap);
    let solved = factors
        .iter()
        .map(|(_, g)| ctx.hn(g, CC))
        .collect::<Result<Vec<_>>>()?;
    for (i, (gn, g)) in factors.iter().enumerate() {
        for (j, (hn, h)) in factors.iter().enumerate() {
            let (a, b) = (&solved[i], &solved[j]);
            let p = product(g, h, ProductKind::Cartesian)?;
            let exact = ctx.hn(&p.graph, CC)?;
            ctx.instances += 1;
            let (lo, hi) = cartesian_hull_bounds(a.value, b.value);
            let name = p.describe(gn, hn);
            if exact.value < lo || exact.value > hi {
                let cx = product_cx(format!("hn({name}) = {} outside [{lo}, {hi}]", exact.value), g, h, &p)
                    .set("exact_witness", &exact.witness)
                    .value("exact", exact.value)
                    .value("hn_G", a.value)
                    .value("hn_H", b.value);
                return Ok(Some(cx));
            }
            match cartesian_hull_witness(g, h, &a.witness, &b.witness) {
                Ok(l) if l.len() == hi => {}
                Ok(l) => {
                    let cx = product_cx(format!("L-shaped set of {name} has {} vertices, not {hi}", l.len()), g, h, &p)
                        .set("l_shape", &l);
                    return Ok(Some(cx));
                }
                Err(Error::Counterexample(msg)) => {
                    let cx = product_cx(msg, g, h, &p)
                        .set("S_G", &a.witness)
                        .set("S_H", &b.witness);
                    return Ok(Some(cx));
                }
                Err(e) => return Err(e),
            }
            if let Some(s) = two_subsets_stay_in_layers(&p)? {
                let cx = product_cx(format!("the hull of an adjacent pair of {name} spans two layers"), g, h, &p)
                    .set("pair", &s);
                return Ok(Some(cx));
            }
        }
    }
    for m in 2..=3 {
        for n in 2..=3 {
            let (g, h) = (fam(FamilySpec::Complete(m)), fam(FamilySpec::Complete(n)));
            let p = product(&g, &h, ProductKind::Cartesian)?;
            let exact = ctx.hn(&p.graph, CC)?;
            ctx.instances += 1;
            if exact.value != 3 {
                let cx = product_cx(format!("hn(K{m} □ K{n}) = {}, expected 3", exact.value), &g, &h, &p)
                    .value("exact", exact.value);
                return Ok(Some(cx));
            }
        }
    }
    ctx.note(format!(
        "{} factor pairs of connected graphs with order 2..={}, plus Km □ Kn for m, n in 2..=3",
        factors.len() * factors.len(),
        cap.min(MAX_CATALOG_ORDER)
    ));
    ctx.note("every adjacent pair of every product has its hull inside one layer");
    Ok(None)
}

fn hull_two_factor(ctx: &mut Ctx) -> Verdict {
    const GRAPH_CAP: usize = 30;
    let cap = ctx.cap_at_least(3)?;
    let top = cap.min(MAX_CATALOG_ORDER);
    let mut graphs: Vec<Graph> = (3..=top)
        .flat_map(connected_graphs)
        .filter(|g| !g.is_tree())
        .collect();
    let total = graphs.len();
    let mut r = rng(ctx.check.seed);
    for i in (1..graphs.len()).rev() {
        graphs.swap(i, uniform(&mut r, 0, i));
    }
    graphs.truncate(GRAPH_CAP);
    let factors = [("K3", fam(FamilySpec::Complete(3))), ("diamond", diamond())];
    let mut with_partition = 0;
    for g in &graphs {
        let a = ctx.hn(g, CC)?;
        let split = partition_witness(g, ctx.budget())?;
        with_partition += usize::from(split.is_some());
        for (hname, h) in &factors {
            let hh = ctx.hn(h, CC)?;
            if hh.value != 2 {
                return Err(Error::Precondition(format!("hn({hname}) = {}, expected 2", hh.value)));
            }
            let p = product(g, h, ProductKind::Cartesian)?;
            let b = ctx.hn(&p.graph, CC)?;
            ctx.instances += 1;
            let fail = |msg: String| {
                product_cx(msg, g, h, &p)
                    .set("exact_witness", &b.witness)
                    .value("hn_G", a.value)
                    .value("hn_product", b.value)
            };
            if b.value != a.value && b.value != a.value + 1 {
                return Ok(Some(fail(format!("hn(G □ {hname}) = {} with hn(G) = {}", b.value, a.value))));
            }
            if (b.value == a.value) != split.is_some() {
                return Ok(Some(fail(format!(
                    "hn(G □ {hname}) = {} with hn(G) = {} but the partition condition is {}",
                    b.value,
                    a.value,
                    split.is_some()
                ))));
            }
            if let Some(w) = &split {
                let hs: Vec<usize> = hh.witness.iter().collect();
                let lift = cartesian_partition_lift(&p, w, hs[0], hs[1])?;
                if lift.len() != a.value || !is_hull_set(&p.graph, &lift, CC)? {
                    return Ok(Some(fail("the partition lift is not a hull set of G □ H".into()).set("lift", &lift)));
                }
            }
        }
    }
    ctx.note(format!(
        "{} of {total} connected graphs with a cycle and order 3..={top}, picked by seed; H in {{K3, diamond}}",
        graphs.len()
    ));
    ctx.note(format!(
        "{with_partition} of the sampled graphs satisfy the partition condition"
    ));
    Ok(None)
}

fn structural_lemmas(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(4)?;
    let factors = connected_factors(ctx, cap / 2);
    let mut convex_sets = 0usize;
    for (gn, g) in &factors {
        for (hn, h) in &factors {
            if g.order() * h.order() > cap {
                continue;
            }
            let p = product(g, h, ProductKind::Cartesian)?;
            let name = p.describe(gn, hn);
            let mg = MaskGraph::new(&p.graph)?;
            let lines: Vec<u64> = (0..p.n)
                .map(|y| p.layer(Factor::Second, y))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .map(|s| s.to_mask().expect("small product"))
                .collect();
            let columns: Vec<u64> = (0..p.m)
                .map(|x| p.layer(Factor::First, x))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .map(|s| s.to_mask().expect("small product"))
                .collect();
            ctx.instances += 1;
            for s in 0..=mg.all() {
                if !mg.is_convex(s, CC) {
                    continue;
                }
                convex_sets += 1;
                for c in mg.components(s) {
                    let comp = VertexSet::from_mask(p.order(), c);
                    if !p.is_subproduct(&comp) {
                        let cx = product_cx(format!("a component of a convex set of {name} is not a subproduct"), g, h, &p)
                            .set("convex_set", &VertexSet::from_mask(p.order(), s))
                            .set("component", &comp);
                        return Ok(Some(cx));
                    }
                }
                let has_line = lines.iter().any(|&l| l & !s == 0);
                let has_column = columns.iter().any(|&c| c & !s == 0);
                if has_line && has_column && s != mg.all() {
                    let cx = product_cx(format!("a proper convex set of {name} holds a full line and column"), g, h, &p)
                        .set("convex_set", &VertexSet::from_mask(p.order(), s));
                    return Ok(Some(cx));
                }
            }
            let convex_in = |f: &Graph| -> Result<Vec<VertexSet>> {
                let m = MaskGraph::new(f)?;
                Ok((0..=m.all())
                    .filter(|&s| m.is_convex(s, CC))
                    .map(|s| VertexSet::from_mask(f.order(), s))
                    .collect())
            };
            for s in &convex_in(g)? {
                for t in &convex_in(h)? {
                    let st = p.cross(s, t);
                    if !is_convex(&p.graph, &st, CC)? {
                        let cx = product_cx(format!("S x T is not convex in {name}"), g, h, &p)
                            .set("S", s)
                            .set("T", t);
                        return Ok(Some(cx));
                    }
                }
            }
        }
    }
    // projections of exact witnesses of products with factor order <= 4
    let small = connected_factors(ctx, cap.min(4));
    let mut witnesses = 0;
    for (_, g) in &small {
        for (_, h) in &small {
            let p = product(g, h, ProductKind::Cartesian)?;
            let w = ctx.hn(&p.graph, CC)?.witness;
            witnesses += 1;
            let pg = p.projection(&w, Factor::First);
            let ph = p.projection(&w, Factor::Second);
            if !is_hull_set(g, &pg, CC)? || !is_hull_set(h, &ph, CC)? {
                let cx = product_cx("a projection of a hull set is not a hull set".into(), g, h, &p)
                    .set("hull_set", &w)
                    .set("projection_G", &pg)
                    .set("projection_H", &ph);
                return Ok(Some(cx));
            }
        }
    }
    ctx.note(format!(
        "{} products with m n <= {cap}, {convex_sets} convex sets; projections of {witnesses} minimum hull sets",
        ctx.instances
    ));
    Ok(None)
}

fn cartesian_cnum(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(2)?;
    let factors = connected_factors(ctx, cap);
    let budget = ctx.budget();
    let c: Vec<usize> = factors
        .iter()
        .map(|(_, g)| convexity_number_exact(g, CC, budget).map(|r| r.value))
        .collect::<Result<_>>()?;
    for (i, (gn, g)) in factors.iter().enumerate() {
        for (j, (hn, h)) in factors.iter().enumerate() {
            let p = product(g, h, ProductKind::Cartesian)?;
            let formula = (h.order() * c[i]).max(g.order() * c[j]);
            let exact = convexity_number_exact(&p.graph, CC, budget)?;
            let fast = convexity_fastpath(&p, g, h, budget)?;
            ctx.instances += 1;
            let witness_ok = fast.witness.len() == fast.value
                && !fast.witness.is_full()
                && is_convex(&p.graph, &fast.witness, CC)?;
            if exact.value != formula || fast.value != formula || !witness_ok {
                let cx = product_cx(
                    format!(
                        "C({}) = {}, formula gives {formula}, fast path {}",
                        p.describe(gn, hn),
                        exact.value,
                        fast.value
                    ),
                    g,
                    h,
                    &p,
                )
                .set("exact_witness", &exact.witness)
                .set("fastpath_witness", &fast.witness)
                .value("exact", exact.value)
                .value("formula", formula);
                return Ok(Some(cx));
            }
        }
    }
    ctx.note(format!("all ordered pairs of connected graphs with order 2..={}", cap.min(MAX_CATALOG_ORDER)));
    Ok(None)
}

fn strong_lex_cnum(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(2)?;
    let factors = connected_factors(ctx, cap);
    let budget = ctx.budget();
    for kind in [ProductKind::Strong, ProductKind::Lexicographic] {
        for (gn, g) in &factors {
            for (hn, h) in &factors {
                let p = product(g, h, kind)?;
                let exact = convexity_number_exact(&p.graph, CC, budget)?;
                let alpha = independence_number_exact(&p.graph, budget)?;
                let fast = convexity_fastpath(&p, g, h, budget)?;
                ctx.instances += 1;
                if exact.value != alpha.value || fast.value != alpha.value || !is_convex(&p.graph, &fast.witness, CC)? {
                    let cx = product_cx(
                        format!("C({}) = {} but alpha = {}", p.describe(gn, hn), exact.value, alpha.value),
                        g,
                        h,
                        &p,
                    )
                    .set("exact_witness", &exact.witness)
                    .set("independent_set", &alpha.witness)
                    .value("exact", exact.value)
                    .value("alpha", alpha.value);
                    return Ok(Some(cx));
                }
            }
        }
    }
    ctx.note(format!(
        "strong and lexicographic products of all connected pairs with order 2..={}",
        cap.min(MAX_CATALOG_ORDER)
    ));
    Ok(None)
}

/// One closed-form instance: name, factors, product kinds, value.
type ClosedForm = (String, FamilySpec, FamilySpec, &'static [ProductKind], usize);

fn closed_forms(cap: usize) -> Vec<ClosedForm> {
    use FamilySpec::{Complete as K, Cycle as C, Path as P, Star as S};
    use ProductKind::{Cartesian, Lexicographic, Strong};
    const CART: &[ProductKind] = &[Cartesian];
    const BOTH: &[ProductKind] = &[Strong, Lexicographic];
    const LEX: &[ProductKind] = &[Lexicographic];
    const STRONG: &[ProductKind] = &[Strong];
    let half = |x: usize| x / 2;
    let up = |x: usize| x.div_ceil(2);
    let mut out: Vec<ClosedForm> = Vec::new();
    for m in 2..=cap {
        for n in 2..=cap {
            let mn = m * n;
            let mut push = |name: &str, a, b, kinds, v| out.push((format!("{name} m={m} n={n}"), a, b, kinds, v));
            push("Km □ Kn", K(m), K(n), CART, m.max(n));
            for tree in [P(n), S(n)] {
                push("Km □ Tn", K(m), tree, CART, n.max(mn - m));
            }
            for (t1, t2) in [(P(m), P(n)), (S(m), P(n)), (P(m), S(n))] {
                push("Tm □ Tn", t1, t2, CART, (mn - n).max(mn - m));
            }
            push("Km * Kn", K(m), K(n), BOTH, 1);
            push("Km * Pn", K(m), P(n), BOTH, up(n));
            push("Pm * Pn", P(m), P(n), BOTH, up(m) * up(n));
            if n >= 3 {
                push("Km □ Cn", K(m), C(n), CART, n.max(mn - 2 * m));
                push("Km * Cn", K(m), C(n), BOTH, half(n));
            }
            if m >= 3 {
                for tree in [P(n), S(n)] {
                    push("Cm □ Tn", C(m), tree, CART, (mn - 2 * n).max(mn - m));
                }
                push("Cm * Pn", C(m), P(n), BOTH, half(m) * up(n));
            }
            if m >= 3 && n >= 3 {
                push("Cm □ Cn", C(m), C(n), CART, (mn - 2 * n).max(mn - 2 * m));
                push("Cm ∘ Cn", C(m), C(n), LEX, half(m) * half(n));
                if m % 2 == 0 {
                    push("C2j ⊠ Cn", C(m), C(n), STRONG, half(m) * half(n));
                } else if n % 2 == 1 {
                    let (j, k) = ((m - 1) / 2, (n - 1) / 2);
                    let (j, k) = (j.max(k), j.min(k));
                    push("C2j+1 ⊠ C2k+1", C(m), C(n), STRONG, j * k + k / 2);
                }
            }
        }
    }
    out
}

fn cnum_closed_forms(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(2)?;
    let budget = ctx.budget();
    let mut exact_runs = 0;
    for (name, a, b, kinds, formula) in closed_forms(cap) {
        let (g, h) = (fam(a), fam(b));
        for &kind in kinds {
            let p = product(&g, &h, kind)?;
            let fast = convexity_fastpath(&p, &g, &h, budget)?;
            let exact = if p.order() <= 16 {
                exact_runs += 1;
                Some(convexity_number_exact(&p.graph, CC, budget)?.value)
            } else {
                None
            };
            ctx.instances += 1;
            if fast.value != formula || exact.is_some_and(|e| e != formula) {
                let mut cx = product_cx(
                    format!("{name} ({}): formula {formula}, fast path {}, exact {exact:?}", kind, fast.value),
                    &g,
                    &h,
                    &p,
                )
                .set("fastpath_witness", &fast.witness)
                .value("formula", formula)
                .value("fastpath", fast.value);
                if let Some(e) = exact {
                    cx = cx.value("exact", e);
                }
                return Ok(Some(cx));
            }
        }
    }
    ctx.note(format!(
        "m, n in 2..={cap}; fast path compared with the formula everywhere and with the exact solver on {exact_runs} products of order <= 16"
    ));
    ctx.note("trees T are paths and stars");
    Ok(None)
}

fn gadget_hw(ctx: &mut Ctx) -> Verdict {
    let hw = build_hw().graph;
    let fail = |msg: &str| Ok(Some(Counterexample::new(msg).graph("H(w)", &hw)));
    if hw.order() != HW_ORDER || hw.size() != 18 || !hw.is_bipartite() {
        return fail("H(w) must have 14 vertices, 18 edges and be bipartite");
    }
    for cycle in HW_CYCLES {
        let ids: Vec<usize> = cycle.iter().map(|n| hw_vertex(n)).collect();
        if !(0..ids.len()).all(|i| hw.has_edge(ids[i], ids[(i + 1) % ids.len()])) {
            return fail(&format!("cycle {} is missing from H(w)", cycle.join(",")));
        }
    }
    let seeds = hull_set_hw();
    if !is_hull_set(&hw, &seeds, CC)? {
        return fail("the seed set does not close H(w)");
    }
    let mg = MaskGraph::new(&hw)?;
    let y0 = 1u64 << hw_vertex("y0");
    let mut least = usize::MAX;
    let (mut minimum, mut with_y0) = (0usize, 0usize);
    for s in 0..=mg.all() {
        ctx.instances += 1;
        let size = s.count_ones() as usize;
        if size > least || !mg.is_hull_set(s, CC) {
            continue;
        }
        if size < least {
            (least, minimum, with_y0) = (size, 0, 0);
        }
        minimum += 1;
        with_y0 += usize::from(s & y0 != 0);
    }
    if least != 9 {
        let small = (0..=mg.all())
            .find(|&s| s.count_ones() as usize == least && mg.is_hull_set(s, CC))
            .expect("a minimum hull set exists");
        return Ok(Some(
            Counterexample::new(format!("H(w) has a hull set of size {least}"))
                .graph("H(w)", &hw)
                .set("hull_set", &VertexSet::from_mask(HW_ORDER, small))
                .value("hn", least),
        ));
    }
    ctx.note(format!(
        "hn(H(w)) = 9 over all 2^14 subsets; {minimum} minimum hull sets, {with_y0} of them contain y0"
    ));
    let mut completion = hw_completion_set();
    completion.insert(hw_vertex("y0"));
    if !is_hull_set(&hw, &completion, CC)? {
        return fail("the completion set plus y0 does not close H(w)");
    }
    ctx.note("an 8-vertex set finishes H(w) once y0 is generated from outside");
    let f = build_fuv();
    let fg = &f.graph;
    let attached = f.attachments().iter().enumerate().all(|(i, a)| {
        let closing = if i < 2 { a.len() } else { a.len() - 1 };
        (0..closing).all(|j| fg.has_edge(a[j], a[(j + 1) % a.len()]))
    });
    if fg.order() != 74 || !fg.is_bipartite() || !attached {
        return Ok(Some(Counterexample::new("F^uv must have 74 vertices, be bipartite and carry its attachments").graph("F^uv", fg)));
    }
    Ok(None)
}

fn p3_bases(ctx: &mut Ctx, cap: usize) -> Vec<Graph> {
    let top = cap.min(MAX_CATALOG_ORDER);
    if top < cap {
        ctx.note(format!("base catalog stops at order {MAX_CATALOG_ORDER}"));
    }
    (1..=top)
        .flat_map(connected_graphs)
        .filter(Graph::is_bipartite)
        .collect()
}

fn p3_reduction_forward(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(1)?;
    let mut largest = 0;
    for g in p3_bases(ctx, cap) {
        let s = ctx.hn(&g, P3)?;
        let inst = reduce_p3_to_cc(&g, s.value)?;
        let fail = |msg: String, inst: &ReductionInstance| {
            Counterexample::new(msg)
                .graph("G", &g)
                .graph("G'", &inst.output)
                .set("S_P3", &s.witness)
                .value("hn_P3", s.value)
                .value("pairs", inst.pairs.len())
        };
        let lift = match lift_hull_set(&inst, &s.witness) {
            Ok(l) => l,
            Err(Error::Counterexample(msg)) => return Ok(Some(fail(msg, &inst))),
            Err(e) => return Err(e),
        };
        ctx.instances += 1;
        largest = largest.max(inst.output.order());
        let expected = s.value + 45 * inst.pairs.len();
        if lift.len() != expected || !is_hull_set(&inst.output, &lift, CC)? {
            return Ok(Some(fail(format!("lifted set has {} vertices, expected {expected}", lift.len()), &inst).set("lift", &lift)));
        }
        if !inst.output.is_bipartite() {
            return Ok(Some(fail("G' is not bipartite".into(), &inst)));
        }
        if project_back(&inst, &lift)? != s.witness {
            return Ok(Some(fail("projecting the lift back does not give the P3 hull set".into(), &inst).set("lift", &lift)));
        }
    }
    ctx.note(format!(
        "{} bipartite connected bases with order 1..={}; largest G' has {largest} vertices",
        ctx.instances,
        cap.min(MAX_CATALOG_ORDER)
    ));
    Ok(None)
}

/// Starting from the lifted certificate, swaps each gadget copy's nine seeds
/// for the eight-vertex completion set and then drops single vertices, keeping
/// every change that still closes `G'`.
fn compact_lift(inst: &ReductionInstance, lift: &VertexSet) -> Result<VertexSet> {
    let g = &inst.output;
    let seeds = hull_set_hw();
    let completion = hw_completion_set();
    let mut s = lift.clone();
    for gadget in &inst.gadgets {
        for &offset in &gadget.copies {
            let mut trial = s.clone();
            for x in &seeds {
                trial.remove(offset + x);
            }
            for x in &completion {
                trial.insert(offset + x);
            }
            if is_hull_set(g, &trial, CC)? {
                s = trial;
            }
        }
    }
    for x in s.to_vec() {
        let mut trial = s.clone();
        trial.remove(x);
        if is_hull_set(g, &trial, CC)? {
            s = trial;
        }
    }
    Ok(s)
}

fn p3_reduction_converse(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(1)?;
    for g in p3_bases(ctx, cap) {
        let s = ctx.hn(&g, P3)?;
        if s.value < 2 {
            continue;
        }
        // the largest budget the base must miss
        let inst = reduce_p3_to_cc(&g, s.value - 1)?;
        let lift = lift_hull_set(&inst, &s.witness)?;
        let small = compact_lift(&inst, &lift)?;
        ctx.instances += 1;
        if small.len() <= inst.k_prime {
            let cx = Counterexample::new(format!(
                "G' has a cycle hull set of {} vertices, within k' = {} for k = hn_P3(G) - 1 = {}",
                small.len(),
                inst.k_prime,
                inst.k
            ))
            .graph("G", &g)
            .graph("G'", &inst.output)
            .set("cycle_hull_set", &small)
            .value("hn_P3", s.value)
            .value("k", inst.k)
            .value("k_prime", inst.k_prime)
            .value("pairs", inst.pairs.len());
            ctx.note("y0 of a gadget copy can be generated through the attachment cycles, so that copy needs only eight seeds");
            return Ok(Some(cx));
        }
    }
    ctx.note(format!("{} bases; no hull set below hn_P3 + 45|L| found by seed swaps and removals", ctx.instances));
    Ok(None)
}

fn hardness_bases(cap: usize) -> Vec<(&'static str, Graph)> {
    [
        ("K1", Graph::empty(1)),
        ("P2", fam(FamilySpec::Path(2))),
        ("P3", fam(FamilySpec::Path(3))),
        ("K3", fam(FamilySpec::Complete(3))),
        ("C4", fam(FamilySpec::Cycle(4))),
    ]
    .into_iter()
    .filter(|(_, g)| g.order() <= cap)
    .collect()
}

fn cartesian_hardness(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(1)?;
    let hh = build_identified_hh();
    let seeds = hh.seeds[0].union(&hh.seeds[1]);
    if hh.graph.order() != 27 || !hh.graph.is_cut_vertex(hh.cut_vertex) || !is_hull_set(&hh.graph, &seeds, CC)? {
        return Ok(Some(
            Counterexample::new("HH must have 27 vertices, a cut vertex v and close from S(w1) ∪ S(w2)")
                .graph("HH", &hh.graph)
                .set("seeds", &seeds),
        ));
    }
    let mut compact_sizes = Vec::new();
    for (name, g) in hardness_bases(cap) {
        let s = ctx.hn(&g, CC)?;
        let inst = build_cartesian_hardness(&g, 0, s.value)?;
        let p = inst.product.as_ref().expect("the construction records G' □ K2");
        let v = inst.cut_vertex.expect("the construction records v");
        let out = &inst.output;
        ctx.instances += 1;
        let fail = |msg: String| {
            Counterexample::new(format!("base {name}: {msg}"))
                .graph("G", &g)
                .graph("G'", out)
                .value("hn_G", s.value)
        };
        if out.order() != g.order() + 27 || p.order() != 2 * out.order() || inst.k_prime != inst.k + 18 {
            return Ok(Some(fail("construction sizes are off".into())));
        }
        if !out.is_cut_vertex(v) || (g.is_bipartite() && !p.graph.is_bipartite()) {
            return Ok(Some(fail("v must be a cut vertex and bipartiteness must carry to G' □ K2".into())));
        }
        let cert = cartesian_certificate(&inst, &s.witness)?;
        let [s1, _] = attached_seeds(&inst)?;
        let Some(split) = witness_for_split(out, &cert, &s1)? else {
            return Ok(Some(fail("the hulls of S(w1) and the rest do not meet".into()).set("certificate", &cert)));
        };
        if split.meet.to_vec() != [v] {
            return Ok(Some(fail("the two hulls meet outside v".into()).set("meet", &split.meet)));
        }
        let lift = cartesian_partition_lift(p, &split, 0, 1)?;
        if lift.len() != inst.k_prime || !is_hull_set(&p.graph, &lift, CC)? {
            return Ok(Some(fail("the lifted certificate does not close G' □ K2".into()).set("lift", &lift)));
        }
        compact_sizes.push(format!("{name}: {}", compact_cartesian_certificate(&inst, &s.witness)?.len()));
    }
    ctx.note("for each base, S_G ∪ S(w1) ∪ S(w2) closes G', its split at S(w1) meets exactly in v, and the lift closes G' □ K2 with k + 18 vertices");
    ctx.note(format!(
        "smaller hull sets of G' exist: S_G ∪ S(w1) plus eight seeds of w2 closes G' ({}); see identified-pair-count",
        compact_sizes.join(", ")
    ));
    // bowtie mini-variants, small enough for exact solving
    let mut minis = Vec::new();
    for (name, g) in hardness_bases(cap).into_iter().filter(|(_, g)| g.order() + 5 <= 12) {
        let s = ctx.hn(&g, CC)?;
        let inst = build_cartesian_mini(&g, 0, s.value)?;
        let p = inst.product.as_ref().expect("the construction records G' □ K2");
        let a = ctx.hn(&inst.output, CC)?.value;
        let b = ctx.hn(&p.graph, CC)?.value;
        let pc = partition_condition(&inst.output, ctx.budget())?;
        ctx.instances += 1;
        if (b != a && b != a + 1) || (b == a) != pc {
            return Ok(Some(
                Counterexample::new(format!("mini-variant on {name}: hn(G') = {a}, hn(G' □ K2) = {b}, partition condition {pc}"))
                    .graph("G'", &inst.output)
                    .value("hn_G_prime", a)
                    .value("hn_product", b),
            ));
        }
        minis.push(format!("{name}: hn(G) = {}, hn(G') = {a}, hn(G' □ K2) = {b}, partition condition {pc}", s.value));
    }
    if !minis.is_empty() {
        ctx.note(format!("bowtie mini-variants: {}", minis.join("; ")));
    }
    Ok(None)
}

fn identified_pair_count(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(1)?;
    for (name, g) in hardness_bases(cap) {
        let s = ctx.hn(&g, CC)?;
        let inst = build_cartesian_hardness(&g, 0, s.value)?;
        let small = compact_cartesian_certificate(&inst, &s.witness)?;
        ctx.instances += 1;
        if small.len() < s.value + 18 {
            let cx = Counterexample::new(format!(
                "base {name}: G' has a cycle hull set of {} vertices, below hn(G) + 18 = {}",
                small.len(),
                s.value + 18
            ))
            .graph("G", &g)
            .graph("G'", &inst.output)
            .set("cycle_hull_set", &small)
            .value("hn_G", s.value);
            ctx.note("S(w1) generates v, after which eight seeds finish the second copy of H(w)");
            return Ok(Some(cx));
        }
    }
    Ok(None)
}

fn random_subset(r: &mut rand_xoshiro::SplitMix64, n: usize, p: f64) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if unit(r) < p {
            s.insert(v);
        }
    }
    s
}

fn kernel_properties(ctx: &mut Ctx) -> Verdict {
    const CASES: usize = 500;
    let cap = ctx.cap_at_least(1)?;
    let mut r = rng(ctx.check.seed);
    for _ in 0..CASES {
        let n = uniform(&mut r, 1, cap);
        let density = 0.2 + 0.6 * unit(&mut r);
        let g = random_graph(n, density, &mut r);
        let s = random_subset(&mut r, n, 0.35);
        let t = s.union(&random_subset(&mut r, n, 0.2));
        let other = random_subset(&mut r, n, 0.35);
        ctx.instances += 1;
        let cx = |msg: &str| Counterexample::new(msg).graph("G", &g).set("S", &s).set("T", &t).set("U", &other);
        for kind in [CC, P3] {
            let hs = hull(&g, &s, kind)?;
            if !s.is_subset(&hs) || !s.is_subset(&interval(&g, &s, kind)?) {
                return Ok(Some(cx(&format!("{} hull is not extensive", kind))));
            }
            if !hs.is_subset(&hull(&g, &t, kind)?) {
                return Ok(Some(cx(&format!("{} hull is not monotone on S ⊆ T", kind))));
            }
            if hull(&g, &hs, kind)? != hs {
                return Ok(Some(cx(&format!("{} hull is not idempotent", kind))));
            }
            let meet = hs.intersection(&hull(&g, &other, kind)?);
            if !is_convex(&g, &meet, kind)? {
                return Ok(Some(cx(&format!("{} convex sets are not closed under intersection", kind))));
            }
            if let Some(m) = s.to_mask() {
                let mg = MaskGraph::new(&g)?;
                if mg.closure(m, kind) != hs.to_mask().expect("same universe") {
                    return Ok(Some(cx(&format!("{} mask closure disagrees with the set closure", kind))));
                }
            }
        }
        if !hull(&g, &s, CC)?.is_subset(&hull(&g, &s, P3)?) {
            return Ok(Some(cx("the cycle hull is not contained in the P3 hull")));
        }
        if interval(&g, &s, CC)? != oracle::cycle_interval(&g, &s) {
            return Ok(Some(cx("the cycle interval disagrees with the reference cycle search")));
        }
    }
    ctx.note(format!(
        "{CASES} seeded (graph, set) cases with order 1..={cap}; extensivity, monotonicity, idempotence, intersections, mask kernel, domination, reference interval"
    ));
    Ok(None)
}

fn negative_control(ctx: &mut Ctx) -> Verdict {
    let cap = ctx.cap_at_least(2)?;
    for (gn, g) in named_factors(cap) {
        let h = fam(FamilySpec::Path(2));
        let p = product(&g, &h, ProductKind::Strong)?;
        let exact = ctx.hn(&p.graph, CC)?;
        ctx.instances += 1;
        // deliberately wrong: the strong product has hull number 2
        let wrong = 3;
        if exact.value != wrong {
            return Ok(Some(
                product_cx(format!("hn({}) = {}, the control formula says {wrong}", p.describe(&gn, "P2"), exact.value), &g, &h, &p)
                    .set("exact_witness", &exact.witness)
                    .value("exact", exact.value),
            ));
        }
    }
    Ok(None)
}
