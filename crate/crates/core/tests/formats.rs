//! graph6 and edge-list codecs against petgraph.

use std::collections::BTreeSet;

use cycle_convexity::catalog::{all_graphs, random_graph, rng};
use cycle_convexity::format::{parse_auto, parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use cycle_convexity::Graph;
use petgraph::graph::UnGraph;
use petgraph::graph6::{from_graph6_representation, ToGraph6};

fn edge_set(edges: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect()
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.order(), g.size());
    for _ in 0..g.order() {
        p.add_node(());
    }
    for (a, b) in g.edges() {
        p.add_edge((a as u32).into(), (b as u32).into(), ());
    }
    p
}

fn samples() -> Vec<Graph> {
    let mut out: Vec<Graph> = (0..=6).flat_map(all_graphs).collect();
    let mut r = rng(7);
    for n in [7, 9, 12, 20, 40, 62, 63, 64, 100] {
        for p in [0.1, 0.5, 0.9] {
            out.push(random_graph(n, p, &mut r));
        }
    }
    out
}

fn agree(g: &Graph) {
    let ours = to_graph6(g);
    assert_eq!(ours, to_petgraph(g).graph6_string(), "encoding of {:?}", edge_set(g.edges()));
    let (n, edges) = from_graph6_representation::<u32>(ours.clone());
    assert_eq!(n, g.order());
    let theirs = edge_set(edges.into_iter().map(|(a, b)| (a as usize, b as usize)));
    assert_eq!(theirs, edge_set(g.edges()));
    if g.order() > 64 {
        assert!(parse_graph6(&ours).is_err(), "parser stops at 64 vertices");
        return;
    }
    let back = parse_graph6(&ours).unwrap();
    assert_eq!(back.order(), g.order());
    assert_eq!(edge_set(back.edges()), edge_set(g.edges()));
}

#[test]
fn graph6_matches_petgraph() {
    for g in samples() {
        agree(&g);
    }
}

#[test]
fn edge_list_round_trip() {
    for g in samples() {
        let text = to_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.order(), g.order());
        assert_eq!(edge_set(back.edges()), edge_set(g.edges()));
        if g.order() <= 64 {
            let auto = parse_auto(&to_graph6(&g)).unwrap();
            assert_eq!(edge_set(auto.edges()), edge_set(g.edges()));
        }
    }
}
