//! Small-graph catalogs: exhaustive isomorphism classes and seeded random
//! graphs.

use std::collections::BTreeSet;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::{generate, FamilySpec, Graph};

/// Largest order supported by [`connected_graphs`] and [`all_graphs`].
pub const MAX_CATALOG_ORDER: usize = 6;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Canonical key: the least upper-triangle code over all relabelings that
/// list vertices by non-increasing degree.
fn canonical_key(n: usize, adj: &[u64], pairs: &[(usize, usize)]) -> u64 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || adj[order[i]].count_ones() != adj[order[start]].count_ones() {
            classes.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_classes(&mut order, &classes, 0, &mut |perm| {
        let mut key = 0u64;
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                key |= 1 << bit;
            }
        }
        best = best.min(key);
    });
    best
}

fn permute_classes(
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    class: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if class == classes.len() {
        visit(order);
        return;
    }
    let (lo, hi) = classes[class];
    heap_permute(order, lo, hi - lo, classes, class, visit);
}

fn heap_permute(
    order: &mut Vec<usize>,
    lo: usize,
    k: usize,
    classes: &[(usize, usize)],
    class: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if k <= 1 {
        permute_classes(order, classes, class + 1, visit);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(order, lo, k - 1, classes, class, visit);
        if k.is_multiple_of(2) {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
    heap_permute(order, lo, k - 1, classes, class, visit);
}

fn classes(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n <= MAX_CATALOG_ORDER, "catalog supports orders up to {MAX_CATALOG_ORDER}");
    if n == 0 {
        return Vec::new();
    }
    let pairs = pair_index(n);
    let mut keys = BTreeSet::new();
    for code in 0u64..(1 << pairs.len()) {
        let mut adj = vec![0u64; n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        if connected_only && !mask_connected(&adj) {
            continue;
        }
        keys.insert(canonical_key(n, &adj, &pairs));
    }
    keys.into_iter()
        .map(|key| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| key >> bit & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("catalog edges are simple")
        })
        .collect()
}

fn mask_connected(adj: &[u64]) -> bool {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros();
            f &= f - 1;
            next |= adj[v as usize];
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    seen == all
}

/// One representative of every isomorphism class of connected graphs of
/// order `n` (`n <= 6`), in a fixed canonical order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    classes(n, true)
}

/// One representative of every isomorphism class of graphs of order `n`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    classes(n, false)
}

/// Erdős–Rényi graph drawn from SplitMix64: edge `(i, j)` for `i < j` in
/// lexicographic order is present when the next 53-bit uniform is below `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if unit(rng) < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random edges are simple")
}

/// A uniform draw in `[0, 1)` from the top 53 bits of the next output.
pub fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

/// A draw from `lo..=hi` as `lo + next_u64() % (hi - lo + 1)`.
pub fn uniform(rng: &mut SplitMix64, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// The named factors used by the product checks: `P2, P3, P4, C3, C4, K3, K4`.
pub fn named_small_factors() -> Vec<(String, Graph)> {
    [
        FamilySpec::Path(2),
        FamilySpec::Path(3),
        FamilySpec::Path(4),
        FamilySpec::Cycle(3),
        FamilySpec::Cycle(4),
        FamilySpec::Complete(3),
        FamilySpec::Complete(4),
    ]
    .into_iter()
    .map(|f| (f.name(), generate(f).expect("valid family")))
    .collect()
}
