//! Simple undirected graphs with dense vertex ids and optional labels.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and symmetric. Values are immutable once built;
/// use [`GraphBuilder`] to assemble one edge at a time.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Attaches per-vertex labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::LabelCount {
                expected: self.order(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or its id when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// One neighbor mask per vertex, available when `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nbrs| nbrs.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect(),
        )
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.order() {
            return Err(Error::UniverseMismatch {
                expected: self.order(),
                found: s.universe(),
            });
        }
        Ok(())
    }

    /// The subgraph induced by `keep`, together with the map from new ids to
    /// original ids (increasing). Labels are carried over.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old_ids
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| old_ids.iter().map(|&v| l[v].clone()).collect());
        (Graph { adj, labels }, old_ids)
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order()
    }

    /// True for the paths `P_n` (including `P_1`).
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|nbrs| nbrs.len() <= 2)
    }

    /// Two-coloring, or an odd cycle when none exists.
    pub fn bipartition(&self) -> Bipartiteness {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[u].unwrap());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(c) if c == color[u].unwrap() => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::empty(n);
        let mut right = VertexSet::empty(n);
        for (v, c) in color.iter().enumerate() {
            if *c == Some(false) {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Bipartiteness::Bipartite { left, right }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite { .. })
    }

    /// Whether some cycle of the graph passes through `v`: two distinct
    /// neighbors of `v` are joined by a path avoiding `v`.
    pub fn lies_on_cycle(&self, v: usize) -> bool {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        for (tag, &start) in self.adj[v].iter().enumerate() {
            if comp[start] != usize::MAX {
                return true;
            }
            comp[start] = tag;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if w != v && comp[w] == usize::MAX {
                        comp[w] = tag;
                        stack.push(w);
                    }
                }
            }
        }
        false
    }

    /// Whether removing `v` increases the number of components.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let before = self.components().len();
        let mut keep = self.vertex_set();
        keep.remove(v);
        let (sub, _) = self.induced_subgraph(&keep);
        sub.components().len() > before
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + shift).collect()),
        );
        let labels = if self.labels.is_some() || other.labels.is_some() {
            let mut l: Vec<String> = (0..self.order()).map(|v| self.label(v)).collect();
            l.extend((0..other.order()).map(|v| other.label(v)));
            Some(l)
        } else {
            None
        };
        Graph { adj, labels }
    }
}

fn odd_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

/// Result of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Color classes; the least vertex of every component is on the left.
    Bipartite { left: VertexSet, right: VertexSet },
    /// Vertices of an odd cycle in traversal order.
    OddCycle(Vec<usize>),
}

/// Incremental graph construction with validation.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    edges: Vec<BTreeSet<usize>>,
    labels: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            edges: vec![BTreeSet::new(); n],
            labels: vec![None; n],
        }
    }

    pub fn order(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.edges.push(BTreeSet::new());
        self.labels.push(Some(label.into()));
        self.edges.len() - 1
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.edges[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.edges[v].insert(u);
        Ok(())
    }

    /// Copies `g` into the builder and returns the id offset of its vertices.
    pub fn append(&mut self, g: &Graph, label: impl Fn(usize) -> String) -> usize {
        let offset = self.order();
        for v in 0..g.order() {
            self.add_vertex(label(v));
        }
        for (u, v) in g.edges() {
            self.edges[u + offset].insert(v + offset);
            self.edges[v + offset].insert(u + offset);
        }
        offset
    }

    pub fn build(self) -> Graph {
        let any_label = self.labels.iter().any(Option::is_some);
        let labels = any_label.then(|| {
            self.labels
                .iter()
                .enumerate()
                .map(|(v, l)| l.clone().unwrap_or_else(|| v.to_string()))
                .collect()
        });
        Graph {
            adj: self.edges.into_iter().map(|s| s.into_iter().collect()).collect(),
            labels,
        }
    }
}

/// Named graph families used as product factors and test instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n-1}`: vertex 0 joined to `n - 1` leaves.
    Star(usize),
    /// `P_m □ P_n` under the row-major encoding `(i, j) -> i * n + j`.
    Grid(usize, usize),
    /// Uniform labeled tree decoded from a Prüfer sequence drawn with SplitMix64.
    RandomTree { order: usize, seed: u64 },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n) => n,
            FamilySpec::Grid(m, n) => m * n,
            FamilySpec::RandomTree { order, .. } => order,
        }
    }

    /// Short name such as `P4`, `C5`, `grid3x4`, `tree8s42`.
    pub fn name(&self) -> String {
        match *self {
            FamilySpec::Path(n) => format!("P{n}"),
            FamilySpec::Cycle(n) => format!("C{n}"),
            FamilySpec::Complete(n) => format!("K{n}"),
            FamilySpec::Star(n) => format!("S{n}"),
            FamilySpec::Grid(m, n) => format!("grid{m}x{n}"),
            FamilySpec::RandomTree { order, seed } => format!("tree{order}s{seed}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `path:N`, `cycle:N`, `complete:N`, `star:N`, `grid:MxN`
    /// and `random_tree:N:SEED`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(s.to_string());
        let (family, params) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        Ok(match family {
            "path" => FamilySpec::Path(num(params)?),
            "cycle" => FamilySpec::Cycle(num(params)?),
            "complete" => FamilySpec::Complete(num(params)?),
            "star" => FamilySpec::Star(num(params)?),
            "grid" => {
                let (m, n) = params.split_once('x').ok_or_else(bad)?;
                FamilySpec::Grid(num(m)?, num(n)?)
            }
            "random_tree" => {
                let (n, seed) = params.split_once(':').ok_or_else(bad)?;
                FamilySpec::RandomTree {
                    order: num(n)?,
                    seed: seed.trim().parse().map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        })
    }
}

/// Instantiates a family.
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    let zero = |what: &str| Error::InvalidFamily(format!("{what} needs order >= 1"));
    match spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(zero("path"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidFamily(format!("cycle needs order >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Complete(n) => {
            if n == 0 {
                return Err(zero("complete"));
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilySpec::Star(n) => {
            if n == 0 {
                return Err(zero("star"));
            }
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        FamilySpec::Grid(m, n) => {
            if m == 0 || n == 0 {
                return Err(zero("grid"));
            }
            let idx = |i: usize, j: usize| i * n + j;
            let mut edges = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    if i + 1 < m {
                        edges.push((idx(i, j), idx(i + 1, j)));
                    }
                    if j + 1 < n {
                        edges.push((idx(i, j), idx(i, j + 1)));
                    }
                }
            }
            Graph::from_edges(m * n, edges)
        }
        FamilySpec::RandomTree { order, seed } => {
            if order == 0 {
                return Err(zero("random_tree"));
            }
            Ok(random_tree(order, seed))
        }
    }
}

/// Prüfer entries are `next_u64() % n` from SplitMix64 seeded with `seed`;
/// decoding always removes the smallest remaining leaf.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("valid tree");
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2)
        .map(|_| (rng.next_u64() % n as u64) as usize)
        .collect();
    prufer_decode(n, &code)
}

pub(crate) fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a simple tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn families() {
        let k4 = generate(FamilySpec::Complete(4)).unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        let g = generate(FamilySpec::Grid(2, 2)).unwrap();
        let c4 = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(g, c4);
        assert!(generate(FamilySpec::Cycle(2)).is_err());
        assert!(generate(FamilySpec::Path(0)).is_err());
        assert!(generate(FamilySpec::Grid(0, 3)).is_err());
    }

    #[test]
    fn random_tree_is_deterministic() {
        let spec = FamilySpec::RandomTree { order: 8, seed: 42 };
        let a = generate(spec).unwrap();
        let b = generate(spec).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        for seed in 0..50 {
            for n in 1..12 {
                assert!(generate(FamilySpec::RandomTree { order: n, seed }).unwrap().is_tree());
            }
        }
    }

    #[test]
    fn prufer_known_sequence() {
        // code [3,3,3,4] on 6 vertices: the classic textbook example
        let t = prufer_decode(6, &[3, 3, 3, 4]);
        let expected = Graph::from_edges(6, [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("grid:3x4".parse::<FamilySpec>().unwrap(), FamilySpec::Grid(3, 4));
        assert_eq!(
            "random_tree:8:42".parse::<FamilySpec>().unwrap(),
            FamilySpec::RandomTree { order: 8, seed: 42 }
        );
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("path".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn bipartiteness() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        match c4.bipartition() {
            Bipartiteness::Bipartite { left, right } => {
                assert_eq!(left.to_vec(), vec![0, 2]);
                assert_eq!(right.to_vec(), vec![1, 3]);
            }
            other => panic!("{other:?}"),
        }
        let c5 = generate(FamilySpec::Cycle(5)).unwrap();
        match c5.bipartition() {
            Bipartiteness::OddCycle(cyc) => {
                assert_eq!(cyc.len() % 2, 1);
                for i in 0..cyc.len() {
                    assert!(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
            other => panic!("{other:?}"),
        }
        match Graph::empty(1).bipartition() {
            Bipartiteness::Bipartite { left, right } => {
                assert_eq!(left.to_vec(), vec![0]);
                assert!(right.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_membership() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        assert!((0..4).all(|v| c4.lies_on_cycle(v)));
        let t = generate(FamilySpec::RandomTree { order: 9, seed: 3 }).unwrap();
        assert!((0..9).all(|v| !t.lies_on_cycle(v)));
        let b = bowtie();
        assert!(b.lies_on_cycle(2));
        assert!(b.is_cut_vertex(2));
        assert!(!b.is_cut_vertex(0));
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3);
        b.add_edge(0, 1).unwrap();
        assert_eq!(b.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(b.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert!(matches!(b.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn induced_and_union() {
        let b = bowtie();
        let keep = VertexSet::from_vertices(5, [2, 3, 4]).unwrap();
        let (sub, map) = b.induced_subgraph(&keep);
        assert_eq!(map, vec![2, 3, 4]);
        assert_eq!(sub.size(), 3);
        let u = b.disjoint_union(&sub);
        assert_eq!(u.order(), 8);
        assert_eq!(u.components().len(), 2);
        assert!(u.has_edge(5, 6));
    }
}
