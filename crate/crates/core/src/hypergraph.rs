//! Core data model: hypergraphs with parallel edges, vertex-colored graphs,
//! and directed graphs, together with the structural constructors used by the
//! verifiers (incidence graph, quotient, leaf filling, pendant edges, ...).
//!
//! Vertices are the integers `1..=n`. Hyperedges are stored as strictly
//! ascending vertex lists; an edge's identity is its position in the edge
//! list, so parallel edges are distinct individuals. All values are immutable
//! after construction and every operation is a pure function.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("colors has length {got}, expected {n}")]
    ColorCountMismatch { got: usize, n: usize },
    #[error("vertex colors must be positive")]
    NonPositiveColor,
    #[error("self-loop at vertex {vertex} not allowed")]
    SelfLoop { vertex: usize },
    #[error("duplicate arc ({from}, {to})")]
    DuplicateArc { from: usize, to: usize },
    #[error("classes do not form a partition of 1..={n}")]
    MalformedPartition { n: usize },
    #[error("edge size must be positive")]
    ZeroEdgeSize,
    #[error("expected one entry per edge: got {got}, edge count is {m}")]
    TargetCountMismatch { got: usize, m: usize },
    #[error("vertex map has length {got}, expected {n}")]
    MapLengthMismatch { got: usize, n: usize },
}

/// A hypergraph `(V, E, f)` with `V = {1, ..., n}`. Edges may repeat; the
/// incidence function is the edge list itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph on vertices `1..=n`. Each edge is normalized to a
    /// strictly ascending vertex list (set semantics). Empty edges and
    /// out-of-range vertex ids are rejected.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, StructureError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (index, edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(StructureError::EmptyEdge { index });
            }
            for &v in &edge {
                if v == 0 || v > n {
                    return Err(StructureError::VertexOutOfRange { vertex: v, n });
                }
            }
            let mut edge = edge;
            edge.sort_unstable();
            edge.dedup();
            normalized.push(edge);
        }
        Ok(Hypergraph { n, edges: normalized })
    }

    /// The hypergraph with a single vertex and no edges.
    pub fn single_vertex() -> Self {
        Hypergraph { n: 1, edges: Vec::new() }
    }

    /// The hypergraph with one edge containing `k` vertices.
    pub fn single_edge(k: usize) -> Result<Self, StructureError> {
        if k == 0 {
            return Err(StructureError::ZeroEdgeSize);
        }
        Ok(Hypergraph { n: k, edges: vec![(1..=k).collect()] })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `|V| + |E|`, the ordering key used for isomorphism-type families.
    pub fn weight(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> &[usize] {
        &self.edges[j]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// True when no two edges have the same vertex set.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.clone()))
    }

    /// Number of edges containing `v`, counted with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// A leaf is a vertex with exactly one edge incidence, counted with edge
    /// multiplicity. A vertex in two parallel edges is not a leaf.
    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// The maximum edge size, or 0 when there are no edges.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The bipartite incidence graph: vertices `1..=n` keep color 1, edge `j`
    /// becomes vertex `n + j + 1` with color 2, adjacent to its members.
    pub fn incidence_graph(&self) -> ColoredGraph {
        let total = self.n + self.edges.len();
        let mut colors = vec![1u32; self.n];
        colors.extend(std::iter::repeat_n(2, self.edges.len()));
        let mut edges = Vec::new();
        for (j, edge) in self.edges.iter().enumerate() {
            let enode = self.n + j + 1;
            for &v in edge {
                edges.push((v, enode));
            }
        }
        ColoredGraph::new(total, colors, &edges).expect("incidence graph is always valid")
    }

    /// Connectivity of the incidence graph. A hypergraph with a single vertex
    /// and no edges is connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n);
        for edge in &self.edges {
            for w in edge.windows(2) {
                dsu.union(w[0] - 1, w[1] - 1);
            }
        }
        let root = dsu.find(0);
        (1..self.n).all(|v| dsu.find(v) == root)
    }

    /// True when the incidence graph is acyclic.
    pub fn is_berge_acyclic(&self) -> bool {
        let total = self.n + self.edges.len();
        let mut dsu = Dsu::new(total);
        for (j, edge) in self.edges.iter().enumerate() {
            let enode = self.n + j;
            for &v in edge {
                if !dsu.union(v - 1, enode) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient hypergraph: one vertex per class, same edge count, edge `j`
    /// of the result is the set of classes meeting edge `j`. Classes are
    /// numbered by their smallest original member.
    pub fn quotient(&self, classes: &[Vec<usize>]) -> Result<Hypergraph, StructureError> {
        let mut class_of = vec![usize::MAX; self.n];
        let mut sorted: Vec<&Vec<usize>> = classes.iter().collect();
        if sorted.iter().any(|c| c.is_empty()) {
            return Err(StructureError::MalformedPartition { n: self.n });
        }
        sorted.sort_by_key(|c| *c.iter().min().expect("non-empty class"));
        for (id, class) in sorted.iter().enumerate() {
            for &v in class.iter() {
                if v == 0 || v > self.n || class_of[v - 1] != usize::MAX {
                    return Err(StructureError::MalformedPartition { n: self.n });
                }
                class_of[v - 1] = id;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(StructureError::MalformedPartition { n: self.n });
        }
        let edges = self
            .edges
            .iter()
            .map(|edge| edge.iter().map(|&v| class_of[v - 1] + 1).collect())
            .collect();
        Hypergraph::new(sorted.len(), edges)
    }

    /// The merge relation of a vertex map `hv: V(self) -> 1..=target_n`:
    /// the finest partition in which `u` and `v` share a class exactly when
    /// they are joined by a walk whose consecutive vertices share an edge and
    /// have equal images. Classes are sorted by smallest member.
    pub fn merge_relation(
        &self,
        target: &Hypergraph,
        hv: &[usize],
    ) -> Result<Vec<Vec<usize>>, StructureError> {
        if hv.len() != self.n {
            return Err(StructureError::MapLengthMismatch { got: hv.len(), n: self.n });
        }
        for &w in hv {
            if w == 0 || w > target.vertex_count() {
                return Err(StructureError::VertexOutOfRange { vertex: w, n: target.vertex_count() });
            }
        }
        let mut dsu = Dsu::new(self.n);
        for edge in &self.edges {
            for (i, &u) in edge.iter().enumerate() {
                for &v in &edge[i + 1..] {
                    if hv[u - 1] == hv[v - 1] {
                        dsu.union(u - 1, v - 1);
                    }
                }
            }
        }
        Ok(dsu.classes())
    }

    /// Enlarges edge `j` by `targets[j]` fresh degree-one vertices. Fresh
    /// vertices are numbered after `n`, grouped by edge in edge order.
    pub fn fill_edges(&self, targets: &[usize]) -> Result<Hypergraph, StructureError> {
        if targets.len() != self.edges.len() {
            return Err(StructureError::TargetCountMismatch {
                got: targets.len(),
                m: self.edges.len(),
            });
        }
        let mut next = self.n + 1;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (edge, &extra) in self.edges.iter().zip(targets) {
            let mut enlarged = edge.clone();
            for _ in 0..extra {
                enlarged.push(next);
                next += 1;
            }
            edges.push(enlarged);
        }
        Hypergraph::new(next - 1, edges)
    }

    /// Deduplicates parallel edges, keeping first occurrences in order.
    pub fn merge_parallel_edges(&self) -> Hypergraph {
        let mut seen = std::collections::BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert((*e).clone()))
            .cloned()
            .collect();
        Hypergraph { n: self.n, edges }
    }

    /// Entry `i` (1-based) counts the edges of size `i` containing `v`,
    /// with multiplicity. The entries sum to `degree(v)`.
    pub fn degree_sequence(&self, v: usize) -> Result<DegreeSequence, StructureError> {
        if v == 0 || v > self.n {
            return Err(StructureError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut entries = vec![0u64; self.n];
        for edge in &self.edges {
            if edge.binary_search(&v).is_ok() {
                entries[edge.len() - 1] += 1;
            }
        }
        Ok(DegreeSequence { entries })
    }

    /// Adds `r` new edges, each containing `u` together with `s` fresh
    /// vertices private to that edge.
    pub fn attach_pendant_edges(
        &self,
        u: usize,
        r: usize,
        s: usize,
    ) -> Result<Hypergraph, StructureError> {
        if u == 0 || u > self.n {
            return Err(StructureError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if s == 0 {
            return Err(StructureError::ZeroEdgeSize);
        }
        let mut edges = self.edges.clone();
        let mut next = self.n + 1;
        for _ in 0..r {
            let mut edge = vec![u];
            edge.extend(next..next + s);
            next += s;
            edges.push(edge);
        }
        Hypergraph::new(next - 1, edges)
    }

    /// Applies a vertex relabeling `perm` (1-based, `perm[v-1]` is the new
    /// name of `v`); edge order is preserved.
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        debug_assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|edge| {
                let mut e: Vec<usize> = edge.iter().map(|&v| perm[v - 1]).collect();
                e.sort_unstable();
                e
            })
            .collect();
        Hypergraph { n: self.n, edges }
    }

    /// Copy with the edge list sorted lexicographically; used to produce
    /// canonical representatives.
    pub(crate) fn with_sorted_edges(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort();
        Hypergraph { n: self.n, edges }
    }
}

/// Per-vertex degree sequence: entry `i` counts incident edges of size `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    entries: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(entries: Vec<u64>) -> Self {
        DegreeSequence { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }
}

/// A simple undirected graph with positive integer vertex colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl ColoredGraph {
    /// Builds a colored graph on vertices `1..=n`. Duplicate edges collapse;
    /// self-loops are rejected; `colors` must list one positive color per
    /// vertex.
    pub fn new(
        n: usize,
        colors: Vec<u32>,
        edges: &[(usize, usize)],
    ) -> Result<Self, StructureError> {
        if colors.len() != n {
            return Err(StructureError::ColorCountMismatch { got: colors.len(), n });
        }
        if colors.contains(&0) {
            return Err(StructureError::NonPositiveColor);
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(StructureError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(StructureError::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key) {
                adj[u - 1].push(v);
                adj[v - 1].push(u);
            }
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(ColoredGraph { n, colors, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v - 1]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(min, max)` pairs in sorted order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for &v in self.neighbors(u) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![1usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Applies a vertex relabeling (1-based).
    pub fn relabel(&self, perm: &[usize]) -> ColoredGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut colors = vec![0u32; self.n];
        for v in 1..=self.n {
            colors[perm[v - 1] - 1] = self.colors[v - 1];
        }
        let edges: Vec<(usize, usize)> = self
            .edge_list()
            .into_iter()
            .map(|(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        ColoredGraph::new(self.n, colors, &edges).expect("relabeling preserves validity")
    }
}

/// A directed graph; loops are allowed, duplicate arcs are not.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, StructureError> {
        let mut sorted = arcs;
        for &(u, v) in &sorted {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(StructureError::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(StructureError::DuplicateArc { from: w[0].0, to: w[0].1 });
            }
        }
        Ok(Digraph { n, arcs: sorted })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn has_loop(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u == v)
    }

    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        let arcs = self
            .arcs
            .iter()
            .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        Digraph::new(self.n, arcs).expect("relabeling preserves validity")
    }
}

/// Disjoint-set union on `0..n`.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when `x` and `y` were already in the same class.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }

    /// Classes as 1-based vertex lists, sorted by smallest member.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for x in 0..n {
            let root = self.find(x);
            by_root.entry(root).or_default().push(x + 1);
        }
        by_root.into_values().collect()
    }
}
