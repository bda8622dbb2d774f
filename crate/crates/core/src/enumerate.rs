//! Isomorph-free enumeration of the instance families the verifiers iterate
//! over: connected Berge-acyclic hypergraphs, general small hypergraphs,
//! colored trees and graphs, and small digraphs.
//!
//! Families are ordered by `(|V| + |E|, canonical encoding)`; the encoding
//! breaks ties, which fixes one admissible realization of the weight order.

use crate::canon::{
    canonical_encoding_cgraph, canonical_encoding_digraph, canonical_encoding_hypergraph,
    canonical_form_cgraph, canonical_form_digraph, canonical_form_hypergraph,
};
use crate::digraphs::{count_dihom, transitive_tournament};
use crate::hypergraph::{ColoredGraph, Digraph, Hypergraph};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A structure that has a weight and a canonical representative.
pub trait CanonicalAtom: Clone + Send + Sync {
    fn weight(&self) -> usize;
    fn encoding(&self) -> Vec<u8>;
    fn canonical(&self) -> Self;
}

impl CanonicalAtom for Hypergraph {
    fn weight(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }
    fn encoding(&self) -> Vec<u8> {
        canonical_encoding_hypergraph(self)
    }
    fn canonical(&self) -> Self {
        canonical_form_hypergraph(self)
    }
}

impl CanonicalAtom for ColoredGraph {
    fn weight(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }
    fn encoding(&self) -> Vec<u8> {
        canonical_encoding_cgraph(self)
    }
    fn canonical(&self) -> Self {
        canonical_form_cgraph(self)
    }
}

impl CanonicalAtom for Digraph {
    fn weight(&self) -> usize {
        self.vertex_count() + self.arc_count()
    }
    fn encoding(&self) -> Vec<u8> {
        canonical_encoding_digraph(self)
    }
    fn canonical(&self) -> Self {
        canonical_form_digraph(self)
    }
}

/// An ordered family of pairwise non-isomorphic canonical representatives.
#[derive(Debug, Clone)]
pub struct Family<T> {
    members: Vec<T>,
}

impl<T: CanonicalAtom> Family<T> {
    /// Canonicalizes, deduplicates, and orders the candidates.
    pub fn from_candidates<I: IntoIterator<Item = T>>(candidates: I) -> Self {
        let items: Vec<T> = candidates.into_iter().collect();
        let keyed: Vec<((usize, Vec<u8>), T)> = items
            .into_par_iter()
            .map(|t| {
                let canon = t.canonical();
                ((canon.weight(), canon.encoding()), canon)
            })
            .collect();
        let mut map: BTreeMap<(usize, Vec<u8>), T> = BTreeMap::new();
        for (key, t) in keyed {
            map.entry(key).or_insert(t);
        }
        Family { members: map.into_values().collect() }
    }

    pub fn members(&self) -> &[T] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.members.iter()
    }

    pub fn retain<F: FnMut(&T) -> bool>(&mut self, f: F) {
        self.members.retain(f);
    }
}

/// Calls `f` for every multiset of `count` indices drawn from `0..pool`
/// (non-decreasing index vectors).
fn for_each_multiset<F: FnMut(&[usize])>(pool: usize, count: usize, f: &mut F) {
    fn go<F: FnMut(&[usize])>(pool: usize, count: usize, start: usize, acc: &mut Vec<usize>, f: &mut F) {
        if acc.len() == count {
            f(acc);
            return;
        }
        for i in start..pool {
            acc.push(i);
            go(pool, count, i, acc, f);
            acc.pop();
        }
    }
    go(pool, count, 0, &mut Vec::with_capacity(count), f);
}

/// Calls `f` for every strictly increasing index vector (sets).
fn for_each_subset_combo<F: FnMut(&[usize])>(pool: usize, count: usize, f: &mut F) {
    fn go<F: FnMut(&[usize])>(pool: usize, count: usize, start: usize, acc: &mut Vec<usize>, f: &mut F) {
        if acc.len() == count {
            f(acc);
            return;
        }
        for i in start..pool {
            acc.push(i);
            go(pool, count, i + 1, acc, f);
            acc.pop();
        }
    }
    go(pool, count, 0, &mut Vec::with_capacity(count), f);
}

/// All nonempty subsets of `1..=n` with at most `max_size` elements, as
/// sorted vertex lists.
fn subsets_up_to(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= max_size {
            out.push((1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect());
        }
    }
    out
}

fn connected_edge_union(n: usize, edges: &[&Vec<usize>]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut dsu = crate::hypergraph::Dsu::new(n);
    for edge in edges {
        for w in edge.windows(2) {
            dsu.union(w[0] - 1, w[1] - 1);
        }
    }
    let root = dsu.find(0);
    (1..n).all(|v| dsu.find(v) == root)
}

/// All hypergraphs with exactly `m` edges, up to isomorphism, within the
/// given bounds.
pub fn enum_hypergraphs_exact(
    max_v: usize,
    m: usize,
    max_edge_size: usize,
    simple_only: bool,
    connected_only: bool,
) -> Family<Hypergraph> {
    let mut labeled: Vec<Hypergraph> = Vec::new();
    for n in 1..=max_v {
        let subsets = subsets_up_to(n, max_edge_size.min(n));
        let mut push = |indices: &[usize]| {
            let edges: Vec<&Vec<usize>> = indices.iter().map(|&i| &subsets[i]).collect();
            if connected_only && !connected_edge_union(n, &edges) {
                return;
            }
            let edges: Vec<Vec<usize>> = edges.into_iter().cloned().collect();
            labeled.push(Hypergraph::new(n, edges).expect("generated edges are valid"));
        };
        if simple_only {
            for_each_subset_combo(subsets.len(), m, &mut push);
        } else {
            for_each_multiset(subsets.len(), m, &mut push);
        }
    }
    Family::from_candidates(labeled)
}

/// All hypergraphs within the bounds, up to isomorphism.
pub fn enum_hypergraphs(
    max_v: usize,
    max_e: usize,
    max_edge_size: usize,
    simple_only: bool,
    connected_only: bool,
) -> Family<Hypergraph> {
    let mut all: Vec<Hypergraph> = Vec::new();
    for m in 0..=max_e {
        all.extend(
            enum_hypergraphs_exact(max_v, m, max_edge_size, simple_only, connected_only)
                .members()
                .iter()
                .cloned(),
        );
    }
    Family::from_candidates(all)
}

/// Level sequences of all rooted trees on `n` nodes (root level 1), in the
/// standard successor order.
fn rooted_tree_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seqs = Vec::new();
    let mut level: Vec<usize> = (1..=n).collect();
    loop {
        seqs.push(level.clone());
        // Successor: find the last position with level > 2, chop everything
        // after it to copies of the prefix ending at its shallower ancestor.
        let Some(p) = level.iter().rposition(|&l| l > 2) else {
            break;
        };
        let q = level[..p].iter().rposition(|&l| l == level[p] - 1).expect("parent exists");
        for i in p..n {
            level[i] = level[i - (p - q)];
        }
    }
    seqs
}

fn tree_edges_from_level_sequence(level: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(level.len().saturating_sub(1));
    for i in 1..level.len() {
        let parent = (0..i).rev().find(|&j| level[j] == level[i] - 1).expect("parent exists");
        edges.push((parent + 1, i + 1));
    }
    edges
}

/// All free trees on `1..=max_v` vertices, as uniformly colored graphs.
pub fn enum_free_trees(max_v: usize) -> Family<ColoredGraph> {
    let mut candidates = Vec::new();
    for n in 1..=max_v {
        for level in rooted_tree_level_sequences(n) {
            let edges = tree_edges_from_level_sequence(&level);
            candidates.push(
                ColoredGraph::new(n, vec![1; n], &edges).expect("tree edges are valid"),
            );
        }
    }
    Family::from_candidates(candidates)
}

/// Converts a tree with a chosen bipartition side into a hypergraph whose
/// incidence graph is that tree. Nodes on the vertex side become vertices in
/// node order; every other node becomes an edge containing its neighbors.
/// Returns `None` when an edge node would be empty (the one-node tree taken
/// as an edge).
fn tree_to_hypergraph(n: usize, edges: &[(usize, usize)], vertex_side_parity: usize) -> Option<Hypergraph> {
    let mut depth = vec![usize::MAX; n + 1];
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut stack = vec![1usize];
    depth[1] = 0;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                stack.push(v);
            }
        }
    }
    let mut vertex_id = vec![0usize; n + 1];
    let mut next = 0usize;
    for node in 1..=n {
        if depth[node] % 2 == vertex_side_parity {
            next += 1;
            vertex_id[node] = next;
        }
    }
    let mut hyperedges = Vec::new();
    for node in 1..=n {
        if depth[node] % 2 != vertex_side_parity {
            if adj[node].is_empty() {
                return None;
            }
            let members: Vec<usize> = adj[node].iter().map(|&u| vertex_id[u]).collect();
            hyperedges.push(members);
        }
    }
    Some(Hypergraph::new(next, hyperedges).expect("tree conversion is valid"))
}

/// All connected Berge-acyclic hypergraphs with `|V| + |E| <= max_weight`,
/// up to isomorphism. Generated from free trees: each tree is the incidence
/// graph, and each bipartition side can play the vertex role.
pub fn enum_berge_acyclic(max_weight: usize) -> Family<Hypergraph> {
    let mut candidates = Vec::new();
    for tree in enum_free_trees(max_weight).iter() {
        let n = tree.vertex_count();
        let edges = tree.edge_list();
        for parity in 0..2 {
            if let Some(h) = tree_to_hypergraph(n, &edges, parity) {
                candidates.push(h);
            }
        }
    }
    let family = Family::from_candidates(candidates);
    debug_assert!(family.iter().all(|g| g.is_connected() && g.is_berge_acyclic()));
    family
}

/// Connected Berge-acyclic hypergraphs with exactly `m` edges and at most
/// `max_edge_size` vertices per edge. The class is finite: such a hypergraph
/// has at most `1 + m * (max_edge_size - 1)` vertices.
pub fn enum_berge_acyclic_with(m: usize, max_edge_size: usize) -> Family<Hypergraph> {
    let weight_bound = if m == 0 { 1 } else { m * max_edge_size + 1 };
    let mut family = enum_berge_acyclic(weight_bound);
    family.retain(|g| g.edge_count() == m && g.max_edge_size() <= max_edge_size);
    family
}

/// All digraphs (loops allowed) on at most `max_v` vertices, up to
/// isomorphism.
pub fn enum_digraphs(max_v: usize) -> Family<Digraph> {
    let mut candidates = Vec::new();
    for n in 1..=max_v {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (1..=n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let arcs: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            candidates.push(Digraph::new(n, arcs).expect("generated arcs are valid"));
        }
    }
    Family::from_candidates(candidates)
}

/// The digraphs on at most `max_v` vertices admitting a homomorphism into
/// the transitive tournament on three vertices.
pub fn enum_dags_a3(max_v: usize) -> Family<Digraph> {
    let t3 = transitive_tournament(3);
    let mut family = enum_digraphs(max_v);
    family.retain(|d| count_dihom(d, &t3) > 0);
    family
}

/// All vertex-colored trees on at most `max_v` vertices with colors drawn
/// from `1..=num_colors`, up to color-preserving isomorphism.
pub fn enum_colored_trees(max_v: usize, num_colors: u32) -> Family<ColoredGraph> {
    let mut candidates = Vec::new();
    for tree in enum_free_trees(max_v).iter() {
        let n = tree.vertex_count();
        let edges = tree.edge_list();
        let mut coloring = vec![1u32; n];
        loop {
            candidates.push(
                ColoredGraph::new(n, coloring.clone(), &edges).expect("valid coloring"),
            );
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                if coloring[i] < num_colors {
                    coloring[i] += 1;
                    break;
                }
                coloring[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    Family::from_candidates(candidates)
}

/// All vertex-colored graphs on at most `max_v` vertices with colors drawn
/// from `1..=num_colors`, up to color-preserving isomorphism.
pub fn enum_colored_graphs(max_v: usize, num_colors: u32) -> Family<ColoredGraph> {
    let mut candidates = Vec::new();
    for n in 1..=max_v {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut coloring = vec![1u32; n];
            loop {
                candidates.push(
                    ColoredGraph::new(n, coloring.clone(), &edges).expect("valid coloring"),
                );
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if coloring[i] < num_colors {
                        coloring[i] += 1;
                        break;
                    }
                    coloring[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }
    Family::from_candidates(candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcount::is_isomorphic;

    #[test]
    fn rooted_tree_counts() {
        // Known counts of rooted trees on n nodes.
        let expected = [1usize, 1, 2, 4, 9, 20];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(rooted_tree_level_sequences(i + 1).len(), want);
        }
    }

    #[test]
    fn free_tree_counts() {
        let expected = [1usize, 1, 1, 2, 3, 6];
        for (i, &want) in expected.iter().enumerate() {
            let trees = enum_free_trees(i + 1);
            let count = trees.iter().filter(|t| t.vertex_count() == i + 1).count();
            assert_eq!(count, want);
        }
    }

    #[test]
    fn berge_acyclic_small_weights() {
        let fam = enum_berge_acyclic(2);
        let k1 = Hypergraph::single_vertex();
        let b1 = Hypergraph::single_edge(1).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(is_isomorphic(&fam.members()[0], &k1));
        assert!(is_isomorphic(&fam.members()[1], &b1));

        let fam = enum_berge_acyclic(1);
        assert_eq!(fam.len(), 1);
        assert!(is_isomorphic(&fam.members()[0], &k1));

        for g in enum_berge_acyclic(5).iter() {
            assert!(g.is_connected() && g.is_berge_acyclic());
            assert!(g.incidence_graph().is_tree());
        }
    }

    #[test]
    fn berge_acyclic_with_single_edge_gives_bk() {
        let fam = enum_berge_acyclic_with(1, 3);
        assert_eq!(fam.len(), 3);
        for (member, k) in fam.iter().zip(1..=3) {
            assert!(is_isomorphic(member, &Hypergraph::single_edge(k).unwrap()));
        }

        let fam = enum_berge_acyclic_with(0, 3);
        assert_eq!(fam.len(), 1);
        assert!(is_isomorphic(&fam.members()[0], &Hypergraph::single_vertex()));

        for g in enum_berge_acyclic_with(2, 3).iter() {
            assert_eq!(g.edge_count(), 2);
            assert!(g.max_edge_size() <= 3);
        }
    }

    #[test]
    fn hypergraph_family_small_bounds() {
        let fam = enum_hypergraphs(1, 1, 1, true, false);
        assert_eq!(fam.len(), 2);

        let fam = enum_hypergraphs(2, 0, 2, false, false);
        assert_eq!(fam.len(), 2); // one or two isolated vertices

        // Regression constant, fixed by hand enumeration: connected simple
        // hypergraphs with at most 2 vertices and at most 2 edges.
        let fam = enum_hypergraphs(2, 2, 2, true, true);
        assert_eq!(fam.len(), 4);
    }

    #[test]
    fn families_are_isomorph_free_and_ordered() {
        let fam = enum_hypergraphs(3, 2, 3, false, false);
        let members = fam.members();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                assert!(!is_isomorphic(a, b));
            }
        }
        for w in members.windows(2) {
            assert!(w[0].vertex_count() + w[0].edge_count() <= w[1].vertex_count() + w[1].edge_count());
        }
    }

    #[test]
    fn ba_members_match_direct_filter() {
        // The bounded Berge-acyclic class equals the direct filter of the
        // general enumeration at overlapping bounds.
        use crate::canon::canonical_encoding_hypergraph as enc;
        for (m, size_cap) in [(1usize, 3usize), (2, 2), (2, 3)] {
            let via_trees: std::collections::BTreeSet<Vec<u8>> = enum_berge_acyclic_with(m, size_cap)
                .iter()
                .map(enc)
                .collect();
            let max_v = if m == 0 { 1 } else { 1 + m * (size_cap - 1) };
            let via_filter: std::collections::BTreeSet<Vec<u8>> =
                enum_hypergraphs_exact(max_v, m, size_cap, false, true)
                    .iter()
                    .filter(|g| g.is_berge_acyclic())
                    .map(enc)
                    .collect();
            assert_eq!(via_trees, via_filter, "m={m} cap={size_cap}");
        }
    }

    #[test]
    fn digraph_family_on_one_vertex() {
        let fam = enum_digraphs(1);
        assert_eq!(fam.len(), 2); // no arc; a single loop
    }

    #[test]
    fn a3_membership_examples() {
        let t3 = transitive_tournament(3);
        let fam = enum_dags_a3(3);
        assert!(fam.iter().any(|d| is_digraph_isomorphic(d, &t3)));
        let c3 = Digraph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!fam.iter().any(|d| is_digraph_isomorphic(d, &c3)));
        let arc = Digraph::new(2, vec![(1, 2)]).unwrap();
        assert!(fam.iter().any(|d| is_digraph_isomorphic(d, &arc)));
    }

    fn is_digraph_isomorphic(a: &Digraph, b: &Digraph) -> bool {
        canonical_encoding_digraph(a) == canonical_encoding_digraph(b)
    }
}
