//! Canonical labelings and encodings.
//!
//! Two structures have equal encodings exactly when they are isomorphic.
//! Colored graphs are canonicalized by an individualization-refinement
//! search: the ordered partition is refined to equitability, the first
//! non-singleton cell is branched on, and the minimum encoding over all
//! discrete leaves is the canonical form. Hypergraphs go through their
//! colored incidence graph (hypergraph isomorphism coincides with
//! color-preserving isomorphism of the incidence graphs). Digraphs are small
//! everywhere they are canonicalized, so a direct minimum over vertex
//! permutations suffices.

use crate::hypergraph::{ColoredGraph, Digraph, Hypergraph};
use itertools::Itertools;

/// Canonical labeling of a colored graph: `perm[v-1]` is the new (1-based)
/// name of vertex `v` in the canonical form.
pub fn canonical_labeling_cgraph(g: &ColoredGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    // Initial cells group vertices by color value, in color order.
    let mut by_color: std::collections::BTreeMap<u32, Vec<usize>> = std::collections::BTreeMap::new();
    for v in 1..=n {
        by_color.entry(g.color(v)).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_color.into_values().collect();
    let mut search = Search { g, best: None };
    search.descend(cells);
    let (_, labeling) = search.best.expect("search visits at least one leaf");
    labeling
}

struct Search<'a> {
    g: &'a ColoredGraph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let cells = refine(self.g, cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let mut perm = vec![0usize; self.g.vertex_count()];
                for (pos, cell) in cells.iter().enumerate() {
                    perm[cell[0] - 1] = pos + 1;
                }
                let enc = encode_cgraph_under(self.g, &perm);
                if self.best.as_ref().is_none_or(|(b, _)| enc < *b) {
                    self.best = Some((enc, perm));
                }
            }
            Some(t) => {
                // Vertices with twin neighborhoods are swapped by an
                // automorphism, so one branch per twin class suffices.
                let mut reps: Vec<usize> = Vec::new();
                'candidate: for &v in &cells[t] {
                    for &u in &reps {
                        if twins(self.g, u, v) {
                            continue 'candidate;
                        }
                    }
                    reps.push(v);
                }
                for &v in &reps {
                    let mut child = Vec::with_capacity(cells.len() + 1);
                    for (i, cell) in cells.iter().enumerate() {
                        if i == t {
                            child.push(vec![v]);
                            child.push(cell.iter().copied().filter(|&u| u != v).collect());
                        } else {
                            child.push(cell.clone());
                        }
                    }
                    self.descend(child);
                }
            }
        }
    }
}

/// Two same-colored vertices interchangeable by a transposition: equal open
/// neighborhoods, or adjacent with equal neighborhoods apart from each other.
fn twins(g: &ColoredGraph, u: usize, v: usize) -> bool {
    if g.color(u) != g.color(v) {
        return false;
    }
    let nu = g.neighbors(u);
    let nv = g.neighbors(v);
    if nu == nv {
        return true;
    }
    if !g.has_edge(u, v) {
        return false;
    }
    let nu2: Vec<usize> = nu.iter().copied().filter(|&x| x != v).collect();
    let nv2: Vec<usize> = nv.iter().copied().filter(|&x| x != u).collect();
    nu2 == nv2
}

/// Equitable refinement of an ordered partition. Each cell is split by the
/// per-vertex vector of neighbor counts in every current cell; fragments are
/// ordered by that signature, which keeps the cell order isomorphism
/// invariant.
fn refine(g: &ColoredGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v - 1] = i;
            }
        }
        let sig = |v: usize| -> Vec<usize> {
            let mut counts = vec![0usize; cells.len()];
            for &u in g.neighbors(v) {
                counts[cell_of[u - 1]] += 1;
            }
            counts
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> =
                std::collections::BTreeMap::new();
            for &v in cell {
                groups.entry(sig(v)).or_default().push(v);
            }
            if groups.len() > 1 {
                split = true;
            }
            next.extend(groups.into_values());
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn encode_cgraph_under(g: &ColoredGraph, perm: &[usize]) -> Vec<u8> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(8 + 4 * n);
    push_usize(&mut out, n);
    let mut colors = vec![0u32; n];
    for v in 1..=n {
        colors[perm[v - 1] - 1] = g.color(v);
    }
    for c in colors {
        out.extend_from_slice(&c.to_be_bytes());
    }
    let mut edges: Vec<(usize, usize)> = g
        .edge_list()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (perm[u - 1], perm[v - 1]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    push_usize(&mut out, edges.len());
    for (u, v) in edges {
        push_usize(&mut out, u);
        push_usize(&mut out, v);
    }
    out
}

fn push_usize(out: &mut Vec<u8>, x: usize) {
    out.extend_from_slice(&(x as u32).to_be_bytes());
}

/// Canonical byte encoding of a colored graph.
pub fn canonical_encoding_cgraph(g: &ColoredGraph) -> Vec<u8> {
    encode_cgraph_under(g, &canonical_labeling_cgraph(g))
}

/// The canonically relabeled copy of a colored graph.
pub fn canonical_form_cgraph(g: &ColoredGraph) -> ColoredGraph {
    g.relabel(&canonical_labeling_cgraph(g))
}

/// Canonical vertex relabeling of a hypergraph, derived from the canonical
/// labeling of its colored incidence graph.
pub fn canonical_labeling_hypergraph(g: &Hypergraph) -> Vec<usize> {
    let n = g.vertex_count();
    let inc = g.incidence_graph();
    let perm = canonical_labeling_cgraph(&inc);
    // Vertex nodes are 1..=n in the incidence graph; their relative canonical
    // positions give the vertex relabeling.
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| perm[v - 1]);
    let mut relabel = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        relabel[old - 1] = new + 1;
    }
    relabel
}

/// The canonical representative of a hypergraph's isomorphism type.
pub fn canonical_form_hypergraph(g: &Hypergraph) -> Hypergraph {
    g.relabel(&canonical_labeling_hypergraph(g)).with_sorted_edges()
}

/// Canonical byte encoding of a hypergraph: equal encodings iff isomorphic.
pub fn canonical_encoding_hypergraph(g: &Hypergraph) -> Vec<u8> {
    let canon = canonical_form_hypergraph(g);
    let mut out = Vec::new();
    push_usize(&mut out, canon.vertex_count());
    push_usize(&mut out, canon.edge_count());
    for edge in canon.edges() {
        push_usize(&mut out, edge.len());
        for &v in edge {
            push_usize(&mut out, v);
        }
    }
    out
}

/// Canonical form of a digraph by direct minimization over vertex
/// permutations. Intended for small orders only.
pub fn canonical_form_digraph(d: &Digraph) -> Digraph {
    let n = d.vertex_count();
    if n <= 1 {
        return d.clone();
    }
    (1..=n)
        .permutations(n)
        .map(|perm| d.relabel(&perm))
        .min()
        .expect("at least the identity permutation")
}

/// Canonical byte encoding of a digraph.
pub fn canonical_encoding_digraph(d: &Digraph) -> Vec<u8> {
    let canon = canonical_form_digraph(d);
    let mut out = Vec::new();
    push_usize(&mut out, canon.vertex_count());
    push_usize(&mut out, canon.arc_count());
    for &(u, v) in canon.arcs() {
        push_usize(&mut out, u);
        push_usize(&mut out, v);
    }
    out
}
