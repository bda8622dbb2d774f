//! Independent test oracles: literal translations of the species predicates,
//! evaluated over every pair of total maps with no pruning or factoring.
//! Deliberately naive so that failures implicate the optimized kernel.

use hypercr::homcount::{BaseRelation, CountKind, EdgeMapMode, Locality, VertexMapMode};
use hypercr::hypergraph::Hypergraph;

/// Counts mapping pairs by enumerating every `h_V` and every `h_E` and
/// checking the selected predicates directly against their definitions.
pub fn naive_count(kind: CountKind, f: &Hypergraph, g: &Hypergraph) -> u128 {
    let n_f = f.vertex_count();
    let n_g = g.vertex_count();
    let m_f = f.edge_count();
    let m_g = g.edge_count();
    let mut total = 0u128;
    for hv in all_maps(n_f, n_g) {
        for he in all_maps(m_f, m_g) {
            if pair_satisfies(kind, f, g, &hv, &he) {
                total += 1;
            }
        }
    }
    total
}

fn all_maps(domain: usize, codomain: usize) -> Vec<Vec<usize>> {
    if domain == 0 {
        return vec![Vec::new()];
    }
    if codomain == 0 {
        return Vec::new();
    }
    let mut maps = vec![vec![1usize; domain]];
    let mut out = Vec::new();
    while let Some(map) = maps.pop() {
        out.push(map.clone());
        // Odometer successor.
        let mut next = map;
        let mut i = 0;
        loop {
            if i == domain {
                return out;
            }
            if next[i] < codomain {
                next[i] += 1;
                break;
            }
            next[i] = 1;
            i += 1;
        }
        maps.push(next);
    }
    out
}

fn image_set(edge: &[usize], hv: &[usize]) -> Vec<usize> {
    let mut image: Vec<usize> = edge.iter().map(|&v| hv[v - 1]).collect();
    image.sort_unstable();
    image.dedup();
    image
}

fn pair_satisfies(
    kind: CountKind,
    f: &Hypergraph,
    g: &Hypergraph,
    hv: &[usize],
    he: &[usize],
) -> bool {
    for (j, edge) in f.edges().iter().enumerate() {
        let target = g.edge(he[j] - 1);
        let image = image_set(edge, hv);
        match kind.base {
            BaseRelation::Homomorphism => {
                if image != target {
                    return false;
                }
            }
            BaseRelation::Inclusion => {
                if !image.iter().all(|x| target.binary_search(x).is_ok()) {
                    return false;
                }
            }
        }
        match kind.locality {
            Locality::None => {}
            Locality::Injective => {
                if image.len() != edge.len() {
                    return false;
                }
            }
            Locality::Bijective => {
                if image.len() != edge.len() || image != target {
                    return false;
                }
            }
        }
        if kind.strong {
            for x in 1..=f.vertex_count() {
                if target.binary_search(&hv[x - 1]).is_ok() && edge.binary_search(&x).is_err() {
                    return false;
                }
            }
        }
    }
    match kind.hv_mode {
        VertexMapMode::Any => {}
        VertexMapMode::Injective => {
            if !is_injective(hv) {
                return false;
            }
        }
        VertexMapMode::Surjective => {
            if !is_surjective(hv, g.vertex_count()) {
                return false;
            }
        }
        VertexMapMode::Bijective => {
            if !is_injective(hv) || !is_surjective(hv, g.vertex_count()) {
                return false;
            }
        }
    }
    if kind.he_mode == EdgeMapMode::Bijective
        && !(is_injective(he) && is_surjective(he, g.edge_count()))
    {
        return false;
    }
    if kind.merge_exact && !merge_relation_is_exact(f, hv) {
        return false;
    }
    if kind.leaves_only_missed {
        for w in 1..=g.vertex_count() {
            if !hv.contains(&w) && g.degree(w) != 1 {
                return false;
            }
        }
    }
    true
}

fn is_injective(map: &[usize]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    map.iter().all(|&x| seen.insert(x))
}

fn is_surjective(map: &[usize], codomain: usize) -> bool {
    (1..=codomain).all(|w| map.contains(&w))
}

/// `h_V(u) = h_V(v)` exactly when `u` and `v` are joined by a walk whose
/// consecutive vertices share an edge and have equal images.
fn merge_relation_is_exact(f: &Hypergraph, hv: &[usize]) -> bool {
    let n = f.vertex_count();
    // Reachability closure of the one-step relation.
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for edge in f.edges() {
        for &u in edge {
            for &v in edge {
                if hv[u - 1] == hv[v - 1] {
                    reach[u - 1][v - 1] = true;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            if (hv[u] == hv[v]) != reach[u][v] {
                return false;
            }
        }
    }
    true
}
