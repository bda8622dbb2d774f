//! Directed-graph tools: tensor products, transitive tournaments, digraph
//! homomorphism counting, membership in the classes distinguished by
//! tournament homomorphisms, and homomorphism-based separation of digraphs.

use crate::canon::canonical_encoding_digraph;
use crate::enumerate::{enum_dags_a3, Family};
use crate::hypergraph::Digraph;

/// Tensor product: vertex set is the pairs (numbered row-major), and
/// `((u,x),(v,y))` is an arc exactly when `(u,v)` and `(x,y)` both are.
pub fn tensor_product(g: &Digraph, h: &Digraph) -> Digraph {
    let n_h = h.vertex_count();
    let pair = |u: usize, x: usize| (u - 1) * n_h + x;
    let mut arcs = Vec::with_capacity(g.arc_count() * h.arc_count());
    for &(u, v) in g.arcs() {
        for &(x, y) in h.arcs() {
            arcs.push((pair(u, x), pair(v, y)));
        }
    }
    Digraph::new(g.vertex_count() * n_h, arcs).expect("tensor arcs are valid")
}

/// The transitive tournament: arcs `(i, j)` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let arcs = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    Digraph::new(n, arcs).expect("tournament arcs are valid")
}

/// Number of arc-preserving vertex maps from `f` to `g`.
pub fn count_dihom(f: &Digraph, g: &Digraph) -> u128 {
    let n_f = f.vertex_count();
    let n_g = g.vertex_count();
    if n_f == 0 {
        return 1;
    }
    if n_g == 0 {
        return 0;
    }
    // Backtracking in vertex order; an arc is checked once both endpoints
    // are assigned.
    let mut constraints: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n_f + 1];
    for &(u, v) in f.arcs() {
        if u.max(v) == u {
            constraints[u].push((v, false)); // v already assigned: arc (u, v)
        } else {
            constraints[v].push((u, true)); // arc (u, v) with u assigned
        }
    }
    fn go(
        depth: usize,
        n_f: usize,
        n_g: usize,
        g: &Digraph,
        constraints: &[Vec<(usize, bool)>],
        map: &mut Vec<usize>,
    ) -> u128 {
        if depth == n_f {
            return 1;
        }
        let v = depth + 1;
        let mut total = 0;
        'target: for w in 1..=n_g {
            for &(other, incoming) in &constraints[v] {
                let ow = map[other - 1];
                let ok = if other == v {
                    g.has_arc(w, w)
                } else if incoming {
                    g.has_arc(ow, w)
                } else {
                    g.has_arc(w, ow)
                };
                if !ok {
                    continue 'target;
                }
            }
            map[depth] = w;
            total += go(depth + 1, n_f, n_g, g, constraints, map);
        }
        total
    }
    let mut map = vec![0usize; n_f];
    go(0, n_f, n_g, g, &constraints, &mut map)
}

/// Membership in the class of digraphs with a homomorphism into the
/// transitive tournament on `n` vertices.
pub fn in_a_n(g: &Digraph, n: usize) -> bool {
    count_dihom(g, &transitive_tournament(n)) > 0
}

/// The equivalent walk characterization: acyclic (no loops, no directed
/// cycles) with every directed path at most `n - 1` arcs long.
pub fn in_a_n_via_paths(g: &Digraph, n: usize) -> bool {
    let order = g.vertex_count();
    // Longest-path DP over a topological order; bails out on any cycle.
    let mut indegree = vec![0usize; order + 1];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); order + 1];
    for &(u, v) in g.arcs() {
        if u == v {
            return false;
        }
        out[u].push(v);
        indegree[v] += 1;
    }
    let mut queue: Vec<usize> = (1..=order).filter(|&v| indegree[v] == 0).collect();
    let mut longest = vec![0usize; order + 1];
    let mut seen = 0;
    let mut max_path = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for &w in &out[v] {
            longest[w] = longest[w].max(longest[v] + 1);
            max_path = max_path.max(longest[w]);
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push(w);
            }
        }
    }
    seen == order && (max_path < n || (n == 0 && order == 0))
}

/// Checks `Hom(F, G x H) = Hom(F, G) * Hom(F, H)` by direct counting.
pub fn check_multiplicativity(f: &Digraph, g: &Digraph, h: &Digraph) -> bool {
    count_dihom(f, &tensor_product(g, h)) == count_dihom(f, g) * count_dihom(f, h)
}

pub fn is_digraph_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    canonical_encoding_digraph(g) == canonical_encoding_digraph(h)
}

/// Result of searching for a pattern with differing homomorphism counts.
#[derive(Debug, Clone)]
pub struct DigraphSeparation {
    pub isomorphic: bool,
    pub witness: Option<Digraph>,
    /// A witness for an isomorphic pair would be a contradiction; a missing
    /// witness for a non-isomorphic pair is only budget exhaustion.
    pub consistent: bool,
    pub budget_exhausted: bool,
}

/// Searches the patterns admitting a homomorphism into the 3-vertex
/// transitive tournament, on at most `max_pattern_v` vertices, for one that
/// separates `g` and `h` by homomorphism count.
pub fn distinguish_by_a3(g: &Digraph, h: &Digraph, max_pattern_v: usize) -> DigraphSeparation {
    distinguish_by_a3_with(g, h, &enum_dags_a3(max_pattern_v))
}

/// Same as [`distinguish_by_a3`], with a caller-supplied pattern family.
pub fn distinguish_by_a3_with(
    g: &Digraph,
    h: &Digraph,
    patterns: &Family<Digraph>,
) -> DigraphSeparation {
    let isomorphic = is_digraph_isomorphic(g, h);
    let witness = patterns
        .iter()
        .find(|f| count_dihom(f, g) != count_dihom(f, h))
        .cloned();
    let consistent = !(isomorphic && witness.is_some());
    let budget_exhausted = !isomorphic && witness.is_none();
    DigraphSeparation { isomorphic, witness, consistent, budget_exhausted }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_product_examples() {
        let arc = Digraph::new(2, vec![(1, 2)]).unwrap();
        let p = tensor_product(&arc, &arc);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.arc_count(), 1);

        let loop1 = Digraph::new(1, vec![(1, 1)]).unwrap();
        let t3 = transitive_tournament(3);
        assert!(is_digraph_isomorphic(&tensor_product(&t3, &loop1), &t3));

        let edgeless = Digraph::new(2, vec![]).unwrap();
        assert_eq!(tensor_product(&t3, &edgeless).arc_count(), 0);
    }

    #[test]
    fn tournament_examples() {
        assert_eq!(transitive_tournament(3).arcs(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(transitive_tournament(0).arc_count(), 0);
        assert_eq!(transitive_tournament(1).arc_count(), 0);
        for n in 0..=6 {
            assert_eq!(transitive_tournament(n).arc_count(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn dihom_examples() {
        let dot = Digraph::new(1, vec![]).unwrap();
        let t3 = transitive_tournament(3);
        assert_eq!(count_dihom(&dot, &t3), 3);

        let arc = Digraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(count_dihom(&arc, &t3), 3);

        let c3 = Digraph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(count_dihom(&c3, &t3), 0);
    }

    #[test]
    fn a_n_examples() {
        let t3 = transitive_tournament(3);
        assert!(in_a_n(&t3, 3));

        let p3 = Digraph::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!in_a_n(&p3, 3));
        assert!(in_a_n(&p3, 4));

        let looped = Digraph::new(2, vec![(1, 1), (1, 2)]).unwrap();
        for n in 0..=5 {
            assert!(!in_a_n(&looped, n));
            assert!(!in_a_n_via_paths(&looped, n));
        }
    }

    #[test]
    fn multiplicativity_examples() {
        let dot = Digraph::new(1, vec![]).unwrap();
        let g = Digraph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let h = Digraph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        assert!(check_multiplicativity(&dot, &g, &h));
        assert_eq!(count_dihom(&dot, &tensor_product(&g, &h)), 6);

        let arc = Digraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(
            count_dihom(&arc, &tensor_product(&g, &h)),
            (g.arc_count() * h.arc_count()) as u128
        );
    }

    #[test]
    fn separation_examples() {
        let arc = Digraph::new(2, vec![(1, 2)]).unwrap();
        let two = Digraph::new(2, vec![]).unwrap();
        let report = distinguish_by_a3(&arc, &two, 2);
        assert!(!report.isomorphic);
        assert!(report.consistent);
        let witness = report.witness.unwrap();
        assert!(is_digraph_isomorphic(&witness, &arc));

        let report = distinguish_by_a3(&arc, &arc, 2);
        assert!(report.isomorphic);
        assert!(report.consistent);
        assert!(report.witness.is_none());
    }
}
