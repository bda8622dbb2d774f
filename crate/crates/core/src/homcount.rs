//! Exact counting of mapping-pair species between hypergraphs.
//!
//! A mapping pair `(h_V, h_E)` consists of a total vertex map and a total
//! edge map. [`CountKind`] selects which predicates a pair must satisfy:
//! the base relation per edge (image equal to, or contained in, the target
//! edge), local injectivity/bijectivity of the per-edge restriction, the
//! strong-containment condition, global modes for `h_V` and `h_E`, the
//! merge-exactness condition, and the missed-vertices-are-leaves condition.
//!
//! Counting enumerates vertex maps by backtracking with per-edge pruning.
//! When the edge map is unconstrained the per-edge target choices are
//! independent and multiply; when the edge map must be bijective the valid
//! choices are the perfect matchings of the per-pair compatibility relation,
//! counted by backtracking.

use crate::canon::canonical_encoding_hypergraph;
use crate::hypergraph::{ColoredGraph, Hypergraph};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("this species requires a connected source")]
    DisconnectedSource,
    #[error("this operation requires a connected pattern")]
    DisconnectedPattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseRelation {
    /// Per edge: `h_V(e)` equals the target edge's vertex set.
    Homomorphism,
    /// Per edge: `h_V(e)` is contained in the target edge's vertex set.
    Inclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locality {
    None,
    /// The restriction of `h_V` to each edge is injective.
    Injective,
    /// The restriction of `h_V` to each edge is a bijection onto the target
    /// edge's vertex set.
    Bijective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexMapMode {
    Any,
    Injective,
    Surjective,
    Bijective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeMapMode {
    Any,
    Bijective,
}

/// A species of mapping pairs to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountKind {
    pub base: BaseRelation,
    pub locality: Locality,
    /// Preimages of the target edge that lie in the image of `h_V` must stay
    /// inside the source edge.
    pub strong: bool,
    pub hv_mode: VertexMapMode,
    pub he_mode: EdgeMapMode,
    /// `h_V` identifies exactly the classes of the walk-based merge relation.
    pub merge_exact: bool,
    /// Every target vertex missed by `h_V` is a leaf.
    pub leaves_only_missed: bool,
}

impl CountKind {
    const PLAIN: CountKind = CountKind {
        base: BaseRelation::Homomorphism,
        locality: Locality::None,
        strong: false,
        hv_mode: VertexMapMode::Any,
        he_mode: EdgeMapMode::Any,
        merge_exact: false,
        leaves_only_missed: false,
    };

    /// Homomorphisms: per-edge equality.
    pub fn hom() -> CountKind {
        CountKind::PLAIN
    }

    /// Incidence homomorphisms: per-edge equality relaxed to inclusion.
    pub fn inhom() -> CountKind {
        CountKind { base: BaseRelation::Inclusion, ..CountKind::PLAIN }
    }

    /// Locally injective incidence homomorphisms.
    pub fn lo_inj_inhom() -> CountKind {
        CountKind {
            base: BaseRelation::Inclusion,
            locality: Locality::Injective,
            ..CountKind::PLAIN
        }
    }

    /// Locally bijective incidence homomorphisms. These coincide with the
    /// locally injective homomorphisms counted by
    /// [`CountKind::lo_inj_hom_alt`].
    pub fn lo_inj_hom() -> CountKind {
        CountKind {
            base: BaseRelation::Inclusion,
            locality: Locality::Bijective,
            ..CountKind::PLAIN
        }
    }

    /// Locally injective homomorphisms; the alternative formulation of
    /// [`CountKind::lo_inj_hom`].
    pub fn lo_inj_hom_alt() -> CountKind {
        CountKind {
            base: BaseRelation::Homomorphism,
            locality: Locality::Injective,
            ..CountKind::PLAIN
        }
    }

    /// Locally merging homomorphisms: `h_V` surjective and identifying
    /// exactly the merge-relation classes, `h_E` bijective.
    pub fn lo_me_hom() -> CountKind {
        CountKind {
            base: BaseRelation::Homomorphism,
            hv_mode: VertexMapMode::Surjective,
            he_mode: EdgeMapMode::Bijective,
            merge_exact: true,
            ..CountKind::PLAIN
        }
    }

    /// Leaf-adding incidence homomorphisms: strong, `h_V` injective, `h_E`
    /// bijective, and every missed target vertex is a leaf.
    pub fn leaf_add_inhom() -> CountKind {
        CountKind {
            base: BaseRelation::Inclusion,
            strong: true,
            hv_mode: VertexMapMode::Injective,
            he_mode: EdgeMapMode::Bijective,
            leaves_only_missed: true,
            ..CountKind::PLAIN
        }
    }

    /// Automorphism pairs: both maps bijective, per-edge equality.
    pub fn aut() -> CountKind {
        CountKind {
            hv_mode: VertexMapMode::Bijective,
            he_mode: EdgeMapMode::Bijective,
            ..CountKind::PLAIN
        }
    }

    /// Species defined only for connected sources.
    pub fn requires_connected_source(&self) -> bool {
        self.merge_exact
            || self.strong
            || self.leaves_only_missed
            || self.locality != Locality::None
    }
}

/// A concrete mapping pair; both maps are total and 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingPair {
    pub hv: Vec<usize>,
    pub he: Vec<usize>,
}

/// Counts the mapping pairs of the given species from `f` to `g`.
pub fn count(kind: CountKind, f: &Hypergraph, g: &Hypergraph) -> Result<BigUint, CountError> {
    Ok(BigUint::from(count_with_pin(kind, f, g, None)?))
}

/// Counts pairs with `h_V(pin.0) = pin.1` fixed, when a pin is given.
/// Counts never overflow `u128` at the instance sizes this crate enumerates.
pub fn count_with_pin(
    kind: CountKind,
    f: &Hypergraph,
    g: &Hypergraph,
    pin: Option<(usize, usize)>,
) -> Result<u128, CountError> {
    if kind.requires_connected_source() && !f.is_connected() {
        return Err(CountError::DisconnectedSource);
    }
    if kind.he_mode == EdgeMapMode::Bijective && f.edge_count() != g.edge_count() {
        return Ok(0);
    }
    match kind.hv_mode {
        VertexMapMode::Injective if f.vertex_count() > g.vertex_count() => return Ok(0),
        VertexMapMode::Surjective if f.vertex_count() < g.vertex_count() => return Ok(0),
        VertexMapMode::Bijective if f.vertex_count() != g.vertex_count() => return Ok(0),
        _ => {}
    }
    let ctx = Ctx::new(kind, f, g, pin);
    let mut state = State {
        hv: vec![0usize; f.vertex_count()],
        used: vec![false; g.vertex_count() + 1],
        total: 0,
    };
    ctx.assign(0, &mut state);
    Ok(state.total)
}

struct Ctx<'a> {
    kind: CountKind,
    f: &'a Hypergraph,
    g: &'a Hypergraph,
    pin: Option<(usize, usize)>,
    /// Edges of `f` containing `v`, by vertex.
    edges_with: Vec<Vec<usize>>,
    /// Leaves of `g` (degree exactly one, multiplicity counted).
    g_leaf: Vec<bool>,
}

struct State {
    hv: Vec<usize>,
    used: Vec<bool>,
    total: u128,
}

impl<'a> Ctx<'a> {
    fn new(kind: CountKind, f: &'a Hypergraph, g: &'a Hypergraph, pin: Option<(usize, usize)>) -> Self {
        let mut edges_with = vec![Vec::new(); f.vertex_count() + 1];
        for (j, edge) in f.edges().iter().enumerate() {
            for &v in edge {
                edges_with[v].push(j);
            }
        }
        let g_leaf = (0..=g.vertex_count())
            .map(|v| v >= 1 && g.degree(v) == 1)
            .collect();
        Ctx { kind, f, g, pin, edges_with, g_leaf }
    }

    /// Image of `f`'s edge `j` under a full or sufficiently assigned map,
    /// as a sorted deduplicated set, plus the raw image size for locality.
    fn edge_image(&self, j: usize, hv: &[usize]) -> (Vec<usize>, bool) {
        let edge = self.f.edge(j);
        let mut image: Vec<usize> = edge.iter().map(|&v| hv[v - 1]).collect();
        image.sort_unstable();
        image.dedup();
        let locally_injective = image.len() == edge.len();
        (image, locally_injective)
    }

    /// Whether target edge `d` is acceptable for source edge `j` given the
    /// (full) vertex map. `image` is the sorted set image of edge `j`.
    fn edge_compatible(
        &self,
        j: usize,
        image: &[usize],
        locally_injective: bool,
        d: usize,
        hv: &[usize],
    ) -> bool {
        if !self.edge_feasible(image, locally_injective, d) {
            return false;
        }
        if self.kind.strong {
            // h_V^{-1}(target ∩ im h_V) must lie inside the source edge.
            let target = self.g.edge(d);
            let source = self.f.edge(j);
            for v in 1..=self.f.vertex_count() {
                if target.binary_search(&hv[v - 1]).is_ok() && source.binary_search(&v).is_err() {
                    return false;
                }
            }
        }
        true
    }

    /// The per-edge test minus the strong condition (which needs the full
    /// image); also serves as the relaxed prune while the map is partial.
    fn edge_feasible(&self, image: &[usize], locally_injective: bool, d: usize) -> bool {
        let target = self.g.edge(d);
        match self.kind.base {
            BaseRelation::Homomorphism => {
                if image != target {
                    return false;
                }
            }
            BaseRelation::Inclusion => {
                if !subset_of(image, target) {
                    return false;
                }
            }
        }
        match self.kind.locality {
            Locality::None => {}
            Locality::Injective => {
                if !locally_injective {
                    return false;
                }
            }
            Locality::Bijective => {
                if !locally_injective || image.len() != target.len() {
                    return false;
                }
            }
        }
        true
    }

    /// Prune check for every edge touched by the newest assignment: the
    /// partial image must extend to some target edge, and must already be
    /// injective when a local injectivity condition applies. Completed edges
    /// get the exact per-edge test (minus the strong condition, which needs
    /// the full image).
    fn touched_edges_feasible(&self, v: usize, hv: &[usize]) -> bool {
        self.edges_with[v].iter().all(|&j| {
            let edge = self.f.edge(j);
            let mut image: Vec<usize> =
                edge.iter().take_while(|&&x| x <= v).map(|&x| hv[x - 1]).collect();
            let assigned = image.len();
            image.sort_unstable();
            image.dedup();
            let locally_injective = image.len() == assigned;
            if self.kind.locality != Locality::None && !locally_injective {
                return false;
            }
            if *edge.last().expect("edges are non-empty") == v {
                (0..self.g.edge_count()).any(|d| self.edge_feasible(&image, locally_injective, d))
            } else {
                // Partial: containment in some target edge is necessary for
                // both base relations.
                (0..self.g.edge_count()).any(|d| subset_of(&image, self.g.edge(d)))
            }
        })
    }

    fn assign(&self, depth: usize, state: &mut State) {
        let n_f = self.f.vertex_count();
        if depth == n_f {
            self.finish(state);
            return;
        }
        let v = depth + 1;
        let n_g = self.g.vertex_count();
        for w in 1..=n_g {
            if let Some((pv, pw)) = self.pin {
                if v == pv && w != pw {
                    continue;
                }
            }
            if matches!(self.kind.hv_mode, VertexMapMode::Injective | VertexMapMode::Bijective)
                && state.used[w]
            {
                continue;
            }
            state.hv[depth] = w;
            if self.touched_edges_feasible(v, &state.hv) {
                // Surjectivity prune: remaining assignments must cover the
                // still-missing targets.
                let feasible = if self.kind.hv_mode == VertexMapMode::Surjective {
                    let was_used = state.used[w];
                    let assigned_distinct =
                        state.used.iter().filter(|&&u| u).count() + usize::from(!was_used);
                    let missing = n_g - assigned_distinct;
                    missing <= n_f - (depth + 1)
                } else {
                    true
                };
                if feasible {
                    let prev_used = state.used[w];
                    state.used[w] = true;
                    self.assign(depth + 1, state);
                    state.used[w] = prev_used;
                }
            }
        }
        state.hv[depth] = 0;
    }

    fn finish(&self, state: &mut State) {
        let hv = &state.hv;
        if matches!(self.kind.hv_mode, VertexMapMode::Surjective | VertexMapMode::Bijective)
            && (1..=self.g.vertex_count()).any(|w| !state.used[w])
        {
            return;
        }
        if self.kind.leaves_only_missed {
            for w in 1..=self.g.vertex_count() {
                if !state.used[w] && !self.g_leaf[w] {
                    return;
                }
            }
        }
        if self.kind.merge_exact {
            let classes = self
                .f
                .merge_relation(self.g, hv)
                .expect("map is total and in range");
            let mut class_of = vec![0usize; self.f.vertex_count()];
            for (id, class) in classes.iter().enumerate() {
                for &v in class {
                    class_of[v - 1] = id;
                }
            }
            // Equal images must imply equal merge classes (the converse holds
            // by construction of the relation).
            for u in 1..=self.f.vertex_count() {
                for v in u + 1..=self.f.vertex_count() {
                    if hv[u - 1] == hv[v - 1] && class_of[u - 1] != class_of[v - 1] {
                        return;
                    }
                }
            }
        }
        let m_f = self.f.edge_count();
        let m_g = self.g.edge_count();
        let images: Vec<(Vec<usize>, bool)> =
            (0..m_f).map(|j| self.edge_image(j, hv)).collect();
        match self.kind.he_mode {
            EdgeMapMode::Any => {
                let mut multiplier: u128 = 1;
                for (j, (image, li)) in images.iter().enumerate() {
                    let choices = (0..m_g)
                        .filter(|&d| self.edge_compatible(j, image, *li, d, hv))
                        .count() as u128;
                    if choices == 0 {
                        return;
                    }
                    multiplier *= choices;
                }
                state.total += multiplier;
            }
            EdgeMapMode::Bijective => {
                let compat: Vec<Vec<usize>> = images
                    .iter()
                    .enumerate()
                    .map(|(j, (image, li))| {
                        (0..m_g)
                            .filter(|&d| self.edge_compatible(j, image, *li, d, hv))
                            .collect()
                    })
                    .collect();
                state.total += count_perfect_matchings(&compat, m_g);
            }
        }
    }
}

fn subset_of(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn count_perfect_matchings(compat: &[Vec<usize>], m: usize) -> u128 {
    fn go(compat: &[Vec<usize>], j: usize, used: &mut [bool]) -> u128 {
        if j == compat.len() {
            return 1;
        }
        let mut total = 0;
        for &d in &compat[j] {
            if !used[d] {
                used[d] = true;
                total += go(compat, j + 1, used);
                used[d] = false;
            }
        }
        total
    }
    if compat.len() != m {
        return 0;
    }
    let mut used = vec![false; m];
    go(compat, 0, &mut used)
}

/// Number of automorphism pairs of `g`; always at least one.
pub fn count_aut(g: &Hypergraph) -> BigUint {
    count(CountKind::aut(), g, g).expect("automorphisms have no connectivity precondition")
}

/// Isomorphism test via canonical encodings.
pub fn is_isomorphic(g: &Hypergraph, h: &Hypergraph) -> bool {
    canonical_encoding_hypergraph(g) == canonical_encoding_hypergraph(h)
}

/// Counts color- and adjacency-preserving vertex maps from a connected
/// colored graph `t` into `g`. Uses a dynamic program over a spanning
/// arborescence when `t` is a tree, and exhaustive enumeration otherwise.
pub fn count_hom_cgraph(t: &ColoredGraph, g: &ColoredGraph) -> Result<BigUint, CountError> {
    if !t.is_connected() {
        return Err(CountError::DisconnectedPattern);
    }
    if t.is_tree() {
        Ok(BigUint::from(tree_hom_count(t, g)))
    } else {
        Ok(BigUint::from(count_hom_cgraph_bruteforce(t, g)))
    }
}

/// Exhaustive map enumeration; the oracle the tree dynamic program is
/// checked against.
pub fn count_hom_cgraph_bruteforce(t: &ColoredGraph, g: &ColoredGraph) -> u128 {
    let n_t = t.vertex_count();
    let n_g = g.vertex_count();
    if n_t == 0 {
        return 1;
    }
    if n_g == 0 {
        return 0;
    }
    let mut map = vec![1usize; n_t];
    let mut total = 0u128;
    'outer: loop {
        let ok = (1..=n_t).all(|v| t.color(v) == g.color(map[v - 1]))
            && t
                .edge_list()
                .iter()
                .all(|&(u, v)| g.has_edge(map[u - 1], map[v - 1]));
        if ok {
            total += 1;
        }
        for slot in map.iter_mut() {
            if *slot < n_g {
                *slot += 1;
                continue 'outer;
            }
            *slot = 1;
        }
        return total;
    }
}

fn tree_hom_count(t: &ColoredGraph, g: &ColoredGraph) -> u128 {
    let n_t = t.vertex_count();
    let n_g = g.vertex_count();
    if n_g == 0 {
        return if n_t == 0 { 1 } else { 0 };
    }
    // Root at vertex 1; compute children and a postorder.
    let root = 1usize;
    let mut parent = vec![0usize; n_t + 1];
    let mut order = Vec::with_capacity(n_t);
    let mut stack = vec![root];
    let mut seen = vec![false; n_t + 1];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    // dp[v][w]: maps of the subtree at v with v -> w.
    let mut dp = vec![vec![0u128; n_g + 1]; n_t + 1];
    for &v in order.iter().rev() {
        for w in 1..=n_g {
            if t.color(v) != g.color(w) {
                continue;
            }
            let mut product: u128 = 1;
            for &c in t.neighbors(v) {
                if c == parent[v] {
                    continue;
                }
                let sum: u128 = g.neighbors(w).iter().map(|&x| dp[c][x]).sum();
                if sum == 0 {
                    product = 0;
                    break;
                }
                product *= sum;
            }
            dp[v][w] = product;
        }
    }
    (1..=n_g).map(|w| dp[root][w]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edge_example() -> Hypergraph {
        Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3]]).unwrap()
    }

    fn n(x: u32) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn inhom_of_single_vertex_counts_vertices() {
        let k1 = Hypergraph::single_vertex();
        let g = two_edge_example();
        assert_eq!(count(CountKind::inhom(), &k1, &g).unwrap(), n(3));
    }

    #[test]
    fn inhom_single_edge_matches_size_power_sums() {
        let g = two_edge_example();
        // One size-2 and one size-3 edge: sum of i^k over edge sizes i.
        let expected = [5u32, 13, 35];
        for k in 1..=3usize {
            let bk = Hypergraph::single_edge(k).unwrap();
            let direct: u64 = g.edges().iter().map(|e| (e.len() as u64).pow(k as u32)).sum();
            assert_eq!(u64::from(expected[k - 1]), direct);
            assert_eq!(count(CountKind::inhom(), &bk, &g).unwrap(), n(expected[k - 1]));
        }
    }

    #[test]
    fn hom_counts_on_running_example() {
        let g = two_edge_example();
        let b1 = Hypergraph::single_edge(1).unwrap();
        let b2 = Hypergraph::single_edge(2).unwrap();
        assert_eq!(count(CountKind::hom(), &b2, &g).unwrap(), n(2));
        assert_eq!(count(CountKind::hom(), &b1, &g).unwrap(), n(0));
    }

    #[test]
    fn local_species_on_running_example() {
        let g = two_edge_example();
        let b2 = Hypergraph::single_edge(2).unwrap();
        let b3 = Hypergraph::single_edge(3).unwrap();
        let b1 = Hypergraph::single_edge(1).unwrap();
        assert_eq!(count(CountKind::lo_inj_inhom(), &b2, &g).unwrap(), n(8));
        assert_eq!(count(CountKind::lo_inj_hom(), &b3, &g).unwrap(), n(6));
        assert_eq!(count(CountKind::lo_me_hom(), &b2, &b1).unwrap(), n(1));
    }

    #[test]
    fn aut_counts() {
        let g = two_edge_example();
        assert_eq!(count_aut(&g), n(2));
        for (k, expected) in [(1usize, 1u32), (2, 2), (3, 6)] {
            let bk = Hypergraph::single_edge(k).unwrap();
            assert_eq!(count_aut(&bk), n(expected));
        }
        let loops = Hypergraph::new(1, vec![vec![1], vec![1]]).unwrap();
        assert_eq!(count_aut(&loops), n(2));
        assert_eq!(count_aut(&Hypergraph::single_vertex()), n(1));
    }

    #[test]
    fn species_diagonals_match_aut() {
        for g in [
            two_edge_example(),
            Hypergraph::single_edge(3).unwrap(),
            Hypergraph::new(1, vec![vec![1], vec![1]]).unwrap(),
            Hypergraph::new(2, vec![vec![1], vec![1, 2]]).unwrap(),
        ] {
            let aut = count_aut(&g);
            assert_eq!(count(CountKind::lo_me_hom(), &g, &g).unwrap(), aut);
            assert_eq!(count(CountKind::leaf_add_inhom(), &g, &g).unwrap(), aut);
        }
    }

    #[test]
    fn leaf_add_examples() {
        let b2 = Hypergraph::single_edge(2).unwrap();
        let b3 = Hypergraph::single_edge(3).unwrap();
        let b1 = Hypergraph::single_edge(1).unwrap();
        assert_eq!(count(CountKind::leaf_add_inhom(), &b2, &b3).unwrap(), n(6));
        assert_eq!(count(CountKind::leaf_add_inhom(), &b2, &b1).unwrap(), n(0));
        // An injective vertex map cannot shrink the vertex set.
        assert_eq!(count(CountKind::leaf_add_inhom(), &b3, &b2).unwrap(), n(0));
        // A surjective vertex map cannot grow it.
        assert_eq!(count(CountKind::lo_me_hom(), &b1, &b2).unwrap(), n(0));
    }

    #[test]
    fn connectivity_is_enforced_for_local_species() {
        let disconnected = Hypergraph::new(2, vec![vec![1], vec![2]]).unwrap();
        let g = two_edge_example();
        assert_eq!(
            count(CountKind::lo_inj_inhom(), &disconnected, &g),
            Err(CountError::DisconnectedSource)
        );
        // Plain species accept disconnected sources and count directly.
        assert!(count(CountKind::inhom(), &disconnected, &g).is_ok());
    }

    #[test]
    fn lo_inj_hom_formulations_agree() {
        let g = two_edge_example();
        for k in 1..=3usize {
            let bk = Hypergraph::single_edge(k).unwrap();
            assert_eq!(
                count(CountKind::lo_inj_hom(), &bk, &g).unwrap(),
                count(CountKind::lo_inj_hom_alt(), &bk, &g).unwrap()
            );
        }
    }

    #[test]
    fn is_isomorphic_examples() {
        let g = two_edge_example();
        assert!(is_isomorphic(&g, &g));
        let b2 = Hypergraph::single_edge(2).unwrap();
        let b3 = Hypergraph::single_edge(3).unwrap();
        assert!(!is_isomorphic(&b2, &b3));
        let a = Hypergraph::new(2, vec![vec![1], vec![1, 2]]).unwrap();
        let b = Hypergraph::new(2, vec![vec![2], vec![1, 2]]).unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn cgraph_hom_counts() {
        let g = two_edge_example();
        let inc = g.incidence_graph();

        let dot = ColoredGraph::new(1, vec![1], &[]).unwrap();
        assert_eq!(count_hom_cgraph(&dot, &inc).unwrap(), n(3));

        let b1 = Hypergraph::single_edge(1).unwrap();
        assert_eq!(count_hom_cgraph(&b1.incidence_graph(), &inc).unwrap(), n(5));
        assert_eq!(
            count_hom_cgraph(&b1.incidence_graph(), &inc).unwrap(),
            count(CountKind::inhom(), &b1, &g).unwrap()
        );

        // An edge between equal colors cannot map into a properly 2-colored
        // target.
        let t = ColoredGraph::new(2, vec![1, 1], &[(1, 2)]).unwrap();
        assert_eq!(count_hom_cgraph(&t, &inc).unwrap(), n(0));

        let disconnected = ColoredGraph::new(2, vec![1, 1], &[]).unwrap();
        assert!(count_hom_cgraph(&disconnected, &inc).is_err());
    }

    #[test]
    fn pinned_counts_partition_totals() {
        let g = two_edge_example();
        let b1 = Hypergraph::single_edge(1).unwrap();
        let total: u128 = (1..=3)
            .map(|w| count_with_pin(CountKind::inhom(), &b1, &g, Some((1, w))).unwrap())
            .sum();
        assert_eq!(BigUint::from(total), count(CountKind::inhom(), &b1, &g).unwrap());
    }
}
