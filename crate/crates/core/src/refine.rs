//! Color refinement on vertex-colored graphs and on hypergraphs, and the
//! distinguishing test between two structures.
//!
//! Colors are nested multisets. They are represented exactly, without
//! hashing, by interning every multiset in a [`ColorArena`]: two color ids
//! from the same arena are equal exactly when the nested multisets are equal.
//! Refinements that must be compared (the two sides of a distinguishing
//! test) therefore share one arena.
//!
//! One refinement round on a hypergraph collects, per edge incident to a
//! vertex, the multiset of the edge members' previous colors; the new color
//! is the multiset of those edge colors. On a colored graph a round collects
//! the multiset of neighbor colors, optionally prefixed by the vertex's own
//! previous color.

use crate::hypergraph::{ColoredGraph, Hypergraph};
use std::collections::BTreeMap;

/// Interned color: equal ids in one arena mean equal nested multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId(u32);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum ColorNode {
    /// An initial integer color.
    Base(u32),
    /// A multiset of colors, with an optional "own color" prefix. The member
    /// list is sorted by id, which is canonical within one arena.
    Multiset(Option<ColorId>, Vec<ColorId>),
}

/// Structural interner for nested multiset colors.
#[derive(Debug, Default)]
pub struct ColorArena {
    nodes: Vec<ColorNode>,
    index: BTreeMap<ColorNode, ColorId>,
}

impl ColorArena {
    pub fn new() -> Self {
        ColorArena::default()
    }

    fn intern(&mut self, node: ColorNode) -> ColorId {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = ColorId(self.nodes.len() as u32);
        self.nodes.push(node.clone());
        self.index.insert(node, id);
        id
    }

    pub fn base(&mut self, color: u32) -> ColorId {
        self.intern(ColorNode::Base(color))
    }

    pub fn multiset(&mut self, mut members: Vec<ColorId>) -> ColorId {
        members.sort_unstable();
        self.intern(ColorNode::Multiset(None, members))
    }

    pub fn multiset_with_own(&mut self, own: ColorId, mut members: Vec<ColorId>) -> ColorId {
        members.sort_unstable();
        self.intern(ColorNode::Multiset(Some(own), members))
    }

    /// Renders the nested multiset as a string, e.g. `{{1,1},{1,1,1}}`.
    /// Members are printed in lexicographic order of their rendering.
    pub fn render(&self, id: ColorId) -> String {
        match &self.nodes[id.0 as usize] {
            ColorNode::Base(c) => c.to_string(),
            ColorNode::Multiset(own, members) => {
                let mut parts: Vec<String> = members.iter().map(|&m| self.render(m)).collect();
                parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                let body = format!("{{{}}}", parts.join(","));
                match own {
                    Some(o) => format!("({};{})", self.render(*o), body),
                    None => body,
                }
            }
        }
    }
}

/// The rounds of one refinement run. `rounds[i][v-1]` is the color of vertex
/// `v` after `i` rounds; `histograms[i]` is the multiset of round-`i` colors.
#[derive(Debug, Clone)]
pub struct ColorHistory {
    rounds: Vec<Vec<ColorId>>,
    histograms: Vec<BTreeMap<ColorId, usize>>,
    stable_round: Option<usize>,
}

impl ColorHistory {
    pub fn rounds(&self) -> &[Vec<ColorId>] {
        &self.rounds
    }

    pub fn round(&self, i: usize) -> &[ColorId] {
        &self.rounds[i]
    }

    pub fn histograms(&self) -> &[BTreeMap<ColorId, usize>] {
        &self.histograms
    }

    /// First index `i` with partition(round i) = partition(round i+1), if
    /// stabilization happened within the round budget.
    pub fn stable_round(&self) -> Option<usize> {
        self.stable_round
    }

    /// The partition induced by round `i`, as class indices in first-seen
    /// order. Comparable across histories even when the color ids differ.
    pub fn partition(&self, i: usize) -> Vec<usize> {
        partition_classes(&self.rounds[i])
    }

    fn from_rounds(rounds: Vec<Vec<ColorId>>) -> Self {
        let histograms = rounds.iter().map(|r| histogram(r)).collect();
        let stable_round = rounds
            .windows(2)
            .position(|w| partition_classes(&w[0]) == partition_classes(&w[1]));
        ColorHistory { rounds, histograms, stable_round }
    }
}

fn histogram(colors: &[ColorId]) -> BTreeMap<ColorId, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Class indices in first-seen order; equal vectors iff equal partitions.
pub fn partition_classes(colors: &[ColorId]) -> Vec<usize> {
    let mut ids: BTreeMap<ColorId, usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(colors.len());
    for &c in colors {
        let next = ids.len();
        out.push(*ids.entry(c).or_insert(next));
    }
    out
}

fn run_rounds<F>(arena: &mut ColorArena, n: usize, max_rounds: usize, step: F) -> ColorHistory
where
    F: Fn(&mut ColorArena, &[ColorId]) -> Vec<ColorId>,
{
    let init = arena.base(1);
    let mut rounds = vec![vec![init; n]];
    for _ in 0..max_rounds {
        let next = step(arena, rounds.last().expect("at least round 0"));
        let stabilized =
            partition_classes(&next) == partition_classes(rounds.last().expect("nonempty"));
        rounds.push(next);
        if stabilized {
            break;
        }
    }
    ColorHistory::from_rounds(rounds)
}

/// Color refinement on a vertex-colored graph. Round 0 uses the graph's own
/// colors; each later round is the multiset of neighbor colors, prefixed by
/// the vertex's previous color when `include_own_color` is set. Stops after
/// the partition stabilizes or after `max_rounds` new rounds.
pub fn cr_graph(
    arena: &mut ColorArena,
    g: &ColoredGraph,
    max_rounds: usize,
    include_own_color: bool,
) -> ColorHistory {
    let n = g.vertex_count();
    let init: Vec<ColorId> = (1..=n).map(|v| arena.base(g.color(v))).collect();
    let mut rounds = vec![init];
    for _ in 0..max_rounds {
        let prev = rounds.last().expect("at least round 0");
        let next: Vec<ColorId> = (1..=n)
            .map(|v| {
                let members: Vec<ColorId> =
                    g.neighbors(v).iter().map(|&u| prev[u - 1]).collect();
                if include_own_color {
                    arena.multiset_with_own(prev[v - 1], members)
                } else {
                    arena.multiset(members)
                }
            })
            .collect();
        let stabilized = partition_classes(&next) == partition_classes(prev);
        rounds.push(next);
        if stabilized {
            break;
        }
    }
    ColorHistory::from_rounds(rounds)
}

/// Hypergraph color refinement. Round 0 is constant; the round `i+1` color
/// of `v` is the multiset, over edges containing `v`, of the multiset of the
/// edge members' round-`i` colors (`v` included).
pub fn cr_hypergraph(arena: &mut ColorArena, g: &Hypergraph, max_rounds: usize) -> ColorHistory {
    run_rounds(arena, g.vertex_count(), max_rounds, |arena, prev| {
        (1..=g.vertex_count())
            .map(|v| {
                let incident: Vec<ColorId> = g
                    .edges()
                    .iter()
                    .filter(|e| e.binary_search(&v).is_ok())
                    .map(|e| {
                        let members: Vec<ColorId> =
                            e.iter().map(|&u| prev[u - 1]).collect();
                        arena.multiset(members)
                    })
                    .collect();
                arena.multiset(incident)
            })
            .collect()
    })
}

/// Outcome of a distinguishing test: `round` is the least round at which the
/// color histograms differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistinguishResult {
    pub distinguished: bool,
    pub round: Option<usize>,
}

/// The default round budget for comparing two structures on `n` and `m`
/// vertices.
pub fn default_round_budget(n: usize, m: usize) -> usize {
    n.max(m) + 1
}

fn compare_histories(a: &ColorHistory, b: &ColorHistory) -> DistinguishResult {
    let rounds = a.rounds().len().max(b.rounds().len());
    for i in 0..rounds {
        // Once a side stabilizes, its histogram sequence repeats the shape of
        // the stable round; colors keep evolving, so compare at the last
        // computed round only to the other side's same round when present.
        let ha = a.histograms().get(i);
        let hb = b.histograms().get(i);
        match (ha, hb) {
            (Some(x), Some(y)) => {
                if x != y {
                    return DistinguishResult { distinguished: true, round: Some(i) };
                }
            }
            // One side ran out of rounds: it stabilized earlier, and because
            // all compared rounds so far were balanced, the joint partition
            // has stabilized as well (see `distinguish_joint`).
            _ => break,
        }
    }
    DistinguishResult { distinguished: false, round: None }
}

/// Runs two refinements in one arena and compares the histograms round by
/// round. Stops at the first differing round, or once the joint partition of
/// both vertex sets stabilizes (stable balanced colorings stay balanced, so
/// later rounds cannot differ). A strictly refining joint partition always
/// stabilizes within `n_a + n_b` rounds, so the cap is a safety net only.
fn distinguish_joint<S>(cap: usize, mut step: S) -> DistinguishResult
where
    S: FnMut(usize, &[ColorId], &[ColorId]) -> (Vec<ColorId>, Vec<ColorId>),
{
    let mut cur_a: Vec<ColorId> = Vec::new();
    let mut cur_b: Vec<ColorId> = Vec::new();
    let mut joint_prev: Option<Vec<usize>> = None;
    for i in 0..=cap {
        let (next_a, next_b) = step(i, &cur_a, &cur_b);
        cur_a = next_a;
        cur_b = next_b;
        if histogram(&cur_a) != histogram(&cur_b) {
            return DistinguishResult { distinguished: true, round: Some(i) };
        }
        let mut joint = cur_a.clone();
        joint.extend_from_slice(&cur_b);
        let classes = partition_classes(&joint);
        if joint_prev.as_ref() == Some(&classes) {
            return DistinguishResult { distinguished: false, round: None };
        }
        joint_prev = Some(classes);
    }
    DistinguishResult { distinguished: false, round: None }
}

/// Whether color refinement distinguishes two hypergraphs, with the least
/// differing round. Stops at joint stabilization, which is sound: a stable
/// balanced pair of colorings stays balanced in every later round.
pub fn distinguishes_hypergraphs(g: &Hypergraph, h: &Hypergraph) -> DistinguishResult {
    distinguishes_hypergraphs_bounded(g, h, g.vertex_count() + h.vertex_count() + 2)
}

/// As [`distinguishes_hypergraphs`], with an explicit round budget.
pub fn distinguishes_hypergraphs_bounded(
    g: &Hypergraph,
    h: &Hypergraph,
    max_rounds: usize,
) -> DistinguishResult {
    let mut arena = ColorArena::new();
    distinguish_joint(max_rounds, |i, prev_g, prev_h| {
        if i == 0 {
            let c = arena.base(1);
            (vec![c; g.vertex_count()], vec![c; h.vertex_count()])
        } else {
            (
                hypergraph_round(&mut arena, g, prev_g),
                hypergraph_round(&mut arena, h, prev_h),
            )
        }
    })
}

fn hypergraph_round(arena: &mut ColorArena, g: &Hypergraph, prev: &[ColorId]) -> Vec<ColorId> {
    (1..=g.vertex_count())
        .map(|v| {
            let incident: Vec<ColorId> = g
                .edges()
                .iter()
                .filter(|e| e.binary_search(&v).is_ok())
                .map(|e| {
                    let members: Vec<ColorId> = e.iter().map(|&u| prev[u - 1]).collect();
                    arena.multiset(members)
                })
                .collect();
            arena.multiset(incident)
        })
        .collect()
}

/// Whether color refinement distinguishes two colored graphs.
pub fn distinguishes_cgraphs(
    g: &ColoredGraph,
    h: &ColoredGraph,
    include_own_color: bool,
) -> DistinguishResult {
    distinguishes_cgraphs_bounded(g, h, include_own_color, g.vertex_count() + h.vertex_count() + 2)
}

/// As [`distinguishes_cgraphs`], with an explicit round budget.
pub fn distinguishes_cgraphs_bounded(
    g: &ColoredGraph,
    h: &ColoredGraph,
    include_own_color: bool,
    max_rounds: usize,
) -> DistinguishResult {
    let mut arena = ColorArena::new();
    distinguish_joint(max_rounds, |i, prev_g, prev_h| {
        if i == 0 {
            let a = (1..=g.vertex_count()).map(|v| arena.base(g.color(v))).collect();
            let b = (1..=h.vertex_count()).map(|v| arena.base(h.color(v))).collect();
            (a, b)
        } else {
            (
                graph_round(&mut arena, g, prev_g, include_own_color),
                graph_round(&mut arena, h, prev_h, include_own_color),
            )
        }
    })
}

fn graph_round(
    arena: &mut ColorArena,
    g: &ColoredGraph,
    prev: &[ColorId],
    include_own_color: bool,
) -> Vec<ColorId> {
    (1..=g.vertex_count())
        .map(|v| {
            let members: Vec<ColorId> = g.neighbors(v).iter().map(|&u| prev[u - 1]).collect();
            if include_own_color {
                arena.multiset_with_own(prev[v - 1], members)
            } else {
                arena.multiset(members)
            }
        })
        .collect()
}

/// Compares two precomputed histories from one arena, round by round.
pub fn compare_refinements(a: &ColorHistory, b: &ColorHistory) -> DistinguishResult {
    compare_histories(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edge_example() -> Hypergraph {
        Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn hypergraph_round_one_matches_nested_multisets() {
        let g = two_edge_example();
        let mut arena = ColorArena::new();
        let history = cr_hypergraph(&mut arena, &g, 4);
        let round1 = history.round(1);
        assert_eq!(round1[0], round1[1]);
        assert_ne!(round1[0], round1[2]);

        // Expected colors built structurally in the same arena.
        let one = arena.base(1);
        let pair = arena.multiset(vec![one, one]);
        let triple = arena.multiset(vec![one, one, one]);
        let v1_expected = arena.multiset(vec![pair, triple]);
        let v3_expected = arena.multiset(vec![triple]);
        assert_eq!(round1[0], v1_expected);
        assert_eq!(round1[2], v3_expected);
        assert_eq!(arena.render(round1[2]), "{{1,1,1}}");
        assert_eq!(arena.render(round1[0]), "{{1,1},{1,1,1}}");
    }

    #[test]
    fn edgeless_hypergraph_rounds_stay_constant() {
        let g = Hypergraph::new(3, vec![]).unwrap();
        let mut arena = ColorArena::new();
        let history = cr_hypergraph(&mut arena, &g, 5);
        for round in history.rounds() {
            assert!(round.iter().all(|&c| c == round[0]));
        }
        assert_eq!(history.stable_round(), Some(0));
    }

    #[test]
    fn hypergraph_degree_split() {
        let g = Hypergraph::new(2, vec![vec![1], vec![1, 2]]).unwrap();
        let mut arena = ColorArena::new();
        let history = cr_hypergraph(&mut arena, &g, 4);
        let round1 = history.round(1);
        assert_ne!(round1[0], round1[1]);
    }

    #[test]
    fn graph_rounds_split_path_endpoints() {
        let path = ColoredGraph::new(3, vec![1, 1, 1], &[(1, 2), (2, 3)]).unwrap();
        let mut arena = ColorArena::new();
        let history = cr_graph(&mut arena, &path, 5, false);
        let round1 = history.round(1);
        assert_eq!(round1[0], round1[2]);
        assert_ne!(round1[0], round1[1]);
    }

    #[test]
    fn edgeless_graph_with_own_color_stays_initial() {
        let g = ColoredGraph::new(3, vec![1, 2, 2], &[]).unwrap();
        let mut arena = ColorArena::new();
        let history = cr_graph(&mut arena, &g, 4, true);
        assert_eq!(history.partition(0), history.partition(history.rounds().len() - 1));
    }

    #[test]
    fn distinguishes_trivial_cases() {
        let g = two_edge_example();
        assert_eq!(
            distinguishes_hypergraphs(&g, &g),
            DistinguishResult { distinguished: false, round: None }
        );

        let h = Hypergraph::new(2, vec![vec![1, 2]]).unwrap();
        let r = distinguishes_hypergraphs(&g, &h);
        assert!(r.distinguished);
        assert_eq!(r.round, Some(0));
    }

    #[test]
    fn distinguishes_round_one_pair() {
        let g = two_edge_example();
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let r = distinguishes_hypergraphs(&g, &h);
        assert!(r.distinguished);
        assert_eq!(r.round, Some(1));
    }

    #[test]
    fn incidence_graphs_of_distinguished_pair_are_distinguished() {
        let g = two_edge_example();
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let r = distinguishes_cgraphs(&g.incidence_graph(), &h.incidence_graph(), false);
        assert!(r.distinguished);
    }

    #[test]
    fn distinguishes_cgraph_stars() {
        let star2 = ColoredGraph::new(3, vec![1, 1, 1], &[(1, 2), (1, 3)]).unwrap();
        let star3 =
            ColoredGraph::new(4, vec![1, 1, 1, 1], &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let r = distinguishes_cgraphs(&star2, &star3, true);
        assert!(r.distinguished);
        assert_eq!(r.round, Some(0));

        let relabeled =
            ColoredGraph::new(3, vec![1, 1, 1], &[(2, 1), (2, 3)]).unwrap();
        assert!(!distinguishes_cgraphs(&star2, &relabeled, true).distinguished);
    }

    #[test]
    fn incidence_round_two_restriction_splits_like_hypergraph_round_one() {
        // On the colored incidence graph of the two-edge example, two rounds
        // of refinement (without own colors) restricted to the three color-1
        // vertices give exactly the classes {v1, v2} and {v3}.
        let g = two_edge_example();
        let mut arena = ColorArena::new();
        let history = cr_graph(&mut arena, &g.incidence_graph(), 8, false);
        let round2 = &history.round(2)[..3];
        assert_eq!(round2[0], round2[1]);
        assert_ne!(round2[0], round2[2]);
        assert_eq!(partition_classes(round2), vec![0, 0, 1]);
    }

    #[test]
    fn bounded_variants_agree_with_defaults() {
        let g = two_edge_example();
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(
            distinguishes_hypergraphs(&g, &h),
            distinguishes_hypergraphs_bounded(&g, &h, 12)
        );
    }

    #[test]
    fn monotone_refinement_on_incidence_graphs() {
        let g = two_edge_example();
        let mut arena = ColorArena::new();
        let history = cr_graph(&mut arena, &g.incidence_graph(), 12, false);
        let mut classes = 0;
        for i in 0..history.rounds().len() {
            let p = history.partition(i);
            let k = p.iter().max().map_or(0, |&m| m + 1);
            assert!(k >= classes);
            classes = k;
        }
        assert!(history.stable_round().is_some());
        assert!(history.stable_round().unwrap() <= g.incidence_graph().vertex_count());
    }
}
