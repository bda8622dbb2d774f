//! Batch verifiers: executable checks of the counting identities relating
//! the mapping-pair species, the edge-size interpolation, the triangularity
//! and diagonal structure of the species matrices, the equivalence between
//! refinement verdicts and pattern-count witnesses, and the directed-graph
//! identities. All arithmetic is exact; rational intermediates must come out
//! integral.

use crate::digraphs::{
    check_multiplicativity, distinguish_by_a3_with, in_a_n, in_a_n_via_paths,
};
use crate::enumerate::{
    enum_berge_acyclic, enum_berge_acyclic_with, enum_colored_graphs, enum_colored_trees,
    enum_digraphs, enum_dags_a3, enum_hypergraphs, enum_hypergraphs_exact, Family,
};
use crate::homcount::{
    count, count_aut, count_hom_cgraph, count_hom_cgraph_bruteforce, count_with_pin, CountError,
    CountKind,
};
use crate::hypergraph::{ColoredGraph, Digraph, Hypergraph};
use crate::refine::{
    cr_graph, cr_hypergraph, distinguishes_cgraphs, distinguishes_hypergraphs, partition_classes,
    ColorArena,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Structure(#[from] crate::hypergraph::StructureError),
    #[error("input must be a simple hypergraph")]
    NotSimple,
    #[error("base pattern must have a single-vertex edge at vertex {u}")]
    MissingLoop { u: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("bound {expected} does not match the instance value {got}")]
    BoundMismatch { expected: usize, got: usize },
    #[error("linear system is singular")]
    SingularSystem,
    #[error("solution is not integral")]
    NonIntegralSolution,
    #[error("solution has a negative entry")]
    NegativeSolution,
}

/// One line of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<String>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    fn new(check: &str, ok: bool, detail: String) -> Self {
        CheckReport {
            check: check.to_string(),
            instances: None,
            ok,
            witness: None,
            detail: Some(detail),
        }
    }
}

fn ratio(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

fn rational_is(value: &BigRational, target: &BigUint) -> bool {
    value.is_integer() && value.to_integer() == BigInt::from(target.clone())
}

/// Exact Gauss-Jordan elimination; `None` when the matrix is singular.
fn solve_linear(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].clone();
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &inv;
                for (c, pivot_entry) in pivot_row.iter().enumerate().skip(col) {
                    let t = pivot_entry * &factor;
                    a[r][c] -= t;
                }
                let t = &b[col] * &factor;
                b[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

// ---------------------------------------------------------------------------
// Decomposition identities
// ---------------------------------------------------------------------------

/// Result of one decomposition check: the directly counted left side and the
/// rational sum over the intermediate family.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub ok: bool,
    pub lhs: BigUint,
    pub rhs: BigRational,
    pub family_size: usize,
}

/// Intermediate family for the merging decompositions: connected hypergraphs
/// with at most `|V(G)|` vertices and exactly `|E(G)|` edges.
pub fn merging_family(g: &Hypergraph) -> Family<Hypergraph> {
    enum_hypergraphs_exact(g.vertex_count(), g.edge_count(), g.vertex_count(), false, true)
}

/// Intermediate family for the leaf-extension decomposition: connected
/// hypergraphs with exactly `m` edges and at most `edge_cap` vertices per
/// edge. Connectivity bounds the vertex count by `1 + m * (edge_cap - 1)`.
pub fn leaf_family(m: usize, edge_cap: usize) -> Family<Hypergraph> {
    if m == 0 {
        return enum_hypergraphs_exact(1, 0, 0, false, true);
    }
    if edge_cap == 0 {
        return Family::from_candidates(Vec::<Hypergraph>::new());
    }
    let max_v = 1 + m * (edge_cap - 1);
    enum_hypergraphs_exact(max_v, m, edge_cap, false, true)
}

fn decomposition_with(
    g: &Hypergraph,
    h: &Hypergraph,
    lhs_kind: CountKind,
    left_kind: CountKind,
    right_kind: CountKind,
    family: &Family<Hypergraph>,
) -> Result<DecompositionReport, VerifyError> {
    let lhs = count(lhs_kind, g, h)?;
    let mut rhs = BigRational::zero();
    for mid in family.iter() {
        let left = count(left_kind, g, mid)?;
        if left.is_zero() {
            continue;
        }
        let right = count(right_kind, mid, h)?;
        if right.is_zero() {
            continue;
        }
        let aut = count_aut(mid);
        rhs += ratio(&(left * right), &aut);
    }
    let ok = rational_is(&rhs, &lhs);
    Ok(DecompositionReport { ok, lhs, rhs, family_size: family.len() })
}

/// Checks `InHom(G, H) = sum over G' of LoMeHom(G, G') / Aut(G') *
/// LoInjInHom(G', H)`, with the sum over [`merging_family`].
pub fn check_inhom_decomposition(
    g: &Hypergraph,
    h: &Hypergraph,
) -> Result<DecompositionReport, VerifyError> {
    let family = merging_family(g);
    check_inhom_decomposition_with(g, h, &family)
}

pub fn check_inhom_decomposition_with(
    g: &Hypergraph,
    h: &Hypergraph,
    family: &Family<Hypergraph>,
) -> Result<DecompositionReport, VerifyError> {
    decomposition_with(
        g,
        h,
        CountKind::inhom(),
        CountKind::lo_me_hom(),
        CountKind::lo_inj_inhom(),
        family,
    )
}

/// Checks `Hom(G, H) = sum over G' of LoMeHom(G, G') / Aut(G') *
/// LoInjHom(G', H)`.
pub fn check_hom_decomposition(
    g: &Hypergraph,
    h: &Hypergraph,
) -> Result<DecompositionReport, VerifyError> {
    let family = merging_family(g);
    check_hom_decomposition_with(g, h, &family)
}

pub fn check_hom_decomposition_with(
    g: &Hypergraph,
    h: &Hypergraph,
    family: &Family<Hypergraph>,
) -> Result<DecompositionReport, VerifyError> {
    decomposition_with(
        g,
        h,
        CountKind::hom(),
        CountKind::lo_me_hom(),
        CountKind::lo_inj_hom(),
        family,
    )
}

/// Checks `LoInjInHom(G, H) = sum over G' of LeafAddInHom(G, G') / Aut(G') *
/// LoInjHom(G', H)`, with the sum over [`leaf_family`].
pub fn check_loc_inj_decomposition(
    g: &Hypergraph,
    h: &Hypergraph,
) -> Result<DecompositionReport, VerifyError> {
    let family = leaf_family(g.edge_count(), h.vertex_count());
    check_loc_inj_decomposition_with(g, h, &family)
}

pub fn check_loc_inj_decomposition_with(
    g: &Hypergraph,
    h: &Hypergraph,
    family: &Family<Hypergraph>,
) -> Result<DecompositionReport, VerifyError> {
    decomposition_with(
        g,
        h,
        CountKind::lo_inj_inhom(),
        CountKind::leaf_add_inhom(),
        CountKind::lo_inj_hom(),
        family,
    )
}

// ---------------------------------------------------------------------------
// Matrix slices and triangularity
// ---------------------------------------------------------------------------

/// A finite restriction of a species matrix to two families.
#[derive(Debug, Clone)]
pub struct CountMatrixSlice {
    pub kind: CountKind,
    pub entries: Vec<Vec<BigUint>>,
}

pub fn count_matrix_slice(
    kind: CountKind,
    rows: &Family<Hypergraph>,
    cols: &Family<Hypergraph>,
) -> Result<CountMatrixSlice, VerifyError> {
    let entries = rows
        .iter()
        .map(|r| cols.iter().map(|c| count(kind, r, c)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountMatrixSlice { kind, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularSpecies {
    /// Vanishes when the column structure is heavier than the row structure.
    LoMeHom,
    /// Vanishes when the column structure is lighter than the row structure.
    LeafAddInHom,
}

#[derive(Debug, Clone)]
pub struct TriangularityReport {
    pub ok: bool,
    pub checked_pairs: usize,
    pub violations: Vec<String>,
}

/// Checks the triangular structure of a species over an ordered family of
/// connected representatives, and that the diagonal equals the automorphism
/// count.
pub fn check_triangularity(
    family: &Family<Hypergraph>,
    species: TriangularSpecies,
) -> Result<TriangularityReport, VerifyError> {
    let kind = match species {
        TriangularSpecies::LoMeHom => CountKind::lo_me_hom(),
        TriangularSpecies::LeafAddInHom => CountKind::leaf_add_inhom(),
    };
    let members = family.members();
    let mut violations = Vec::new();
    let mut checked = 0usize;
    for (i, g) in members.iter().enumerate() {
        for (j, h) in members.iter().enumerate() {
            checked += 1;
            let value = count(kind, g, h)?;
            if i == j {
                if value != count_aut(g) {
                    violations.push(format!("diagonal mismatch at index {i}"));
                }
                continue;
            }
            // Members are pairwise non-isomorphic, so any nonzero entry on
            // the forbidden side is a violation.
            let forbidden = match species {
                TriangularSpecies::LoMeHom => h.weight() >= g.weight(),
                TriangularSpecies::LeafAddInHom => h.weight() <= g.weight(),
            };
            if forbidden && !value.is_zero() {
                violations.push(format!("nonzero entry at ({i}, {j})"));
            }
        }
    }
    Ok(TriangularityReport { ok: violations.is_empty(), checked_pairs: checked, violations })
}

// ---------------------------------------------------------------------------
// Edge-size recovery
// ---------------------------------------------------------------------------

/// Given `inhom_bk[k-1] = InHom(B_k, G)` for `k = 1..=n` where `B_k` is the
/// single-edge hypergraph on `k` vertices and `n = |V(G)|`, solves the
/// power-sum system exactly and returns the per-size edge counts together
/// with their total.
pub fn recover_edge_size_counts(
    inhom_bk: &[BigUint],
    n: usize,
) -> Result<(Vec<BigUint>, BigUint), VerifyError> {
    if inhom_bk.len() != n {
        return Err(VerifyError::LengthMismatch { expected: n, got: inhom_bk.len() });
    }
    let matrix: Vec<Vec<BigRational>> = (1..=n)
        .map(|k| {
            (1..=n)
                .map(|i| BigRational::from(BigInt::from(BigUint::from(i).pow(k as u32))))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = inhom_bk
        .iter()
        .map(|v| BigRational::from(BigInt::from(v.clone())))
        .collect();
    let solution = solve_linear(matrix, rhs).ok_or(VerifyError::SingularSystem)?;
    let mut counts = Vec::with_capacity(n);
    let mut total = BigUint::zero();
    for value in solution {
        if !value.is_integer() {
            return Err(VerifyError::NonIntegralSolution);
        }
        let int = value.to_integer();
        let (sign, mag) = int.into_parts();
        if sign == num_bigint::Sign::Minus {
            return Err(VerifyError::NegativeSolution);
        }
        total += &mag;
        counts.push(mag);
    }
    Ok((counts, total))
}

// ---------------------------------------------------------------------------
// Degree-sequence interpolation
// ---------------------------------------------------------------------------

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// The least exponent `s >= 1` such that, for every `j` in `1..=n`,
/// `sum over i < j of 2^(n-1) * i^s < j^s`. This makes the weighted power
/// sums of distinct bounded degree sequences pairwise distinct.
pub fn min_separating_exponent(n: usize) -> u32 {
    let mut s = 1u32;
    loop {
        if separating_exponent_valid(n, s) {
            return s;
        }
        s += 1;
    }
}

/// Direct evaluation of the defining inequality chain.
pub fn separating_exponent_valid(n: usize, s: u32) -> bool {
    let factor = BigUint::from(2u32).pow(n.saturating_sub(1) as u32);
    for j in 1..=n {
        let mut lhs = BigUint::zero();
        for i in 1..j {
            lhs += &factor * BigUint::from(i).pow(s);
        }
        if lhs >= BigUint::from(j).pow(s) {
            return false;
        }
    }
    true
}

/// All degree sequences a vertex of a simple hypergraph on `n` vertices can
/// have: entry `i` (1-based) ranges over `0..=C(n-1, i-1)`. Lexicographic
/// order.
pub fn degree_sequence_domain(n: usize) -> Vec<Vec<u64>> {
    let bounds: Vec<u64> = (1..=n).map(|i| binomial(n as u64 - 1, i as u64 - 1)).collect();
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    loop {
        out.push(current.clone());
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] < bounds[pos] {
                current[pos] += 1;
                for entry in current.iter_mut().skip(pos + 1) {
                    *entry = 0;
                }
                break;
            }
        }
    }
}

/// The interpolation node of a degree sequence: `sum of d_i * i^s`.
pub fn degree_sequence_node(entries: &[u64], s: u32) -> BigUint {
    entries
        .iter()
        .enumerate()
        .map(|(idx, &d)| BigUint::from(d) * BigUint::from(idx + 1).pow(s))
        .sum()
}

/// Whether the interpolation nodes over the full degree-sequence domain are
/// pairwise distinct for `s = min_separating_exponent(n)`.
pub fn check_node_distinctness(n: usize) -> bool {
    let s = min_separating_exponent(n);
    let nodes: Vec<BigUint> = degree_sequence_domain(n)
        .iter()
        .map(|d| degree_sequence_node(d, s))
        .collect();
    let mut sorted = nodes.clone();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[derive(Debug, Clone)]
pub struct PendantFormulaReport {
    pub ok: bool,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

/// Checks that attaching `r` pendant edges of `s` fresh vertices at `u`
/// turns the incidence-homomorphism count into the weighted power sum over
/// degree-sequence classes of the image of `u`:
/// `InHom(B_{r,s}, G) = sum over w of InHom_(u -> w)(B, G) * (sum of
/// d_i(w) * i^s)^r`.
pub fn check_pendant_edges_formula(
    bp: &Hypergraph,
    u: usize,
    g: &Hypergraph,
    r: usize,
    s: u32,
) -> Result<PendantFormulaReport, VerifyError> {
    let extended = bp.attach_pendant_edges(u, r, s as usize)?;
    let lhs = count(CountKind::inhom(), &extended, g)?;
    let mut rhs = BigUint::zero();
    for w in 1..=g.vertex_count() {
        let pinned = count_with_pin(CountKind::inhom(), bp, g, Some((u, w)))?;
        if pinned == 0 {
            continue;
        }
        let dseq = g.degree_sequence(w).expect("w is in range");
        let node = degree_sequence_node(dseq.entries(), s);
        rhs += BigUint::from(pinned) * node.pow(r as u32);
    }
    let ok = lhs == rhs;
    Ok(PendantFormulaReport { ok, lhs, rhs })
}

#[derive(Debug, Clone)]
pub struct DegreeRecoveryReport {
    pub ok: bool,
    pub nodes_distinct: bool,
    pub exponent: u32,
    pub recovered: Vec<BigUint>,
    pub direct: Vec<BigUint>,
}

/// Full interpolation round trip: from the counts `InHom(B_{r,s}, G)` for
/// `r = 0..l-1` alone, recover how many incidence homomorphisms map `u` to a
/// vertex of each possible degree sequence, and compare with direct
/// partitioned counting. Requires a single-vertex edge at `u` in `bp` and a
/// simple target.
pub fn check_degree_sequence_recovery(
    bp: &Hypergraph,
    u: usize,
    g: &Hypergraph,
) -> Result<DegreeRecoveryReport, VerifyError> {
    if !g.is_simple() {
        return Err(VerifyError::NotSimple);
    }
    if !bp.edges().iter().any(|e| e.as_slice() == [u]) {
        return Err(VerifyError::MissingLoop { u });
    }
    let n = g.vertex_count();
    let domain = degree_sequence_domain(n);
    let s = min_separating_exponent(n);
    let nodes: Vec<BigUint> = domain.iter().map(|d| degree_sequence_node(d, s)).collect();
    let mut sorted = nodes.clone();
    sorted.sort();
    let nodes_distinct = sorted.windows(2).all(|w| w[0] != w[1]);

    let l = domain.len();
    let mut matrix = Vec::with_capacity(l);
    let mut rhs = Vec::with_capacity(l);
    for r in 0..l {
        matrix.push(
            nodes
                .iter()
                .map(|x| BigRational::from(BigInt::from(x.pow(r as u32))))
                .collect::<Vec<_>>(),
        );
        let extended = bp
            .attach_pendant_edges(u, r, s as usize)
            .expect("pendant parameters are valid");
        let value = count(CountKind::inhom(), &extended, g)?;
        rhs.push(BigRational::from(BigInt::from(value)));
    }
    let solution = solve_linear(matrix, rhs).ok_or(VerifyError::SingularSystem)?;
    let mut recovered = Vec::with_capacity(l);
    for value in solution {
        if !value.is_integer() {
            return Err(VerifyError::NonIntegralSolution);
        }
        let (sign, mag) = value.to_integer().into_parts();
        if sign == num_bigint::Sign::Minus {
            return Err(VerifyError::NegativeSolution);
        }
        recovered.push(mag);
    }

    let mut direct = vec![BigUint::zero(); l];
    for w in 1..=n {
        let dseq = g.degree_sequence(w).expect("w is in range");
        let idx = domain
            .iter()
            .position(|d| d.as_slice() == dseq.entries())
            .expect("simple targets have bounded degree sequences");
        direct[idx] += BigUint::from(count_with_pin(CountKind::inhom(), bp, g, Some((u, w)))?);
    }
    let ok = nodes_distinct && recovered == direct;
    Ok(DegreeRecoveryReport { ok, nodes_distinct, exponent: s, recovered, direct })
}

// ---------------------------------------------------------------------------
// Restricted slice identity
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SliceReport {
    pub ok: bool,
    pub family_size: usize,
}

/// Checks, over the family of connected Berge-acyclic hypergraphs with
/// exactly `m` edges and at most `n` vertices per edge, the vector identity
/// `LoInjInHom(., G) = LeafAddInHom * Aut^{-1} * LoInjHom(., G)` entrywise
/// in exact rationals. `n` must equal `|V(G)|`.
pub fn check_bounded_slice_identity(
    m: usize,
    n: usize,
    g: &Hypergraph,
) -> Result<SliceReport, VerifyError> {
    if n != g.vertex_count() {
        return Err(VerifyError::BoundMismatch { expected: n, got: g.vertex_count() });
    }
    let family = enum_berge_acyclic_with(m, n);
    let leaf_slice = count_matrix_slice(CountKind::leaf_add_inhom(), &family, &family)?;
    let mut ok = true;
    for (i, b) in family.iter().enumerate() {
        let lhs = count(CountKind::lo_inj_inhom(), b, g)?;
        let mut rhs = BigRational::zero();
        for (j, mid) in family.iter().enumerate() {
            let left = &leaf_slice.entries[i][j];
            if left.is_zero() {
                continue;
            }
            let right = count(CountKind::lo_inj_hom(), mid, g)?;
            if right.is_zero() {
                continue;
            }
            rhs += ratio(&(left * right), &count_aut(mid));
        }
        if !rational_is(&rhs, &lhs) {
            ok = false;
        }
    }
    Ok(SliceReport { ok, family_size: family.len() })
}

// ---------------------------------------------------------------------------
// Refinement / counting equivalence
// ---------------------------------------------------------------------------

/// Hard cap on the pattern-weight budget of witness searches. The formula
/// budget `2 * (weight(G) + weight(H))` is capped here: enumerating all
/// Berge-acyclic patterns past this weight is unnecessary at desk scale and
/// prohibitively large beyond it. Exhaustion is always reported, never
/// silently passed.
pub const BA_BUDGET_CAP: usize = 10;

/// Default pattern-weight budget for a witness search between `g` and `h`.
pub fn default_pattern_budget(g: &Hypergraph, h: &Hypergraph) -> usize {
    (2 * (g.weight() + h.weight())).min(BA_BUDGET_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternCounting {
    Hom,
    InHom,
}

/// Outcome of one refinement-versus-witness-search check.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub distinguished: bool,
    pub round: Option<usize>,
    pub witness: Option<Hypergraph>,
    /// A distinguished pair must yield a witness (unless the budget ran
    /// out); an undistinguished pair must yield none.
    pub consistent: bool,
    pub budget_exhausted: bool,
    pub budget: usize,
}

/// Patterns with precomputed incidence graphs, ordered by weight.
struct PatternSet {
    patterns: Vec<(Hypergraph, ColoredGraph)>,
}

impl PatternSet {
    fn berge_acyclic(max_weight: usize, simple_only: bool) -> Self {
        let mut family = enum_berge_acyclic(max_weight);
        if simple_only {
            family.retain(Hypergraph::is_simple);
        }
        let patterns = family
            .iter()
            .map(|b| {
                let inc = b.incidence_graph();
                (b.clone(), inc)
            })
            .collect();
        PatternSet { patterns }
    }

    fn count(
        &self,
        index: usize,
        counting: PatternCounting,
        target: &Hypergraph,
        target_inc: &ColoredGraph,
    ) -> BigUint {
        let (pattern, pattern_inc) = &self.patterns[index];
        match counting {
            PatternCounting::Hom => {
                count(CountKind::hom(), pattern, target).expect("no connectivity precondition")
            }
            // The incidence graph of a connected Berge-acyclic pattern is a
            // tree, so this takes the dynamic-programming path.
            PatternCounting::InHom => count_hom_cgraph(pattern_inc, target_inc)
                .expect("pattern incidence graphs are connected"),
        }
    }

    fn search(
        &self,
        counting: PatternCounting,
        g: &Hypergraph,
        h: &Hypergraph,
        budget: usize,
    ) -> Option<Hypergraph> {
        let g_inc = g.incidence_graph();
        let h_inc = h.incidence_graph();
        for index in 0..self.patterns.len() {
            let (pattern, _) = &self.patterns[index];
            if pattern.weight() > budget {
                break;
            }
            let cg = self.count(index, counting, g, &g_inc);
            let ch = self.count(index, counting, h, &h_inc);
            if cg != ch {
                // Confirm incidence-graph counts through the direct kernel.
                if counting == PatternCounting::InHom {
                    debug_assert_ne!(
                        count(CountKind::inhom(), pattern, g).unwrap(),
                        count(CountKind::inhom(), pattern, h).unwrap()
                    );
                }
                return Some(pattern.clone());
            }
        }
        None
    }
}

fn equivalence_report(
    patterns: &PatternSet,
    counting: PatternCounting,
    g: &Hypergraph,
    h: &Hypergraph,
    budget: usize,
) -> EquivalenceReport {
    let d = distinguishes_hypergraphs(g, h);
    let witness = patterns.search(counting, g, h, budget);
    let (consistent, budget_exhausted) = match (d.distinguished, &witness) {
        (false, None) => (true, false),
        (false, Some(_)) => (false, false),
        (true, Some(_)) => (true, false),
        (true, None) => (true, true),
    };
    EquivalenceReport {
        distinguished: d.distinguished,
        round: d.round,
        witness,
        consistent,
        budget_exhausted,
        budget,
    }
}

/// Refinement verdict versus homomorphism-count witness search over
/// connected Berge-acyclic patterns.
pub fn check_hom_equivalence(g: &Hypergraph, h: &Hypergraph, budget: usize) -> EquivalenceReport {
    let patterns = PatternSet::berge_acyclic(budget, false);
    equivalence_report(&patterns, PatternCounting::Hom, g, h, budget)
}

/// Refinement verdict versus incidence-homomorphism-count witness search.
pub fn check_inhom_equivalence(
    g: &Hypergraph,
    h: &Hypergraph,
    budget: usize,
) -> EquivalenceReport {
    let patterns = PatternSet::berge_acyclic(budget, false);
    equivalence_report(&patterns, PatternCounting::InHom, g, h, budget)
}

/// For simple inputs: witness search restricted to simple Berge-acyclic
/// patterns, for both counting functions.
pub fn check_simple_equivalence(
    g: &Hypergraph,
    h: &Hypergraph,
    budget: usize,
) -> Result<(EquivalenceReport, EquivalenceReport), VerifyError> {
    if !g.is_simple() || !h.is_simple() {
        return Err(VerifyError::NotSimple);
    }
    let patterns = PatternSet::berge_acyclic(budget, true);
    Ok((
        equivalence_report(&patterns, PatternCounting::Hom, g, h, budget),
        equivalence_report(&patterns, PatternCounting::InHom, g, h, budget),
    ))
}

// ---------------------------------------------------------------------------
// Desk suite
// ---------------------------------------------------------------------------

/// Configuration for the exhaustive desk-scale suite.
#[derive(Debug, Clone)]
pub struct DeskConfig {
    /// Worker threads; 0 uses all available cores.
    pub workers: usize,
    /// Seed for the randomized multiplicativity triples.
    pub seed: u64,
}

impl Default for DeskConfig {
    fn default() -> Self {
        DeskConfig { workers: 1, seed: 1 }
    }
}

/// The nested-multiset table of the running two-edge example.
pub fn desk_refinement_table() -> CheckReport {
    let g = Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3]]).expect("valid");
    let mut arena = ColorArena::new();
    let history = cr_hypergraph(&mut arena, &g, 4);
    let round1 = history.round(1).to_vec();

    let one = arena.base(1);
    let pair = arena.multiset(vec![one, one]);
    let triple = arena.multiset(vec![one, one, one]);
    let expected_v1 = arena.multiset(vec![pair, triple]);
    let expected_v3 = arena.multiset(vec![triple]);

    let ok = round1[0] == round1[1]
        && round1[0] != round1[2]
        && round1[0] == expected_v1
        && round1[2] == expected_v3;
    CheckReport::new(
        "refinement_nested_multiset_table",
        ok,
        format!(
            "round 1 colors: v1=v2={} v3={}",
            arena.render(round1[0]),
            arena.render(round1[2])
        ),
    )
}

fn incidence_round_identity(g: &Hypergraph) -> bool {
    let n = g.vertex_count();
    let mut arena = ColorArena::new();
    let hyper = cr_hypergraph(&mut arena, g, n + 1);
    let rounds = hyper.rounds().len();
    let inc = g.incidence_graph();
    let mut inc_arena = ColorArena::new();
    let inc_history = cr_graph(&mut inc_arena, &inc, 2 * rounds + 2, false);
    let inc_rounds = inc_history.rounds().len();
    (0..rounds).all(|i| {
        // After stabilization the incidence partition is constant, so clamp.
        let row = (2 * i).min(inc_rounds - 1);
        let restricted = partition_classes(&inc_history.round(row)[..n]);
        partition_classes(hyper.round(i)) == restricted
    })
}

/// Refinement on hypergraphs versus refinement on colored incidence graphs:
/// verdict equivalence, the per-round partition identity, and independence
/// of the own-color variant on incidence graphs.
pub fn desk_incidence_equivalence(_cfg: &DeskConfig) -> CheckReport {
    let family = enum_hypergraphs(4, 3, 4, false, false);
    let members = family.members();

    let identity_ok = members.par_iter().all(incidence_round_identity);

    let pairs: Vec<(usize, usize)> = (0..members.len())
        .flat_map(|i| (i..members.len()).map(move |j| (i, j)))
        .collect();
    let pair_failures: usize = pairs
        .par_iter()
        .filter(|&&(i, j)| {
            let g = &members[i];
            let h = &members[j];
            let direct = distinguishes_hypergraphs(g, h).distinguished;
            let inc_g = g.incidence_graph();
            let inc_h = h.incidence_graph();
            let via_inc = distinguishes_cgraphs(&inc_g, &inc_h, false).distinguished;
            let via_inc_own = distinguishes_cgraphs(&inc_g, &inc_h, true).distinguished;
            direct != via_inc || via_inc != via_inc_own
        })
        .count();

    let ok = identity_ok && pair_failures == 0;
    CheckReport::new(
        "incidence_equivalence",
        ok,
        format!(
            "{} structures, {} pairs, per-round identity {}, {} verdict mismatches",
            members.len(),
            pairs.len(),
            if identity_ok { "holds" } else { "fails" },
            pair_failures
        ),
    )
}

/// The three decomposition identities, exhaustively over connected sources
/// of weight at most 5 and targets within (3 vertices, 2 edges, size 3).
pub fn desk_decomposition_identities(_cfg: &DeskConfig) -> CheckReport {
    let mut sources = Vec::new();
    for m in 0..=4usize {
        let max_v = 5 - m;
        if max_v == 0 {
            continue;
        }
        sources.extend(
            enum_hypergraphs_exact(max_v, m, max_v, false, true)
                .members()
                .iter()
                .cloned(),
        );
    }
    let sources = Family::from_candidates(sources);
    let targets = enum_hypergraphs(3, 2, 3, false, false);

    // Intermediate families depend only on source/target bounds; build each
    // once up front.
    let mut merging: BTreeMap<(usize, usize), Family<Hypergraph>> = BTreeMap::new();
    for g in sources.iter() {
        merging
            .entry((g.vertex_count(), g.edge_count()))
            .or_insert_with(|| merging_family(g));
    }
    let mut leaf: BTreeMap<(usize, usize), Family<Hypergraph>> = BTreeMap::new();
    for g in sources.iter() {
        for h in targets.iter() {
            leaf.entry((g.edge_count(), h.vertex_count()))
                .or_insert_with(|| leaf_family(g.edge_count(), h.vertex_count()));
        }
    }

    let pairs: Vec<(&Hypergraph, &Hypergraph)> = sources
        .iter()
        .flat_map(|g| targets.iter().map(move |h| (g, h)))
        .collect();
    let failures: usize = pairs
        .par_iter()
        .filter(|(g, h)| {
            let mf = &merging[&(g.vertex_count(), g.edge_count())];
            let lf = &leaf[&(g.edge_count(), h.vertex_count())];
            let a = check_inhom_decomposition_with(g, h, mf).map(|r| r.ok);
            let b = check_hom_decomposition_with(g, h, mf).map(|r| r.ok);
            let c = check_loc_inj_decomposition_with(g, h, lf).map(|r| r.ok);
            !(a.unwrap_or(false) && b.unwrap_or(false) && c.unwrap_or(false))
        })
        .count();

    CheckReport::new(
        "decomposition_identities",
        failures == 0,
        format!(
            "{} sources x {} targets, {} failing pairs",
            sources.len(),
            targets.len(),
            failures
        ),
    )
}

/// Triangularity and diagonals over the Berge-acyclic family of weight at
/// most 5, and over the connected general family at (3, 2, 3).
pub fn desk_triangularity() -> CheckReport {
    let mut details = Vec::new();
    let mut ok = true;
    for (name, family) in [
        ("berge-acyclic(5)", enum_berge_acyclic(5)),
        ("connected(3,2,3)", enum_hypergraphs(3, 2, 3, false, true)),
    ] {
        for species in [TriangularSpecies::LoMeHom, TriangularSpecies::LeafAddInHom] {
            let report = check_triangularity(&family, species)
                .expect("family members are connected");
            ok &= report.ok;
            details.push(format!(
                "{name}/{species:?}: {} pairs, {} violations",
                report.checked_pairs,
                report.violations.len()
            ));
        }
    }
    CheckReport::new("triangularity", ok, details.join("; "))
}

/// Edge-size recovery round trip over every hypergraph at (3, 3, 3).
pub fn desk_edge_size_recovery() -> CheckReport {
    let family = enum_hypergraphs(3, 3, 3, false, false);
    let failures: usize = family
        .members()
        .par_iter()
        .filter(|g| {
            let n = g.vertex_count();
            let inhom_bk: Vec<BigUint> = (1..=n)
                .map(|k| {
                    let bk = Hypergraph::single_edge(k).expect("k >= 1");
                    count(CountKind::inhom(), &bk, g).expect("no preconditions")
                })
                .collect();
            let Ok((counts, total)) = recover_edge_size_counts(&inhom_bk, n) else {
                return true;
            };
            let mut true_counts = vec![BigUint::zero(); n];
            for e in g.edges() {
                true_counts[e.len() - 1] += BigUint::one();
            }
            counts != true_counts || total != BigUint::from(g.edge_count())
        })
        .count();
    CheckReport::new(
        "edge_size_recovery",
        failures == 0,
        format!("{} instances, {} failures", family.len(), failures),
    )
}

/// Refinement-versus-witness-search consistency sweeps for homomorphism
/// counts, incidence-homomorphism counts, and the simple restriction.
pub fn desk_counting_equivalence(_cfg: &DeskConfig) -> CheckReport {
    let family = enum_hypergraphs(4, 3, 4, false, false);
    let members = family.members();
    let all_patterns = PatternSet::berge_acyclic(BA_BUDGET_CAP, false);
    let simple_patterns = PatternSet::berge_acyclic(BA_BUDGET_CAP, true);

    let pairs: Vec<(usize, usize)> = (0..members.len())
        .flat_map(|i| (i + 1..members.len()).map(move |j| (i, j)))
        .collect();

    let outcomes: Vec<(bool, bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let g = &members[i];
            let h = &members[j];
            let budget = default_pattern_budget(g, h);
            let mut inconsistent = false;
            let mut exhausted = false;
            for counting in [PatternCounting::Hom, PatternCounting::InHom] {
                let report = equivalence_report(&all_patterns, counting, g, h, budget);
                inconsistent |= !report.consistent;
                exhausted |= report.budget_exhausted;
            }
            if g.is_simple() && h.is_simple() {
                for counting in [PatternCounting::Hom, PatternCounting::InHom] {
                    let report = equivalence_report(&simple_patterns, counting, g, h, budget);
                    inconsistent |= !report.consistent;
                    exhausted |= report.budget_exhausted;
                }
            }
            (inconsistent, exhausted)
        })
        .collect();

    let inconsistencies = outcomes.iter().filter(|(i, _)| *i).count();
    let exhaustions = outcomes.iter().filter(|(_, e)| *e).count();
    CheckReport::new(
        "counting_equivalence",
        inconsistencies == 0 && exhaustions == 0,
        format!(
            "{} pairs, {} inconsistencies, {} budget exhaustions",
            pairs.len(),
            inconsistencies,
            exhaustions
        ),
    )
}

/// Interpolation checks: the pendant-edge power-sum formula, the separating
/// exponent, node distinctness, and the full degree-sequence recovery at
/// two-vertex targets.
pub fn desk_interpolation(_cfg: &DeskConfig) -> CheckReport {
    let mut ok = true;
    let mut details = Vec::new();

    // Pendant formula sweep over small connected bases and all simple
    // targets on up to 3 vertices.
    let bases = enum_hypergraphs(2, 2, 2, false, true);
    let targets = enum_hypergraphs(3, 7, 3, true, false);
    let mut combos: Vec<(&Hypergraph, usize, usize, u32, &Hypergraph)> = Vec::new();
    for bp in bases.iter() {
        for u in 1..=bp.vertex_count() {
            for r in 0..=2usize {
                for s in 1..=2u32 {
                    for g in targets.iter() {
                        combos.push((bp, u, r, s, g));
                    }
                }
            }
        }
    }
    let pendant_failures: usize = combos
        .par_iter()
        .filter(|(bp, u, r, s, g)| {
            !check_pendant_edges_formula(bp, *u, g, *r, *s)
                .map(|rep| rep.ok)
                .unwrap_or(false)
        })
        .count();
    ok &= pendant_failures == 0;
    details.push(format!(
        "pendant formula: {} combinations, {} failures",
        combos.len(),
        pendant_failures
    ));

    // Separating exponents are minimal and valid for n <= 6.
    let exponent_ok = (1..=6usize).all(|n| {
        let s = min_separating_exponent(n);
        separating_exponent_valid(n, s) && (s == 1 || !separating_exponent_valid(n, s - 1))
    });
    ok &= exponent_ok;
    details.push(format!("separating exponents minimal up to n=6: {exponent_ok}"));

    // Node distinctness for n <= 4.
    let distinct_ok = (1..=4usize).all(check_node_distinctness);
    ok &= distinct_ok;
    details.push(format!("node distinctness up to n=4: {distinct_ok}"));

    // Full recovery round trip on all simple two-vertex targets.
    let b1 = Hypergraph::single_edge(1).expect("valid");
    let mut recovery_failures = 0usize;
    let mut recovery_count = 0usize;
    for g in enum_hypergraphs(2, 3, 2, true, false).iter() {
        if g.vertex_count() != 2 {
            continue;
        }
        recovery_count += 1;
        match check_degree_sequence_recovery(&b1, 1, g) {
            Ok(report) if report.ok => {}
            _ => recovery_failures += 1,
        }
    }
    ok &= recovery_failures == 0;
    details.push(format!(
        "degree recovery at n=2: {recovery_count} targets, {recovery_failures} failures"
    ));

    CheckReport::new("interpolation", ok, details.join("; "))
}

fn random_digraph<R: Rng>(rng: &mut R, max_v: usize) -> Digraph {
    let n = rng.gen_range(1..=max_v);
    let mut arcs = Vec::new();
    for u in 1..=n {
        for v in 1..=n {
            if rng.gen_bool(0.5) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).expect("generated arcs are valid")
}

/// Directed-graph checks: multiplicativity of homomorphism counts under
/// tensor products, the path characterization of tournament-hom membership,
/// and separation of non-isomorphic digraphs by small patterns.
pub fn desk_digraph_checks(cfg: &DeskConfig) -> CheckReport {
    let mut ok = true;
    let mut details = Vec::new();

    let small = enum_digraphs(2);
    let mut triples: Vec<(&Digraph, &Digraph, &Digraph)> = Vec::new();
    for f in small.iter() {
        for g in small.iter() {
            for h in small.iter() {
                triples.push((f, g, h));
            }
        }
    }
    let failures = triples
        .par_iter()
        .filter(|(f, g, h)| !check_multiplicativity(f, g, h))
        .count();
    ok &= failures == 0;
    details.push(format!(
        "multiplicativity exhaustive on <=2 vertices: {} triples, {} failures",
        triples.len(),
        failures
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random_triples: Vec<(Digraph, Digraph, Digraph)> = (0..200)
        .map(|_| {
            (
                random_digraph(&mut rng, 4),
                random_digraph(&mut rng, 4),
                random_digraph(&mut rng, 4),
            )
        })
        .collect();
    let failures = random_triples
        .par_iter()
        .filter(|(f, g, h)| !check_multiplicativity(f, g, h))
        .count();
    ok &= failures == 0;
    details.push(format!("multiplicativity random on <=4 vertices: 200 triples, {failures} failures"));

    let digraphs4 = enum_digraphs(4);
    let failures = digraphs4
        .members()
        .par_iter()
        .filter(|d| (0..=4usize).any(|n| in_a_n(d, n) != in_a_n_via_paths(d, n)))
        .count();
    ok &= failures == 0;
    details.push(format!(
        "tournament-hom membership vs path bound: {} digraphs, {} disagreements",
        digraphs4.len(),
        failures
    ));

    let digraphs3 = enum_digraphs(3);
    let patterns = enum_dags_a3(4);
    let pairs: Vec<(usize, usize)> = (0..digraphs3.len())
        .flat_map(|i| (i + 1..digraphs3.len()).map(move |j| (i, j)))
        .collect();
    let failures = pairs
        .par_iter()
        .filter(|&&(i, j)| {
            let report =
                distinguish_by_a3_with(&digraphs3.members()[i], &digraphs3.members()[j], &patterns);
            !report.consistent || report.budget_exhausted
        })
        .count();
    ok &= failures == 0;
    details.push(format!(
        "separation of non-isomorphic digraphs on <=3 vertices: {} pairs, {} failures",
        pairs.len(),
        failures
    ));

    CheckReport::new("digraph_checks", ok, details.join("; "))
}

/// Tree dynamic program versus exhaustive enumeration, and the bridge
/// between incidence-homomorphism counts and incidence-graph homomorphism
/// counts.
pub fn desk_tree_dp_bridge(_cfg: &DeskConfig) -> CheckReport {
    let trees = enum_colored_trees(6, 2);
    let graphs = enum_colored_graphs(4, 2);
    let pairs: Vec<(&ColoredGraph, &ColoredGraph)> = trees
        .iter()
        .flat_map(|t| graphs.iter().map(move |g| (t, g)))
        .collect();
    let dp_failures = pairs
        .par_iter()
        .filter(|(t, g)| {
            count_hom_cgraph(t, g).expect("trees are connected")
                != BigUint::from(count_hom_cgraph_bruteforce(t, g))
        })
        .count();

    let sources = enum_hypergraphs(3, 2, 3, false, true);
    let targets = enum_hypergraphs(3, 2, 3, false, false);
    let bridge_pairs: Vec<(&Hypergraph, &Hypergraph)> = sources
        .iter()
        .flat_map(|f| targets.iter().map(move |g| (f, g)))
        .collect();
    let bridge_failures = bridge_pairs
        .par_iter()
        .filter(|(f, g)| {
            count(CountKind::inhom(), f, g).expect("no preconditions")
                != count_hom_cgraph(&f.incidence_graph(), &g.incidence_graph())
                    .expect("connected sources have connected incidence graphs")
        })
        .count();

    CheckReport::new(
        "tree_dp_bridge",
        dp_failures == 0 && bridge_failures == 0,
        format!(
            "{} tree/graph pairs ({} dp failures); {} bridge pairs ({} failures)",
            pairs.len(),
            dp_failures,
            bridge_pairs.len(),
            bridge_failures
        ),
    )
}

/// The restricted slice identity over the bounded Berge-acyclic classes.
pub fn desk_slice_identity() -> CheckReport {
    let targets = enum_hypergraphs(3, 2, 3, false, false);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for m in 0..=2usize {
        for g in targets.iter() {
            checked += 1;
            match check_bounded_slice_identity(m, g.vertex_count(), g) {
                Ok(report) if report.ok => {}
                _ => failures += 1,
            }
        }
    }
    CheckReport::new(
        "bounded_slice_identity",
        failures == 0,
        format!("{checked} (m, target) combinations, {failures} failures"),
    )
}

/// Both formulations of the locally bijective count agree.
pub fn desk_local_bijective_agreement() -> CheckReport {
    let sources = enum_hypergraphs(3, 2, 3, false, true);
    let targets = enum_hypergraphs(3, 2, 3, false, false);
    let failures: usize = sources
        .members()
        .par_iter()
        .map(|f| {
            targets
                .iter()
                .filter(|g| {
                    count(CountKind::lo_inj_hom(), f, g).expect("connected source")
                        != count(CountKind::lo_inj_hom_alt(), f, g).expect("connected source")
                })
                .count()
        })
        .sum();
    CheckReport::new(
        "local_bijective_agreement",
        failures == 0,
        format!(
            "{} pairs, {} disagreements",
            sources.len() * targets.len(),
            failures
        ),
    )
}

/// Runs the full desk-scale suite in deterministic order.
pub fn desk_suite(cfg: &DeskConfig) -> Vec<CheckReport> {
    let run = |cfg: &DeskConfig| {
        vec![
            desk_refinement_table(),
            desk_incidence_equivalence(cfg),
            desk_decomposition_identities(cfg),
            desk_triangularity(),
            desk_edge_size_recovery(),
            desk_counting_equivalence(cfg),
            desk_interpolation(cfg),
            desk_digraph_checks(cfg),
            desk_tree_dp_bridge(cfg),
            desk_slice_identity(),
            desk_local_bijective_agreement(),
        ]
    };
    if cfg.workers == 0 {
        run(cfg)
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .expect("thread pool builds")
            .install(|| run(cfg))
    }
}
