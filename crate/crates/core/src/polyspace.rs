//! Treewidth in polynomial working memory.
//!
//! Nothing in this module materializes a separator or clique family: bag
//! candidates are streamed straight out of the connected-set enumerator, and
//! each one is scored by a divide-and-conquer search over elimination
//! orderings ([`treewidth_leaf_bag`]). The only state alive at any moment is
//! the current candidate, a recursion stack, and the best width seen so far.
//!
//! The driver tries three kinds of candidate bags and takes the minimum:
//! the whole vertex set, potential maximal cliques (reached through their
//! vertex representations), and minimal separators that are small but split
//! the graph into two large full components. Every candidate yields a valid
//! decomposition of the completed graph, so each score is an upper bound on
//! the treewidth, and for at least one streamed candidate the bound is tight.

use crate::decomposition::TreeDecomposition;
use crate::graph::Graph;
use crate::pmc::{is_pmc, PotentialMaximalClique};
use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolySpaceError {
    #[error("leaf bag {0} is not a clique")]
    NotAClique(VertexSet),
}

/// An exact fraction `num/den`, used for the size thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u32,
    den: u32,
}

impl Ratio {
    pub const fn new(num: u32, den: u32) -> Self {
        assert!(den > 0);
        Ratio { num, den }
    }

    /// Smallest integer `c` with `c ≥ self · n`.
    pub fn ceil_of(&self, n: usize) -> usize {
        (n as u64 * self.num as u64).div_ceil(self.den as u64) as usize
    }

    /// Largest integer `c` with `c ≤ self · n`.
    pub fn floor_of(&self, n: usize) -> usize {
        (n as u64 * self.num as u64 / self.den as u64) as usize
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Thresholds of the two-branch driver. The separator cap is always
/// `1 − 2·alpha`, so both large full components of a branch-B separator can
/// hold `alpha·n` vertices.
#[derive(Clone, Copy, Debug)]
pub struct PolySpaceConfig {
    alpha_split: Ratio,
    sep_cap_fraction: Ratio,
}

impl PolySpaceConfig {
    /// Requires `0 < alpha < 1/2`.
    pub fn with_alpha(alpha: Ratio) -> Self {
        assert!(
            alpha.num > 0 && 2 * alpha.num < alpha.den,
            "alpha must be in (0, 1/2)"
        );
        let sep_cap_fraction = Ratio::new(alpha.den - 2 * alpha.num, alpha.den);
        PolySpaceConfig {
            alpha_split: alpha,
            sep_cap_fraction,
        }
    }

    pub fn alpha_split(&self) -> Ratio {
        self.alpha_split
    }

    pub fn sep_cap_fraction(&self) -> Ratio {
        self.sep_cap_fraction
    }
}

impl Default for PolySpaceConfig {
    /// `alpha = 0.38685`, the balance point between candidate enumeration
    /// and the per-candidate ordering search; the derived separator cap is
    /// `0.2263`.
    fn default() -> Self {
        PolySpaceConfig::with_alpha(Ratio::new(38_685, 100_000))
    }
}

/// Counters reported alongside the width; memory stays polynomial because
/// candidates are never stored, so these are the only sizes worth watching.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolySpaceStats {
    /// Candidates scored from the large-component stream.
    pub large_bag_candidates: usize,
    /// Candidates scored from the complementary small-component stream.
    pub small_bag_candidates: usize,
    /// Qualifying separators scored in branch B.
    pub separator_candidates: usize,
    /// Ordering searches started.
    pub leaf_bag_searches: usize,
    /// Deepest split recursion observed (stays within `log2(n) + 2`).
    pub max_split_depth: usize,
}

/// Adjacency of `graph` with `clique` completed, never materialized.
struct Overlay<'g> {
    graph: &'g Graph,
    clique: VertexSet,
}

impl Overlay<'_> {
    fn none(graph: &Graph) -> Overlay<'_> {
        Overlay {
            graph,
            clique: VertexSet::empty(graph.n()),
        }
    }

    fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut nb = self.graph.neighborhood(set);
        if set.intersects(&self.clique) {
            nb.union_with(&self.clique);
        }
        nb.subtract(set);
        nb
    }

    /// Degree of `v` in `within` once `eliminated` is gone: the neighborhood
    /// of the component of `v` inside `eliminated ∪ {v}`.
    fn fill_degree(&self, eliminated: &VertexSet, v: usize, within: &VertexSet) -> usize {
        let mut comp = VertexSet::singleton(self.graph.n(), v);
        let mut allowed = eliminated.intersection(within);
        loop {
            let mut next = self.neighborhood(&comp);
            next.intersect_with(&allowed);
            if next.is_empty() {
                break;
            }
            allowed.subtract(&next);
            comp.union_with(&next);
        }
        self.neighborhood(&comp).intersection_len(within)
    }
}

/// Minimum over orderings of `to_eliminate` (eliminated after `before`) of
/// the largest fill degree, computed by balanced splitting: the first half
/// of an optimal ordering is *some* half-sized subset, so minimize over all
/// of them. Exact whenever the result is below `cutoff`; anything at or
/// above `cutoff` may be reported loosely, which keeps the surrounding
/// minimization sound while letting deep branches stop early.
#[allow(clippy::too_many_arguments)]
fn elim_width(
    ov: &Overlay<'_>,
    within: &VertexSet,
    before: &VertexSet,
    to_eliminate: &VertexSet,
    cutoff: usize,
    depth: usize,
    stats: &mut PolySpaceStats,
) -> usize {
    stats.max_split_depth = stats.max_split_depth.max(depth);
    let members: Vec<usize> = to_eliminate.iter().collect();
    match members.len() {
        0 => 0,
        1 => ov.fill_degree(before, members[0], within),
        k => {
            let mut best = usize::MAX;
            let half = k / 2;
            let mut choose: Vec<usize> = (0..half).collect();
            loop {
                let first = VertexSet::from_members(
                    to_eliminate.universe(),
                    choose.iter().map(|&i| members[i]),
                );
                let cut = cutoff.min(best);
                let a = elim_width(ov, within, before, &first, cut, depth + 1, stats);
                if a < cut {
                    let after = before.union(&first);
                    let rest = to_eliminate.difference(&first);
                    let b = elim_width(ov, within, &after, &rest, cut, depth + 1, stats);
                    best = best.min(a.max(b));
                }
                if !advance_combination(&mut choose, k) {
                    break;
                }
            }
            best
        }
    }
}

/// Recover an ordering achieving the exact minimum (no cutoff games here).
fn best_elim_order(
    ov: &Overlay<'_>,
    within: &VertexSet,
    before: &VertexSet,
    to_eliminate: &VertexSet,
    out: &mut Vec<usize>,
    stats: &mut PolySpaceStats,
) {
    let members: Vec<usize> = to_eliminate.iter().collect();
    match members.len() {
        0 => {}
        1 => out.push(members[0]),
        k => {
            let half = k / 2;
            let mut choose: Vec<usize> = (0..half).collect();
            let mut best = usize::MAX;
            let mut best_first: Option<VertexSet> = None;
            loop {
                let first = VertexSet::from_members(
                    to_eliminate.universe(),
                    choose.iter().map(|&i| members[i]),
                );
                let a = elim_width(ov, within, before, &first, best, 0, stats);
                if a < best {
                    let after = before.union(&first);
                    let rest = to_eliminate.difference(&first);
                    let b = elim_width(ov, within, &after, &rest, best, 0, stats);
                    let w = a.max(b);
                    if w < best {
                        best = w;
                        best_first = Some(first);
                    }
                }
                if !advance_combination(&mut choose, k) {
                    break;
                }
            }
            let first = best_first.expect("some split is optimal");
            let after = before.union(&first);
            let rest = to_eliminate.difference(&first);
            best_elim_order(ov, within, before, &first, out, stats);
            best_elim_order(ov, within, &after, &rest, out, stats);
        }
    }
}

/// Next size-`|choose|` combination of `0..k` in lexicographic order.
fn advance_combination(choose: &mut [usize], k: usize) -> bool {
    let h = choose.len();
    let mut i = h;
    while i > 0 {
        i -= 1;
        if choose[i] < k - (h - i) {
            choose[i] += 1;
            for j in i + 1..h {
                choose[j] = choose[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum width over tree decompositions of `g` in which the clique `k`
/// forms a leaf bag, with the witnessing decomposition. Polynomial space:
/// the ordering search stores only its recursion stack.
pub fn treewidth_leaf_bag(
    g: &Graph,
    k: &VertexSet,
) -> Result<(usize, TreeDecomposition), PolySpaceError> {
    if !g.is_clique(k) {
        return Err(PolySpaceError::NotAClique(k.clone()));
    }
    let mut stats = PolySpaceStats::default();
    let ov = Overlay::none(g);
    let within = g.vertices();
    let rest = k.complement();
    let empty = VertexSet::empty(g.n());
    let mut order = Vec::new();
    best_elim_order(&ov, &within, &empty, &rest, &mut order, &mut stats);
    let td = decomposition_from_order(&ov, &within, &order, k);
    Ok((td.width().max(k.len().saturating_sub(1)), td))
}

/// Standard elimination construction: one bag `{v} ∪ Q(before, v)` per
/// eliminated vertex, each hooked to the bag of its first-eliminated higher
/// neighbor, with the kept clique as the final bag. A duplicate of the
/// clique bag is appended when needed so it is always a leaf of the tree.
fn decomposition_from_order(
    ov: &Overlay<'_>,
    within: &VertexSet,
    order: &[usize],
    kept: &VertexSet,
) -> TreeDecomposition {
    let n = within.universe();
    let mut position = vec![usize::MAX; n];
    for (t, &v) in order.iter().enumerate() {
        position[v] = t;
    }
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let kept_idx = order.len();
    let mut eliminated = VertexSet::empty(n);
    for (t, &v) in order.iter().enumerate() {
        let mut comp = VertexSet::singleton(n, v);
        let mut allowed = eliminated.clone();
        loop {
            let mut next = ov.neighborhood(&comp);
            next.intersect_with(&allowed);
            if next.is_empty() {
                break;
            }
            allowed.subtract(&next);
            comp.union_with(&next);
        }
        let q = ov.neighborhood(&comp).intersection(within);
        bags.push(q.with(v));
        let parent = q
            .iter()
            .filter(|&u| !kept.contains(u))
            .min_by_key(|&u| position[u])
            .map(|u| position[u])
            .unwrap_or(kept_idx);
        edges.push((t, parent));
        eliminated.insert(v);
    }
    bags.push(kept.clone());
    if order.is_empty() {
        return TreeDecomposition::new(n, bags, edges);
    }
    // keep the clique bag a leaf
    let degree = edges.iter().filter(|&&(_, p)| p == kept_idx).count();
    if degree > 1 {
        bags.push(kept.clone());
        edges.push((kept_idx, bags.len() - 1));
        // the original clique node keeps its children; the copy is the leaf
    }
    TreeDecomposition::new(n, bags, edges)
}

/// Stream candidate bags through their vertex representations: connected
/// sets `C ∋ u` with `|C ∪ N(C)| ≤ closed_cap`, reconstructed as
/// `N(C) ∪ {u}` and verified. The same bag may appear once per surviving
/// representation — callers must tolerate repeats, that is the price of
/// keeping no table.
fn bag_candidates(
    g: &Graph,
    closed_cap: usize,
) -> impl Iterator<Item = PotentialMaximalClique> + '_ {
    use crate::enumerate::ConnectedSetQuery;
    (0..g.n()).flat_map(move |u| {
        ConnectedSetQuery::new(g, u)
            .closed_cap(closed_cap)
            .iter()
            .filter_map(move |rec| is_pmc(g, &rec.boundary.with(u)))
    })
}

/// Every potential maximal clique `Ω` such that some component of `G ∖ Ω`
/// has at least `alpha·n` vertices (possibly repeated), streamed in
/// polynomial memory. A bag with a component of size `c` always has a
/// representation whose closed neighborhood avoids that component, so
/// capping closed neighborhoods at `n − ⌈alpha·n⌉` reaches all of them.
pub fn list_pmcs_large_component(
    g: &Graph,
    alpha: Ratio,
) -> impl Iterator<Item = PotentialMaximalClique> + '_ {
    assert!(
        alpha.num > 0 && alpha.num < alpha.den,
        "alpha must be in (0, 1)"
    );
    let n = g.n();
    let large_min = alpha.ceil_of(n).max(1);
    let closed_cap = n.saturating_sub(large_min);
    bag_candidates(g, closed_cap).filter(move |pmc| pmc.max_component_len() >= large_min)
}

/// Score a candidate bag or separator: complete it, split the graph on it,
/// and take the worst leaf-bag width among the pieces. Exact below `cutoff`.
fn score_candidate(
    g: &Graph,
    candidate: &VertexSet,
    cutoff: usize,
    stats: &mut PolySpaceStats,
) -> usize {
    let mut width = candidate.len().saturating_sub(1);
    if width >= cutoff {
        return width;
    }
    let ov = Overlay {
        graph: g,
        clique: candidate.clone(),
    };
    let empty = VertexSet::empty(g.n());
    for comp in g.connected_components(candidate) {
        let within = comp.union(candidate);
        stats.leaf_bag_searches += 1;
        let w = elim_width(&ov, &within, &empty, &comp, cutoff, 0, stats);
        width = width.max(w);
        if width >= cutoff {
            return width;
        }
    }
    width
}

/// Treewidth with polynomial working memory. Disconnected graphs are solved
/// one component at a time.
pub fn treewidth_polyspace(g: &Graph, cfg: PolySpaceConfig) -> usize {
    treewidth_polyspace_with_stats(g, cfg).0
}

pub fn treewidth_polyspace_with_stats(g: &Graph, cfg: PolySpaceConfig) -> (usize, PolySpaceStats) {
    let mut stats = PolySpaceStats::default();
    let mut width = 0;
    for comp in g.connected_components(&VertexSet::empty(g.n())) {
        let (piece, _) = g.induced_subgraph(&comp).expect("nonempty component");
        width = width.max(polyspace_connected(&piece, cfg, &mut stats));
    }
    debug_assert!(stats.max_split_depth <= g.n());
    (width, stats)
}

fn polyspace_connected(g: &Graph, cfg: PolySpaceConfig, stats: &mut PolySpaceStats) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    // the whole vertex set is always a legal bag
    let mut best = n - 1;
    let large_min = cfg.alpha_split.ceil_of(n).max(1);

    // Branch A: bags with a component of at least alpha·n vertices.
    for pmc in list_pmcs_large_component(g, cfg.alpha_split) {
        stats.large_bag_candidates += 1;
        let w = score_candidate(g, pmc.set(), best, stats);
        best = best.min(w);
    }

    // Branch A, complement side: bags whose components are all smaller than
    // alpha·n. Their representations only come with the weakest closed-
    // neighborhood guarantee, so this sweep uses the full cap.
    for pmc in bag_candidates(g, n - 1) {
        if pmc.max_component_len() >= large_min {
            continue;
        }
        stats.small_bag_candidates += 1;
        let w = score_candidate(g, pmc.set(), best, stats);
        best = best.min(w);
    }

    // Branch B: small separators with two large full components.
    let sep_cap = cfg.sep_cap_fraction.floor_of(n);
    use crate::enumerate::{Bound, ConnectedSetQuery};
    for v in 0..n {
        let smaller = VertexSet::from_members(n, 0..v);
        let query = ConnectedSetQuery::new(g, v)
            .boundary(Bound::AtMost(sep_cap))
            .exclude(&smaller)
            .small_side_only();
        for rec in query.iter() {
            let s = rec.boundary;
            if s.is_empty() {
                continue;
            }
            let large = g
                .full_components(&s)
                .iter()
                .filter(|c| c.len() >= large_min)
                .count();
            if large < 2 {
                continue;
            }
            stats.separator_candidates += 1;
            let w = score_candidate(g, &s, best, stats);
            best = best.min(w);
        }
    }
    best
}
