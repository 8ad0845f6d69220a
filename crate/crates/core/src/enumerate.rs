//! Enumeration of connected vertex sets with constrained neighborhoods.
//!
//! The engine walks a branching tree: from a connected set `B` it looks at
//! the active frontier `N(B) ∖ X` (where `X` holds vertices permanently
//! excluded from `B`), and for the frontier vertices `u_1 < u_2 < …` spawns
//! one branch per `u_i` that adds `u_i` to `B` and moves `u_1, …, u_{i-1}`
//! into `X`. Every connected superset of the seed that avoids `X` appears at
//! exactly one node of this tree, so no deduplication is needed.
//!
//! Excluded vertices that already touch `B` can never leave the boundary
//! again; this "committed boundary" drives all pruning. A rooted query with
//! targets `|B| = b+1` and `|N(B)| = f` visits at most `C(b+f, b)` leaves,
//! and enumeration is streaming: memory stays polynomial no matter how many
//! sets are produced.

use crate::graph::Graph;
use crate::set::VertexSet;
use num_bigint::BigUint;

/// A constraint on a cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exactly(usize),
    AtMost(usize),
}

impl Bound {
    #[inline]
    fn limit(self) -> usize {
        match self {
            Bound::Exactly(t) | Bound::AtMost(t) => t,
        }
    }

    #[inline]
    fn admits(self, value: usize) -> bool {
        match self {
            Bound::Exactly(t) => value == t,
            Bound::AtMost(t) => value <= t,
        }
    }
}

/// A connected set together with its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedSetRecord {
    pub set: VertexSet,
    pub boundary: VertexSet,
}

/// A rooted connected-set enumeration, built up with the configuration
/// methods and consumed through [`ConnectedSetQuery::iter`].
///
/// `size` constrains the set cardinality `|B|` directly and `boundary`
/// constrains `|N(B)|` (the rooted helper functions translate from the
/// `b, f` convention where `|B| = b + 1`). Optional extras: an excluded set
/// of vertices that may never join `B`, a cap on `|B| + |N(B)|`, and a
/// "small side" switch restricting output to sets with `2|B| ≤ n − |N(B)|`.
#[derive(Clone)]
pub struct ConnectedSetQuery<'g> {
    graph: &'g Graph,
    root: usize,
    excluded: VertexSet,
    size: Bound,
    boundary: Bound,
    closed_cap: Option<usize>,
    small_side_only: bool,
}

impl<'g> ConnectedSetQuery<'g> {
    pub fn new(graph: &'g Graph, root: usize) -> Self {
        let n = graph.n();
        ConnectedSetQuery {
            graph,
            root,
            excluded: VertexSet::empty(n),
            size: Bound::AtMost(n),
            boundary: Bound::AtMost(n),
            closed_cap: None,
            small_side_only: false,
        }
    }

    pub fn size(mut self, bound: Bound) -> Self {
        self.size = bound;
        self
    }

    pub fn boundary(mut self, bound: Bound) -> Self {
        self.boundary = bound;
        self
    }

    pub fn exclude(mut self, set: &VertexSet) -> Self {
        self.excluded.union_with(set);
        self
    }

    /// Require `|B| + |N(B)| ≤ cap`.
    pub fn closed_cap(mut self, cap: usize) -> Self {
        self.closed_cap = Some(cap);
        self
    }

    /// Only emit sets no larger than half of what is left once their
    /// boundary is removed: `2|B| ≤ n − |N(B)|`. A minimal separator always
    /// has a full component this small, which is what the bounded separator
    /// lister relies on.
    pub fn small_side_only(mut self) -> Self {
        self.small_side_only = true;
        self
    }

    pub fn iter(&self) -> ConnectedSets<'g> {
        ConnectedSets::start(self.clone())
    }
}

struct Frame {
    set: VertexSet,
    boundary: VertexSet,
    /// Vertices excluded from the set; grows as sibling branches spawn.
    excluded: VertexSet,
    frontier: Vec<usize>,
    next: usize,
}

pub struct ConnectedSets<'g> {
    query: ConnectedSetQuery<'g>,
    stack: Vec<Frame>,
    pending: Option<ConnectedSetRecord>,
}

impl<'g> ConnectedSets<'g> {
    fn start(query: ConnectedSetQuery<'g>) -> Self {
        let mut it = ConnectedSets {
            query,
            stack: Vec::new(),
            pending: None,
        };
        let root = it.query.root;
        if root >= it.query.graph.n() || it.query.excluded.contains(root) {
            return it;
        }
        let set = VertexSet::singleton(it.query.graph.n(), root);
        let boundary = it.query.graph.neighbors(root).clone();
        let excluded = it.query.excluded.clone();
        it.pending = it.admit(set, boundary, excluded);
        it
    }

    /// Evaluate a fresh node: emit if it matches, push it if it can still
    /// grow, drop the whole subtree if no descendant can match.
    fn admit(
        &mut self,
        set: VertexSet,
        boundary: VertexSet,
        excluded: VertexSet,
    ) -> Option<ConnectedSetRecord> {
        let q = &self.query;
        let n = q.graph.n();
        let size = set.len();
        let bsize = boundary.len();
        let committed = boundary.intersection_len(&excluded);
        let active = bsize - committed;
        let max_size = q.size.limit();

        // Every emitted descendant keeps at least `committed` boundary
        // vertices plus whatever part of the frontier it cannot absorb.
        let capacity = max_size.saturating_sub(size);
        if committed + active.saturating_sub(capacity) > q.boundary.limit() {
            return None;
        }
        if let Some(cap) = q.closed_cap {
            if size + committed > cap {
                return None;
            }
        }
        if q.small_side_only && 2 * size > n - committed {
            return None;
        }
        if let Bound::Exactly(t) = q.size {
            if size < t && size + active < t {
                // frontier alone cannot finish; count everything reachable
                let reach = self.reachable(&set, &boundary, &excluded);
                if size + reach < t {
                    return None;
                }
            }
        }

        let emit = q.size.admits(size)
            && q.boundary.admits(bsize)
            && q.closed_cap.is_none_or(|cap| size + bsize <= cap)
            && (!q.small_side_only || 2 * size <= n - bsize);
        let record = emit.then(|| ConnectedSetRecord {
            set: set.clone(),
            boundary: boundary.clone(),
        });

        if size < max_size {
            let frontier: Vec<usize> = boundary.difference(&excluded).iter().collect();
            if !frontier.is_empty() {
                self.stack.push(Frame {
                    set,
                    boundary,
                    excluded,
                    frontier,
                    next: 0,
                });
            }
        }
        record
    }

    /// Vertices reachable from the active frontier without entering the set
    /// or the excluded vertices.
    fn reachable(&self, set: &VertexSet, boundary: &VertexSet, excluded: &VertexSet) -> usize {
        let g = self.query.graph;
        let mut allowed = set.union(excluded).complement();
        let mut comp = boundary.difference(excluded);
        allowed.subtract(&comp);
        let mut frontier = comp.clone();
        loop {
            let mut next = g.neighborhood(&frontier);
            next.intersect_with(&allowed);
            if next.is_empty() {
                return comp.len();
            }
            allowed.subtract(&next);
            comp.union_with(&next);
            frontier = next;
        }
    }
}

impl Iterator for ConnectedSets<'_> {
    type Item = ConnectedSetRecord;

    fn next(&mut self) -> Option<ConnectedSetRecord> {
        if let Some(rec) = self.pending.take() {
            return Some(rec);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next >= top.frontier.len() {
                self.stack.pop();
                continue;
            }
            let u = top.frontier[top.next];
            top.next += 1;

            let child_excluded = top.excluded.clone();
            top.excluded.insert(u); // later siblings must avoid u
            let mut child_set = top.set.clone();
            child_set.insert(u);
            let mut child_boundary = top.boundary.union(self.query.graph.neighbors(u));
            child_boundary.subtract(&child_set);

            if let Some(rec) = self.admit(child_set, child_boundary, child_excluded) {
                return Some(rec);
            }
        }
    }
}

/// Connected sets `B ∋ root` with `|B| = b+1` and `|N(B)| = f`, each exactly
/// once. At most `C(b+f, b)` sets exist for any graph and root.
pub fn connected_sets_rooted(
    g: &Graph,
    root: usize,
    b: usize,
    f: usize,
) -> impl Iterator<Item = ConnectedSetRecord> + '_ {
    ConnectedSetQuery::new(g, root)
        .size(Bound::Exactly(b + 1))
        .boundary(Bound::Exactly(f))
        .iter()
}

/// As [`connected_sets_rooted`], but with `|N(B)| ≤ f`.
pub fn connected_sets_rooted_at_most(
    g: &Graph,
    root: usize,
    b: usize,
    f: usize,
) -> impl Iterator<Item = ConnectedSetRecord> + '_ {
    ConnectedSetQuery::new(g, root)
        .size(Bound::Exactly(b + 1))
        .boundary(Bound::AtMost(f))
        .iter()
}

/// Every connected set `B` with `|B| ≤ size_budget + 1` and
/// `|N(B)| ≤ boundary_budget`, each exactly once. Deduplication is by
/// minimum element: the enumeration rooted at `v` forbids all smaller ids.
pub fn connected_sets_all(
    g: &Graph,
    size_budget: usize,
    boundary_budget: usize,
) -> impl Iterator<Item = ConnectedSetRecord> + '_ {
    (0..g.n()).flat_map(move |v| {
        let smaller = VertexSet::from_members(g.n(), 0..v);
        ConnectedSetQuery::new(g, v)
            .size(Bound::AtMost(size_budget + 1))
            .boundary(Bound::AtMost(boundary_budget))
            .exclude(&smaller)
            .iter()
    })
}

/// The binomial `C(b+f, b)`: an upper bound on the number of connected sets
/// any rooted exact query can produce.
pub fn count_bound(b: usize, f: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..b.min(f) {
        acc = acc * (b + f - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_connected_sets;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    fn collect_sorted(it: impl Iterator<Item = ConnectedSetRecord>) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = it.map(|r| r.set).collect();
        v.sort();
        v
    }

    #[test]
    fn rooted_on_a_path() {
        // v1-v2-v3-v4-v5, root v3, |B|=2, |N(B)|=2
        let g = Graph::path(5);
        let got = collect_sorted(connected_sets_rooted(&g, 2, 1, 2));
        assert_eq!(got, vec![set(5, &[1, 2]), set(5, &[2, 3])]);
        assert!(got.len() <= 3); // C(3,1)
        assert_eq!(got, oracle_connected_sets(&g, 2, 1, 2).unwrap());
    }

    #[test]
    fn singleton_query() {
        let g = Graph::petersen();
        for v in 0..10 {
            let got = collect_sorted(connected_sets_rooted(&g, v, 0, g.degree(v)));
            assert_eq!(got, vec![set(10, &[v])]);
        }
    }

    #[test]
    fn rooted_on_k4() {
        let g = Graph::complete(4);
        let recs: Vec<_> = connected_sets_rooted(&g, 0, 1, 2).collect();
        assert_eq!(recs.len(), 3);
        for r in &recs {
            assert_eq!(r.set.len(), 2);
            assert!(r.set.contains(0));
            assert_eq!(r.boundary, g.neighborhood(&r.set));
        }
    }

    #[test]
    fn infeasible_queries_are_empty() {
        let g = Graph::cycle(5);
        assert_eq!(connected_sets_rooted(&g, 0, 5, 0).count(), 0);
        assert_eq!(connected_sets_rooted(&g, 0, 1, 4).count(), 0);
    }

    #[test]
    fn all_small_sets_on_c5() {
        // C5: five singletons and five edges, all with boundary size 2
        let g = Graph::cycle(5);
        let recs: Vec<_> = connected_sets_all(&g, 1, 2).collect();
        assert_eq!(recs.len(), 10);
        let mut seen = std::collections::HashSet::new();
        for r in &recs {
            assert!(r.boundary.len() <= 2);
            assert!(seen.insert(r.set.clone()), "duplicate {:?}", r.set);
        }
    }

    #[test]
    fn unbounded_budgets_list_all_connected_subsets() {
        for g in [Graph::cycle(6), Graph::grid(2, 3), Graph::star(4)] {
            let n = g.n();
            let got = collect_sorted(connected_sets_all(&g, n - 1, n));
            // brute force over all nonempty subsets
            let mut expect = Vec::new();
            for mask in 1u32..(1 << n) {
                let s = VertexSet::from_members(n, (0..n).filter(|i| mask >> i & 1 == 1));
                if g.is_connected_set(&s) {
                    expect.push(s);
                }
            }
            expect.sort();
            assert_eq!(got, expect, "{g:?}");
        }
    }

    #[test]
    fn zero_boundary_budget_yields_components() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let got = collect_sorted(connected_sets_all(&g, 5, 0));
        assert_eq!(got, vec![set(6, &[0, 1, 2]), set(6, &[3, 4]), set(6, &[5])]);
    }

    #[test]
    fn binomial_bound_values() {
        assert_eq!(count_bound(0, 5), BigUint::from(1u32));
        assert_eq!(count_bound(3, 2), BigUint::from(10u32));
        assert_eq!(count_bound(2, 2), BigUint::from(6u32));
        assert_eq!(
            count_bound(20, 20),
            BigUint::parse_bytes(b"137846528820", 10).unwrap()
        );
    }

    #[test]
    fn rooted_matches_oracle_everywhere_small() {
        let graphs = [
            Graph::path(6),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::grid(2, 3),
            Graph::star(5),
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.n();
            for v in 0..n {
                for b in 0..n {
                    for f in 0..=n {
                        let got = collect_sorted(connected_sets_rooted(g, v, b, f));
                        let want = oracle_connected_sets(g, v, b, f).unwrap();
                        assert_eq!(got, want, "{g:?} v={v} b={b} f={f}");
                        let bound = count_bound(b, f);
                        assert!(BigUint::from(got.len()) <= bound);
                    }
                }
            }
        }
    }

    #[test]
    fn boundaries_are_consistent() {
        let g = Graph::petersen();
        for r in connected_sets_all(&g, 3, 4) {
            assert_eq!(r.boundary, g.neighborhood(&r.set), "{:?}", r.set);
            assert!(r.set.is_disjoint(&r.boundary));
            assert!(g.is_connected_set(&r.set));
        }
    }
}
