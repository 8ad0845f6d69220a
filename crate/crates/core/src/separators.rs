//! Minimal separators: certification and two independent listers.
//!
//! A set `S` is a minimal separator exactly when `G ∖ S` has at least two
//! *full* components — components whose neighborhood is all of `S`. The
//! certificate we carry around is that list of full components.
//!
//! Two listing algorithms are provided and cross-checked in the tests. The
//! primary one saturates a queue: seed separators are read off the
//! components of each `G ∖ N[v]`, and a known generation rule closes the
//! family under "push the separator across one of its vertices". The second
//! lister finds separators of size at most `k` as neighborhoods of small
//! connected sets, driven by the connected-set enumerator.

use crate::enumerate::{Bound, ConnectedSetQuery};
use crate::graph::Graph;
use crate::set::VertexSet;
use std::collections::HashSet;

/// A certified minimal separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSeparator {
    set: VertexSet,
    full_components: Vec<VertexSet>,
}

impl MinimalSeparator {
    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    /// At least two components of `G ∖ S` with neighborhood exactly `S`.
    pub fn full_components(&self) -> &[VertexSet] {
        &self.full_components
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

/// A deduplicated family of minimal separators in canonical order.
#[derive(Clone, Debug)]
pub struct SeparatorFamily {
    members: Vec<MinimalSeparator>,
    size_cap: Option<usize>,
}

impl SeparatorFamily {
    fn from_members(mut members: Vec<MinimalSeparator>, size_cap: Option<usize>) -> Self {
        members.sort_by(|a, b| a.set.cmp(&b.set));
        members.dedup_by(|a, b| a.set == b.set);
        if let Some(k) = size_cap {
            debug_assert!(members.iter().all(|s| s.len() <= k));
        }
        SeparatorFamily { members, size_cap }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn size_cap(&self) -> Option<usize> {
        self.size_cap
    }

    pub fn iter(&self) -> impl Iterator<Item = &MinimalSeparator> {
        self.members.iter()
    }

    /// The separator sets alone, in canonical order.
    pub fn sets(&self) -> impl Iterator<Item = &VertexSet> {
        self.members.iter().map(|m| &m.set)
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.members.binary_search_by(|m| m.set.cmp(set)).is_ok()
    }

    /// Number of separators per size; index `i` counts those with `|S| = i`.
    pub fn size_histogram(&self, n: usize) -> Vec<usize> {
        let mut hist = vec![0; n + 1];
        for m in &self.members {
            hist[m.len()] += 1;
        }
        hist
    }
}

/// Certify `s`: returns the full components when there are at least two.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> Option<MinimalSeparator> {
    let full = g.full_components(s);
    if full.len() >= 2 {
        Some(MinimalSeparator {
            set: s.clone(),
            full_components: full,
        })
    } else {
        None
    }
}

/// List all minimal separators by saturation.
pub fn list_minimal_separators(g: &Graph) -> SeparatorFamily {
    let n = g.n();
    let mut tested: HashSet<VertexSet> = HashSet::new();
    let mut out: Vec<MinimalSeparator> = Vec::new();
    let mut queue: Vec<VertexSet> = Vec::new();

    let mut try_candidate =
        |cand: VertexSet, out: &mut Vec<MinimalSeparator>, queue: &mut Vec<VertexSet>| {
            if tested.insert(cand.clone()) {
                if let Some(ms) = is_minimal_separator(g, &cand) {
                    queue.push(cand);
                    out.push(ms);
                }
            }
        };

    for v in 0..n {
        let closed = g.closed_neighborhood(&VertexSet::singleton(n, v));
        for comp in g.connected_components(&closed) {
            try_candidate(g.neighborhood(&comp), &mut out, &mut queue);
        }
    }

    while let Some(s) = queue.pop() {
        for x in s.iter() {
            let mut blocked = s.union(g.neighbors(x));
            blocked.insert(x);
            for comp in g.connected_components(&blocked) {
                try_candidate(g.neighborhood(&comp), &mut out, &mut queue);
            }
        }
    }

    SeparatorFamily::from_members(out, None)
}

/// List the minimal separators of size at most `k`, as neighborhoods of
/// connected sets. Every minimal separator has a full component covering at
/// most half of the remaining vertices, so the enumeration only needs the
/// small side.
pub fn list_minimal_separators_bounded(g: &Graph, k: usize) -> SeparatorFamily {
    let n = g.n();
    let mut tested: HashSet<VertexSet> = HashSet::new();
    let mut out: Vec<MinimalSeparator> = Vec::new();
    for v in 0..n {
        let smaller = VertexSet::from_members(n, 0..v);
        let query = ConnectedSetQuery::new(g, v)
            .boundary(Bound::AtMost(k))
            .exclude(&smaller)
            .small_side_only();
        for rec in query.iter() {
            if tested.insert(rec.boundary.clone()) {
                if let Some(ms) = is_minimal_separator(g, &rec.boundary) {
                    out.push(ms);
                }
            }
        }
    }
    SeparatorFamily::from_members(out, Some(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_separators;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn certification_examples() {
        // a-b-c-d: {b} splits into {a} and {c,d}, both full
        let p4 = Graph::path(4);
        let cert = is_minimal_separator(&p4, &set(4, &[1])).unwrap();
        assert_eq!(cert.full_components(), &[set(4, &[0]), set(4, &[2, 3])]);

        let c5 = Graph::cycle(5);
        assert!(is_minimal_separator(&c5, &set(5, &[0])).is_none());
        let cert = is_minimal_separator(&c5, &set(5, &[1, 4])).unwrap();
        assert_eq!(cert.full_components(), &[set(5, &[0]), set(5, &[2, 3])]);
    }

    #[test]
    fn listing_small_graphs() {
        assert!(list_minimal_separators(&Graph::complete(6)).is_empty());
        let p4 = list_minimal_separators(&Graph::path(4));
        assert_eq!(
            p4.sets().cloned().collect::<Vec<_>>(),
            vec![set(4, &[1]), set(4, &[2])]
        );
        assert_eq!(list_minimal_separators(&Graph::cycle(5)).len(), 5);
    }

    #[test]
    fn bounded_listing_examples() {
        let c5 = Graph::cycle(5);
        assert!(list_minimal_separators_bounded(&c5, 1).is_empty());
        assert_eq!(list_minimal_separators_bounded(&c5, 2).len(), 5);
        let p4 = Graph::path(4);
        assert_eq!(list_minimal_separators_bounded(&p4, 1).len(), 2);
    }

    fn oracle_family(g: &Graph) -> Vec<VertexSet> {
        oracle_separators(g).unwrap()
    }

    #[test]
    fn both_listers_match_the_oracle() {
        let graphs = [
            Graph::path(6),
            Graph::cycle(6),
            Graph::cycle(7),
            Graph::complete(5),
            Graph::grid(2, 4),
            Graph::grid(3, 3),
            Graph::complete_bipartite(2, 4),
            Graph::star(6),
            Graph::petersen(),
            Graph::from_edges(
                7,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (6, 0),
                ],
            )
            .unwrap(),
            Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap(), // disconnected
            Graph::edgeless(4),
        ];
        for g in &graphs {
            let want = oracle_family(g);
            let sat: Vec<VertexSet> = list_minimal_separators(g).sets().cloned().collect();
            assert_eq!(sat, want, "saturation lister on {g:?}");
            let bounded: Vec<VertexSet> = list_minimal_separators_bounded(g, g.n())
                .sets()
                .cloned()
                .collect();
            assert_eq!(bounded, want, "bounded lister on {g:?}");
            // bounded(k) = filter(|S| ≤ k) for every k
            for k in 0..=g.n() {
                let got: Vec<VertexSet> = list_minimal_separators_bounded(g, k)
                    .sets()
                    .cloned()
                    .collect();
                let filt: Vec<VertexSet> = want.iter().filter(|s| s.len() <= k).cloned().collect();
                assert_eq!(got, filt, "k={k} on {g:?}");
            }
        }
    }

    #[test]
    fn separators_are_truly_minimal() {
        // no proper subset separates the two certified full components
        for g in [Graph::cycle(6), Graph::grid(2, 3), Graph::petersen()] {
            for ms in list_minimal_separators(&g).iter() {
                let a = ms.full_components()[0].first().unwrap();
                let b = ms.full_components()[1].first().unwrap();
                for drop in ms.set().iter() {
                    let sub = ms.set().without(drop);
                    let reach = g.component_of(a, &sub.complement());
                    assert!(
                        reach.contains(b),
                        "{:?} minus {drop} still separates",
                        ms.set()
                    );
                }
            }
        }
    }

    #[test]
    fn histogram_counts_by_size() {
        let hist = list_minimal_separators(&Graph::cycle(5)).size_histogram(5);
        assert_eq!(hist, vec![0, 0, 5, 0, 0, 0]);
    }
}
