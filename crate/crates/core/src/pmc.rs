//! Potential maximal cliques: verification, niceness, and two enumerators.
//!
//! A vertex set `K` is a potential maximal clique (a maximal clique of some
//! minimal triangulation) exactly when (1) no component of `G ∖ K` is full
//! with respect to `K`, and (2) completing each component neighborhood
//! `S_i = N(C_i)` into a clique makes `K` complete. The component
//! neighborhoods are precisely the minimal separators contained in `K`, and
//! they double as the certificate carried by [`PotentialMaximalClique`].
//!
//! Enumeration runs through *vertex representations*: for `v ∈ Ω`, the
//! component `C_v` of `G ∖ (Ω ∖ {v})` containing `v` reconstructs the whole
//! set as `Ω = N(C_v) ∪ {v}`. Every nice potential maximal clique of size
//! `s` has a representation with `|C_v| ≤ ⌈2(n−s)/3⌉`, which makes the space
//! of candidate representations small enough to sweep.

use crate::enumerate::connected_sets_all;
use crate::graph::Graph;
use crate::separators::{list_minimal_separators, list_minimal_separators_bounded};
use crate::set::VertexSet;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PmcError {
    #[error("separator {0} is not one of the component neighborhoods of {1}")]
    NotAContainedSeparator(VertexSet, VertexSet),
}

/// A verified potential maximal clique with its certificate: the components
/// of `G ∖ Ω` and, in parallel, their neighborhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialMaximalClique {
    set: VertexSet,
    components: Vec<VertexSet>,
    separators: Vec<VertexSet>,
}

impl PotentialMaximalClique {
    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Components of `G ∖ Ω`, ordered by smallest member.
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    /// `separators()[i]` is the neighborhood of `components()[i]`.
    pub fn separators(&self) -> &[VertexSet] {
        &self.separators
    }

    /// The distinct component neighborhoods.
    pub fn distinct_separators(&self) -> Vec<&VertexSet> {
        let mut out: Vec<&VertexSet> = self.separators.iter().collect();
        out.sort();
        out.dedup();
        out
    }

    /// Size of the largest component of `G ∖ Ω`, 0 when there is none.
    pub fn max_component_len(&self) -> usize {
        self.components
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }
}

/// Verify the two defining conditions for `k`; returns the certificate on
/// success. The empty set is never a potential maximal clique.
pub fn is_pmc(g: &Graph, k: &VertexSet) -> Option<PotentialMaximalClique> {
    if k.is_empty() {
        return None;
    }
    let components = g.connected_components(k);
    let separators: Vec<VertexSet> = components.iter().map(|c| g.neighborhood(c)).collect();
    if separators.iter().any(|s| s == k) {
        return None; // full component
    }
    // Non-adjacent pairs inside k must share a component neighborhood.
    for v in k.iter() {
        let mut covered = g.neighbors(v).clone();
        for s in &separators {
            if s.contains(v) {
                covered.union_with(s);
            }
        }
        covered.insert(v);
        if !k.is_subset(&covered) {
            return None;
        }
    }
    Some(PotentialMaximalClique {
        set: k.clone(),
        components,
        separators,
    })
}

/// Is `s` active for `omega`: does leaving `s` uncompleted (while completing
/// every other contained separator) leave `omega` short of a clique?
pub fn is_active_separator(
    g: &Graph,
    omega: &PotentialMaximalClique,
    s: &VertexSet,
) -> Result<bool, PmcError> {
    if !omega.separators.contains(s) {
        return Err(PmcError::NotAContainedSeparator(
            s.clone(),
            omega.set.clone(),
        ));
    }
    let others: Vec<&VertexSet> = omega
        .distinct_separators()
        .into_iter()
        .filter(|t| *t != s)
        .collect();
    for v in omega.set.iter() {
        let mut covered = g.neighbors(v).clone();
        for t in &others {
            if t.contains(v) {
                covered.union_with(t);
            }
        }
        covered.insert(v);
        if !omega.set.is_subset(&covered) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A potential maximal clique is *nice* when one of its contained separators
/// is active.
pub fn is_nice_pmc(g: &Graph, omega: &PotentialMaximalClique) -> bool {
    omega
        .distinct_separators()
        .into_iter()
        .any(|s| is_active_separator(g, omega, s).expect("separator from certificate"))
}

/// The component of `G ∖ (Ω ∖ {v})` containing `v` — the vertex
/// representation of `Ω` at `v`. Reconstruct with `N(C_v) ∪ {v}`.
pub fn vertex_representation(g: &Graph, omega: &VertexSet, v: usize) -> VertexSet {
    debug_assert!(omega.contains(v));
    let mut allowed = omega.complement();
    allowed.insert(v);
    g.component_of(v, &allowed)
}

/// Every nice potential maximal clique (of size at most `size_cap`, when
/// given), deduplicated, in canonical order.
///
/// Candidates are the reconstructions `N(C) ∪ {v}` of connected sets `C ∋ v`.
/// A nice set of size `s` is guaranteed a representation with
/// `|C| − 1 ≤ ⌈2(n−s)/3⌉` (tight on even cycles: the alternating triple of
/// `C_6` has only size-3 representations). Each connected set is swept once;
/// the size filter depends only on `|C|` and `|N(C)|`, so it runs before the
/// inner loop over the choices of `v ∈ C`.
pub fn enumerate_nice_pmcs(g: &Graph, size_cap: Option<usize>) -> Vec<PotentialMaximalClique> {
    let n = g.n();
    if n == 0 || size_cap == Some(0) {
        return Vec::new();
    }
    let global_size = (2 * (n - 1)).div_ceil(3) + 1;
    let boundary_cap = match size_cap {
        Some(k) => k - 1,
        None => n,
    };
    let mut tested: HashSet<VertexSet> = HashSet::new();
    let mut out: Vec<PotentialMaximalClique> = Vec::new();
    for rec in connected_sets_all(g, global_size - 1, boundary_cap) {
        let osize = rec.boundary.len() + 1;
        if size_cap.is_some_and(|k| osize > k) {
            continue;
        }
        // |C| − 1 ≤ ⌈2(n − |Ω|)/3⌉, in integers
        if 3 * (rec.set.len() - 1) > 2 * (n - osize) + 2 {
            continue;
        }
        for v in rec.set.iter() {
            let omega = rec.boundary.with(v);
            if !tested.insert(omega.clone()) {
                continue;
            }
            if let Some(pmc) = is_pmc(g, &omega) {
                if is_nice_pmc(g, &pmc) {
                    out.push(pmc);
                }
            }
        }
    }
    out.sort_by(|a, b| a.set.cmp(&b.set));
    out
}

/// All potential maximal cliques (of size at most `size_cap`, when given),
/// in canonical order.
///
/// Works one vertex at a time along a fixed ordering: the family for the
/// graph induced by the first `i` vertices is assembled from (a) its nice
/// members, (b) the previous family carried over, with and without the new
/// vertex, and (c) each minimal separator of the prefix plus the new vertex.
/// Every candidate is verified before it enters the family, so the three
/// sources only need to be jointly exhaustive, which they are.
pub fn list_pmcs(g: &Graph, size_cap: Option<usize>) -> Vec<PotentialMaximalClique> {
    let n = g.n();
    if n == 0 || size_cap == Some(0) {
        return Vec::new();
    }
    // Ascending degree keeps prefix families small.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let h = g.relabeled(&order);

    // Family over the one-vertex prefix.
    let mut family: Vec<VertexSet> = vec![VertexSet::full(1)];

    for i in 2..=n {
        let prefix = h.induced_prefix(i);
        let new_vertex = i - 1;
        let mut tested: HashSet<VertexSet> = HashSet::new();
        let mut next: Vec<VertexSet> = Vec::new();
        let mut consider = |cand: VertexSet, next: &mut Vec<VertexSet>| {
            if size_cap.is_some_and(|k| cand.len() > k) {
                return;
            }
            if tested.insert(cand.clone()) && is_pmc(&prefix, &cand).is_some() {
                next.push(cand);
            }
        };

        for pmc in enumerate_nice_pmcs(&prefix, size_cap) {
            consider(pmc.set().clone(), &mut next);
        }
        for old in &family {
            let grown = old.resized(i);
            consider(grown.with(new_vertex), &mut next);
            consider(grown, &mut next);
        }
        let seps = match size_cap {
            Some(k) => list_minimal_separators_bounded(&prefix, k - 1),
            None => list_minimal_separators(&prefix),
        };
        for s in seps.sets() {
            consider(s.with(new_vertex), &mut next);
        }
        family = next;
    }

    // Map back to the original labeling and re-certify there.
    let mut out: Vec<PotentialMaximalClique> = family
        .into_iter()
        .map(|set| {
            let original = VertexSet::from_members(n, set.iter().map(|v| order[v]));
            is_pmc(g, &original).expect("relabeled set must stay a potential maximal clique")
        })
        .collect();
    out.sort_by(|a, b| a.set.cmp(&b.set));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_is_nice_pmc, oracle_pmcs, oracle_separators};
    use crate::separators::is_minimal_separator;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    fn small_suite() -> Vec<Graph> {
        vec![
            Graph::path(4),
            Graph::path(6),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete(3),
            Graph::complete(5),
            Graph::star(4),
            Graph::grid(2, 3),
            Graph::grid(3, 3),
            Graph::complete_bipartite(2, 3),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap(), // disconnected
            Graph::edgeless(3),
        ]
    }

    #[test]
    fn verification_examples() {
        let kn = Graph::complete(4);
        let pmc = is_pmc(&kn, &VertexSet::full(4)).unwrap();
        assert!(pmc.components().is_empty());

        let p3 = Graph::path(3);
        assert!(is_pmc(&p3, &set(3, &[1])).is_none()); // two full components
        let pmc = is_pmc(&p3, &set(3, &[0, 1])).unwrap();
        assert_eq!(pmc.components(), &[set(3, &[2])]);
        assert_eq!(pmc.separators(), &[set(3, &[1])]);

        assert!(is_pmc(&p3, &VertexSet::empty(3)).is_none());
    }

    #[test]
    fn verification_matches_oracle_exhaustively() {
        for g in small_suite() {
            let n = g.n();
            let want = oracle_pmcs(&g).unwrap();
            for mask in 1u32..(1 << n) {
                let k = VertexSet::from_members(n, (0..n).filter(|i| mask >> i & 1 == 1));
                assert_eq!(is_pmc(&g, &k).is_some(), want.contains(&k), "{g:?} K={k}");
            }
        }
    }

    #[test]
    fn certificates_carry_minimal_separators() {
        for g in small_suite() {
            for pmc in list_pmcs(&g, None) {
                for (c, s) in pmc.components().iter().zip(pmc.separators()) {
                    assert_eq!(&g.neighborhood(c), s);
                    assert!(
                        is_minimal_separator(&g, s).is_some(),
                        "{g:?} Ω={} S={s}",
                        pmc.set()
                    );
                }
            }
        }
    }

    #[test]
    fn active_separator_example() {
        // P3, Ω = {a,b}: contained separator {b} is not active, Ω not nice
        let p3 = Graph::path(3);
        let pmc = is_pmc(&p3, &set(3, &[0, 1])).unwrap();
        assert_eq!(is_active_separator(&p3, &pmc, &set(3, &[1])), Ok(false));
        assert!(!is_nice_pmc(&p3, &pmc));
        assert!(is_active_separator(&p3, &pmc, &set(3, &[0])).is_err());
    }

    #[test]
    fn niceness_matches_definitional_oracle() {
        for g in small_suite() {
            if g.n() > 8 {
                continue;
            }
            for pmc in list_pmcs(&g, None) {
                assert_eq!(
                    is_nice_pmc(&g, &pmc),
                    oracle_is_nice_pmc(&g, pmc.set()).unwrap(),
                    "{g:?} Ω={}",
                    pmc.set()
                );
            }
        }
    }

    #[test]
    fn vertex_representation_round_trip() {
        for g in small_suite() {
            for pmc in list_pmcs(&g, None) {
                for v in pmc.set().iter() {
                    let c_v = vertex_representation(&g, pmc.set(), v);
                    assert_eq!(
                        &g.neighborhood(&c_v).with(v),
                        pmc.set(),
                        "{g:?} Ω={} v={v}",
                        pmc.set()
                    );
                }
            }
        }
    }

    #[test]
    fn nice_enumeration_matches_brute_force() {
        for g in small_suite() {
            let got: Vec<VertexSet> = enumerate_nice_pmcs(&g, None)
                .into_iter()
                .map(|p| p.set)
                .collect();
            let want: Vec<VertexSet> = oracle_pmcs(&g)
                .unwrap()
                .into_iter()
                .filter(|k| oracle_is_nice_pmc(&g, k).unwrap())
                .collect();
            assert_eq!(got, want, "{g:?}");
        }
    }

    #[test]
    fn listing_matches_oracle_capped_and_uncapped() {
        for g in small_suite() {
            let want = oracle_pmcs(&g).unwrap();
            let got: Vec<VertexSet> = list_pmcs(&g, None).into_iter().map(|p| p.set).collect();
            assert_eq!(got, want, "{g:?}");
            for k in 1..=g.n() {
                let capped: Vec<VertexSet> =
                    list_pmcs(&g, Some(k)).into_iter().map(|p| p.set).collect();
                let filt: Vec<VertexSet> = want.iter().filter(|s| s.len() <= k).cloned().collect();
                assert_eq!(capped, filt, "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn listing_examples() {
        assert_eq!(list_pmcs(&Graph::complete(3), None).len(), 1);
        let p4: Vec<VertexSet> = list_pmcs(&Graph::path(4), None)
            .into_iter()
            .map(|p| p.set)
            .collect();
        assert_eq!(p4, vec![set(4, &[0, 1]), set(4, &[1, 2]), set(4, &[2, 3])]);
        // singleton potential maximal cliques need isolated vertices
        let lone = Graph::edgeless(2);
        let singles: Vec<VertexSet> = list_pmcs(&lone, Some(1))
            .into_iter()
            .map(|p| p.set)
            .collect();
        assert_eq!(singles, vec![set(2, &[0]), set(2, &[1])]);
        assert!(enumerate_nice_pmcs(&Graph::complete(4), Some(1)).is_empty());
    }

    #[test]
    fn every_prefix_family_is_complete() {
        // the incremental lister assembles the family of each prefix graph
        // from three candidate sources; brute force at every prefix guards
        // the case split
        for g in small_suite() {
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.sort_by_key(|&v| (g.degree(v), v));
            let h = g.relabeled(&order);
            for i in 1..=g.n() {
                let prefix = h.induced_prefix(i);
                let got: Vec<VertexSet> = list_pmcs(&prefix, None)
                    .into_iter()
                    .map(|p| p.set)
                    .collect();
                assert_eq!(got, oracle_pmcs(&prefix).unwrap(), "{g:?} prefix {i}");
            }
        }
    }

    #[test]
    fn contained_separators_are_exactly_the_component_neighborhoods() {
        // the certificate's distinct separators agree with a scan of the
        // whole separator family
        for g in small_suite() {
            let delta = oracle_separators(&g).unwrap();
            for pmc in list_pmcs(&g, None) {
                let mut from_scan: Vec<&VertexSet> = delta
                    .iter()
                    .filter(|s| s.is_subset(pmc.set()) && *s != pmc.set())
                    .collect();
                from_scan.sort();
                assert_eq!(
                    pmc.distinct_separators(),
                    from_scan,
                    "{g:?} Ω={}",
                    pmc.set()
                );
            }
        }
    }
}
