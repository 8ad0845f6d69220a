//! Brute-force ground truth for everything the fast paths enumerate.
//!
//! The oracles work on raw `u32` adjacency masks and deliberately share no
//! code with the modules they validate; they are exhaustive over their search
//! spaces and only feasible on small graphs. Results come back as
//! [`VertexSet`]s so tests can compare families directly.

use crate::graph::Graph;
use crate::set::VertexSet;
use thiserror::Error;

/// Largest `n` accepted by the family oracles (subset scans over `2^n`).
pub const FAMILY_LIMIT: usize = 14;
/// Largest `n` accepted by the subset-DP treewidth oracle.
pub const TREEWIDTH_LIMIT: usize = 20;
/// Largest set that the ordering-search oracles will eliminate.
pub const ORDERING_LIMIT: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph with {0} vertices exceeds oracle limit {1}")]
    TooLarge(usize, usize),
}

fn adj_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect()
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_members(n, bits(mask))
}

/// Component of `start` within `allowed` (which must contain `start`).
fn spread(adj: &[u32], start: usize, allowed: u32) -> u32 {
    let mut comp = 1u32 << start;
    loop {
        let mut next = 0;
        for v in bits(comp) {
            next |= adj[v];
        }
        next &= allowed & !comp;
        if next == 0 {
            return comp;
        }
        comp |= next;
    }
}

fn neighborhood(adj: &[u32], mask: u32) -> u32 {
    let mut nb = 0;
    for v in bits(mask) {
        nb |= adj[v];
    }
    nb & !mask
}

fn components(adj: &[u32], n: usize, forbidden: u32) -> Vec<u32> {
    let full = if n == 32 { !0 } else { (1u32 << n) - 1 };
    let mut rest = full & !forbidden;
    let mut out = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = spread(adj, v, rest);
        rest &= !comp;
        out.push(comp);
    }
    out
}

/// Exact treewidth by dynamic programming over all vertex subsets: a subset
/// records the cheapest way to eliminate exactly those vertices first.
pub fn oracle_treewidth(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > TREEWIDTH_LIMIT {
        return Err(OracleError::TooLarge(n, TREEWIDTH_LIMIT));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = adj_masks(g);
    let full = (1u32 << n) - 1;
    let mut dp = vec![u8::MAX; 1usize << n];
    dp[0] = 0;
    for mask in 1..=full {
        let mut best = u8::MAX;
        for v in bits(mask) {
            let rest = mask & !(1 << v);
            // degree of v once `rest` is eliminated: neighbors of the
            // component of v inside rest ∪ {v}
            let comp = spread(&adj, v, rest | (1 << v));
            let q = neighborhood(&adj, comp).count_ones() as u8;
            best = best.min(dp[rest as usize].max(q));
        }
        dp[mask as usize] = best;
    }
    Ok(dp[full as usize] as usize)
}

/// Smallest elimination width over all orderings of `to_eliminate`, where
/// `present` holds every vertex not yet eliminated. Eliminating `v` connects
/// its surviving neighbors; branch-and-bound keeps the search tractable.
fn min_elim_width(
    adj: &mut [u32],
    present: u32,
    to_eliminate: u32,
    width_so_far: usize,
    best: &mut usize,
) {
    if to_eliminate == 0 {
        *best = (*best).min(width_so_far);
        return;
    }
    if width_so_far >= *best {
        return;
    }
    for v in bits(to_eliminate) {
        let nb = adj[v] & present & !(1 << v);
        let w = width_so_far.max(nb.count_ones() as usize);
        if w >= *best {
            continue;
        }
        let saved: Vec<(usize, u32)> = bits(nb).map(|u| (u, adj[u])).collect();
        for u in bits(nb) {
            adj[u] |= nb & !(1 << u);
        }
        min_elim_width(adj, present & !(1 << v), to_eliminate & !(1 << v), w, best);
        for (u, a) in saved {
            adj[u] = a;
        }
    }
}

fn all_mask(n: usize) -> u32 {
    if n == 32 {
        !0
    } else {
        (1u32 << n) - 1
    }
}

/// Exact treewidth by exhaustive (pruned) search over elimination orderings.
/// Validates [`oracle_treewidth`] on very small graphs.
pub fn oracle_treewidth_orderings(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > ORDERING_LIMIT {
        return Err(OracleError::TooLarge(n, ORDERING_LIMIT));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut adj = adj_masks(g);
    let mut best = n; // width never exceeds n − 1
    min_elim_width(&mut adj, all_mask(n), all_mask(n), 0, &mut best);
    Ok(best)
}

/// Minimum width over decompositions of `g` in which the clique `k` appears
/// as a bag, found by ordering search over the other vertices.
pub fn oracle_leaf_bag_width(g: &Graph, k: &VertexSet) -> Result<usize, OracleError> {
    let n = g.n();
    if n > 32 {
        return Err(OracleError::TooLarge(n, 32));
    }
    let kmask = k.iter().fold(0u32, |m, v| m | 1 << v);
    let eliminate = all_mask(n) & !kmask;
    if eliminate.count_ones() as usize > ORDERING_LIMIT {
        return Err(OracleError::TooLarge(
            eliminate.count_ones() as usize,
            ORDERING_LIMIT,
        ));
    }
    let mut adj = adj_masks(g);
    for v in bits(kmask) {
        adj[v] |= kmask & !(1 << v);
    }
    let mut best = n.max(1);
    min_elim_width(&mut adj, all_mask(n), eliminate, 0, &mut best);
    if eliminate == 0 {
        best = 0;
    }
    Ok(best.max(k.len().saturating_sub(1)))
}

/// All minimal separators, by scanning every vertex subset for two full
/// components.
pub fn oracle_separators(g: &Graph) -> Result<Vec<VertexSet>, OracleError> {
    let n = g.n();
    if n > FAMILY_LIMIT {
        return Err(OracleError::TooLarge(n, FAMILY_LIMIT));
    }
    let adj = adj_masks(g);
    let mut out = Vec::new();
    for s in 0..=all_mask(n) {
        let full = components(&adj, n, s)
            .into_iter()
            .filter(|&c| neighborhood(&adj, c) == s)
            .count();
        if full >= 2 {
            out.push(to_set(n, s));
        }
    }
    out.sort();
    Ok(out)
}

/// All potential maximal cliques, by testing the two defining conditions on
/// every nonempty subset: no full component, and every non-edge inside the
/// set covered by some component neighborhood.
pub fn oracle_pmcs(g: &Graph) -> Result<Vec<VertexSet>, OracleError> {
    let n = g.n();
    if n > FAMILY_LIMIT {
        return Err(OracleError::TooLarge(n, FAMILY_LIMIT));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = adj_masks(g);
    let mut out = Vec::new();
    for k in 1..=all_mask(n) {
        let comps = components(&adj, n, k);
        let seps: Vec<u32> = comps.iter().map(|&c| neighborhood(&adj, c)).collect();
        if seps.contains(&k) {
            continue; // a full component
        }
        let mut complete = true;
        'pairs: for u in bits(k) {
            for w in bits(k) {
                if w <= u || adj[u] & (1 << w) != 0 {
                    continue;
                }
                let covered = seps.iter().any(|&s| s & (1 << u) != 0 && s & (1 << w) != 0);
                if !covered {
                    complete = false;
                    break 'pairs;
                }
            }
        }
        if complete {
            out.push(to_set(n, k));
        }
    }
    out.sort();
    Ok(out)
}

/// Rooted connected-set family: connected `B ∋ v` with `|B| = b+1` and
/// `|N(B)| = f`, by scanning all subsets.
pub fn oracle_connected_sets(
    g: &Graph,
    v: usize,
    b: usize,
    f: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    let n = g.n();
    if n > FAMILY_LIMIT {
        return Err(OracleError::TooLarge(n, FAMILY_LIMIT));
    }
    let adj = adj_masks(g);
    let mut out = Vec::new();
    for mask in 1..=all_mask(n) {
        if mask & (1 << v) == 0 || mask.count_ones() as usize != b + 1 {
            continue;
        }
        if spread(&adj, v, mask) != mask {
            continue;
        }
        if neighborhood(&adj, mask).count_ones() as usize == f {
            out.push(to_set(n, mask));
        }
    }
    out.sort();
    Ok(out)
}

/// Literal niceness test for a potential maximal clique: some contained
/// minimal separator is *active*, i.e. completing all the others does not
/// already make the set a clique.
pub fn oracle_is_nice_pmc(g: &Graph, omega: &VertexSet) -> Result<bool, OracleError> {
    let contained: Vec<VertexSet> = oracle_separators(g)?
        .into_iter()
        .filter(|s| s.is_subset(omega) && s != omega)
        .collect();
    let omask = omega.iter().fold(0u32, |m, v| m | 1 << v);
    for s in &contained {
        let mut adj = adj_masks(g);
        for t in contained.iter().filter(|t| *t != s) {
            let tmask = t.iter().fold(0u32, |m, v| m | 1 << v);
            for v in bits(tmask) {
                adj[v] |= tmask & !(1 << v);
            }
        }
        let clique = bits(omask).all(|v| omask & !adj[v] & !(1 << v) == 0);
        if !clique {
            return Ok(true);
        }
    }
    Ok(false)
}

/// What an oracle computed and how; the `method` is always an exhaustive
/// scan of the stated search space.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub quantity: &'static str,
    pub value: OracleValue,
    pub method: &'static str,
    pub n_limit: usize,
}

#[derive(Debug, Clone)]
pub enum OracleValue {
    Width(usize),
    Family(Vec<VertexSet>),
}

impl OracleReport {
    pub fn treewidth(g: &Graph) -> Result<Self, OracleError> {
        Ok(OracleReport {
            quantity: "treewidth",
            value: OracleValue::Width(oracle_treewidth(g)?),
            method: "dynamic program over all vertex subsets",
            n_limit: TREEWIDTH_LIMIT,
        })
    }

    pub fn separators(g: &Graph) -> Result<Self, OracleError> {
        Ok(OracleReport {
            quantity: "minimal separators",
            value: OracleValue::Family(oracle_separators(g)?),
            method: "full-component test on every vertex subset",
            n_limit: FAMILY_LIMIT,
        })
    }

    pub fn pmcs(g: &Graph) -> Result<Self, OracleError> {
        Ok(OracleReport {
            quantity: "potential maximal cliques",
            value: OracleValue::Family(oracle_pmcs(g)?),
            method: "two-condition test on every vertex subset",
            n_limit: FAMILY_LIMIT,
        })
    }

    pub fn connected_sets(g: &Graph, v: usize, b: usize, f: usize) -> Result<Self, OracleError> {
        Ok(OracleReport {
            quantity: "rooted connected sets",
            value: OracleValue::Family(oracle_connected_sets(g, v, b, f)?),
            method: "connectivity and boundary test on every vertex subset",
            n_limit: FAMILY_LIMIT,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn treewidth_of_named_graphs() {
        assert_eq!(oracle_treewidth(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(oracle_treewidth(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(oracle_treewidth(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(oracle_treewidth(&Graph::path(7)).unwrap(), 1);
        assert_eq!(oracle_treewidth(&Graph::grid(2, 3)).unwrap(), 2);
        assert_eq!(oracle_treewidth(&Graph::grid(3, 3)).unwrap(), 3);
        assert_eq!(oracle_treewidth(&Graph::petersen()).unwrap(), 4);
        assert_eq!(oracle_treewidth(&Graph::star(6)).unwrap(), 1);
        assert_eq!(oracle_treewidth(&Graph::edgeless(4)).unwrap(), 0);
    }

    #[test]
    fn the_two_treewidth_oracles_agree() {
        let graphs = [
            Graph::path(6),
            Graph::cycle(7),
            Graph::complete(6),
            Graph::grid(2, 4),
            Graph::complete_bipartite(3, 4),
            Graph::star(7),
            Graph::edgeless(5),
        ];
        for g in &graphs {
            assert_eq!(
                oracle_treewidth(g).unwrap(),
                oracle_treewidth_orderings(g).unwrap(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn separators_of_small_graphs() {
        assert!(oracle_separators(&Graph::complete(4)).unwrap().is_empty());
        assert_eq!(
            oracle_separators(&Graph::path(4)).unwrap(),
            vec![set(4, &[1]), set(4, &[2])]
        );
        assert_eq!(oracle_separators(&Graph::cycle(5)).unwrap().len(), 5);
        // the empty set separates a disconnected graph
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(oracle_separators(&two_edges)
            .unwrap()
            .contains(&VertexSet::empty(4)));
    }

    #[test]
    fn pmcs_of_small_graphs() {
        assert_eq!(
            oracle_pmcs(&Graph::complete(4)).unwrap(),
            vec![VertexSet::full(4)]
        );
        assert_eq!(
            oracle_pmcs(&Graph::path(4)).unwrap(),
            vec![set(4, &[0, 1]), set(4, &[1, 2]), set(4, &[2, 3])]
        );
        assert_eq!(
            oracle_pmcs(&Graph::complete(3)).unwrap(),
            vec![VertexSet::full(3)]
        );
        // P3: {b} has two full components; {a,b} works
        let p3 = Graph::path(3);
        let pmcs = oracle_pmcs(&p3).unwrap();
        assert!(!pmcs.contains(&set(3, &[1])));
        assert!(pmcs.contains(&set(3, &[0, 1])));
    }

    #[test]
    fn connected_set_examples() {
        let p5 = Graph::path(5);
        assert_eq!(
            oracle_connected_sets(&p5, 2, 1, 2).unwrap(),
            vec![set(5, &[1, 2]), set(5, &[2, 3])]
        );
        let petersen = Graph::petersen();
        assert_eq!(
            oracle_connected_sets(&petersen, 0, 0, 3).unwrap(),
            vec![set(10, &[0])]
        );
        let k4 = Graph::complete(4);
        assert_eq!(oracle_connected_sets(&k4, 0, 1, 2).unwrap().len(), 3);
        assert!(oracle_connected_sets(&k4, 0, 4, 0).unwrap().is_empty());
    }

    #[test]
    fn leaf_bag_width_examples() {
        let p4 = Graph::path(4);
        assert_eq!(oracle_leaf_bag_width(&p4, &set(4, &[0])).unwrap(), 1);
        assert_eq!(oracle_leaf_bag_width(&p4, &VertexSet::full(4)).unwrap(), 3);
        // completing a non-adjacent pair of C5 and forcing it as a bag
        let c5 = Graph::cycle(5).completed(&set(5, &[0, 2]));
        assert_eq!(oracle_leaf_bag_width(&c5, &set(5, &[0, 2])).unwrap(), 2);
    }

    #[test]
    fn niceness_is_definitional() {
        // P3, Ω={a,b}: the only contained separator {b} is not active
        let p3 = Graph::path(3);
        assert!(!oracle_is_nice_pmc(&p3, &set(3, &[0, 1])).unwrap());
    }

    #[test]
    fn limits_are_enforced() {
        let big = Graph::edgeless(15);
        assert!(oracle_separators(&big).is_err());
        assert!(oracle_pmcs(&big).is_err());
        assert!(oracle_connected_sets(&big, 0, 1, 1).is_err());
        assert!(oracle_treewidth(&Graph::edgeless(21)).is_err());
    }
}
