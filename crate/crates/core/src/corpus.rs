//! Test corpora: an exhaustive catalog of small graphs and seeded random
//! graphs.
//!
//! The catalog holds one representative per isomorphism class, built by
//! vertex augmentation: every graph on `k` vertices arises from a graph on
//! `k−1` vertices plus a neighborhood for the new vertex, so canonicalizing
//! (minimum edge mask over all vertex permutations) and deduplicating level
//! by level enumerates every class exactly once.

use crate::graph::Graph;
use rand::Rng;
use std::sync::OnceLock;

/// Largest vertex count the exhaustive catalog supports.
pub const CATALOG_LIMIT: usize = 7;

const MAX_EDGES: usize = CATALOG_LIMIT * (CATALOG_LIMIT - 1) / 2;

#[inline]
fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(items, k - 1, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(&mut items, k, &mut out);
    out
}

/// For each permutation of `k` vertices, where each edge bit moves.
fn edge_maps(k: usize) -> Vec<[u8; MAX_EDGES]> {
    permutations(k)
        .into_iter()
        .map(|perm| {
            let mut map = [0u8; MAX_EDGES];
            for v in 1..k {
                for u in 0..v {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    map[edge_index(u, v)] = edge_index(a, b) as u8;
                }
            }
            map
        })
        .collect()
}

fn canonical(mut maps_min: u32, mask: u32, maps: &[[u8; MAX_EDGES]]) -> u32 {
    for map in maps {
        let mut remapped = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            remapped |= 1 << map[e];
        }
        maps_min = maps_min.min(remapped);
    }
    maps_min
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if mask >> edge_index(u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("catalog masks are valid")
}

fn build_catalogs() -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<u32>> = vec![vec![0]]; // all graphs on 1 vertex
    for k in 2..=CATALOG_LIMIT {
        let maps = edge_maps(k);
        let mut seen = std::collections::HashSet::new();
        for &small in &levels[k - 2] {
            for nb in 0u32..(1 << (k - 1)) {
                let mut mask = small;
                for u in 0..k - 1 {
                    if nb >> u & 1 == 1 {
                        mask |= 1 << edge_index(u, k - 1);
                    }
                }
                seen.insert(canonical(u32::MAX, mask, &maps));
            }
        }
        let mut level: Vec<u32> = seen.into_iter().collect();
        level.sort_unstable();
        levels.push(level);
    }
    levels
        .iter()
        .enumerate()
        .map(|(i, level)| {
            level
                .iter()
                .map(|&mask| mask_to_graph(i + 1, mask))
                .filter(Graph::is_connected)
                .collect()
        })
        .collect()
}

/// One representative of every connected graph on exactly `n ≤ 7` vertices,
/// up to isomorphism, in a fixed order.
pub fn connected_catalog(n: usize) -> &'static [Graph] {
    assert!(
        (1..=CATALOG_LIMIT).contains(&n),
        "catalog covers 1..={CATALOG_LIMIT} vertices"
    );
    static CATALOGS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &CATALOGS.get_or_init(build_catalogs)[n - 1]
}

/// Erdős–Rényi graph: each pair becomes an edge independently with
/// probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Named instances used by the self-check suite, capped at `max_n` vertices.
pub fn structured_suite(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(Graph::path(n));
        out.push(Graph::complete(n));
        if n >= 3 {
            out.push(Graph::cycle(n));
        }
        if n >= 2 {
            out.push(Graph::star(n - 1));
        }
    }
    for (r, c) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)] {
        if r * c <= max_n {
            out.push(Graph::grid(r, c));
        }
    }
    for (a, b) in [(1, 3), (2, 2), (2, 3), (3, 3), (3, 4)] {
        if a + b <= max_n {
            out.push(Graph::complete_bipartite(a, b));
        }
    }
    if max_n >= 10 {
        out.push(Graph::petersen());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalog_sizes_match_the_known_counts() {
        // connected graphs up to isomorphism on 1..=7 vertices
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_catalog(i + 1).len(), want, "n={}", i + 1);
        }
    }

    #[test]
    fn catalog_members_are_connected_and_distinct() {
        let cat = connected_catalog(5);
        for g in cat {
            assert!(g.is_connected());
            assert_eq!(g.n(), 5);
        }
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let g1 = random_graph(12, 0.4, &mut a);
        let g2 = random_graph(12, 0.4, &mut b);
        assert_eq!(g1, g2);
        assert_eq!(g1.n(), 12);
    }

    #[test]
    fn structured_suite_respects_the_cap() {
        for g in structured_suite(8) {
            assert!(g.n() <= 8);
        }
        assert!(structured_suite(10).iter().any(|g| *g == Graph::petersen()));
    }
}
