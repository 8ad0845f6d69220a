//! Simple undirected graphs with bitset adjacency.
//!
//! A [`Graph`] is immutable after construction: every operation that "changes"
//! a graph (inducing a subgraph, completing a set into a clique, relabeling)
//! returns a new one. Vertices are dense ids `0..n`.

use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("induced subgraph of an empty vertex set")]
    EmptyVertexSet,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list. Duplicate edges are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, m, adj })
    }

    /// A graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph::from_edges(n, []).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `N(S)`: vertices outside `S` adjacent to something in `S`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.subtract(s);
        out
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Connected component of `start` inside the induced subgraph on
    /// `allowed` (which must contain `start`).
    pub fn component_of(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let mut comp = VertexSet::singleton(self.n, start);
        let mut frontier = comp.clone();
        loop {
            let mut next = self.neighborhood(&frontier);
            next.intersect_with(allowed);
            next.subtract(&comp);
            if next.is_empty() {
                return comp;
            }
            comp.union_with(&next);
            frontier = next;
        }
    }

    /// Connected components of `G ∖ forbidden`, ordered by smallest member.
    pub fn connected_components(&self, forbidden: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = forbidden.complement();
        let mut comps = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.component_of(v, &remaining);
            remaining.subtract(&comp);
            comps.push(comp);
        }
        comps
    }

    /// Components `C` of `G ∖ separator` with `N(C) = separator`, ordered by
    /// smallest member.
    pub fn full_components(&self, separator: &VertexSet) -> Vec<VertexSet> {
        self.connected_components(separator)
            .into_iter()
            .filter(|c| &self.neighborhood(c) == separator)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components(&VertexSet::empty(self.n)).len() == 1
    }

    /// Is `G[w]` connected? Empty sets are not considered connected.
    pub fn is_connected_set(&self, w: &VertexSet) -> bool {
        match w.first() {
            None => false,
            Some(v) => self.component_of(v, w) == *w,
        }
    }

    /// Is `G[w]` complete? Sets of size at most one count as cliques.
    pub fn is_clique(&self, w: &VertexSet) -> bool {
        w.iter().all(|v| {
            let mut missing = w.clone();
            missing.subtract(&self.adj[v]);
            missing.remove(v);
            missing.is_empty()
        })
    }

    /// The subgraph induced by `w`, plus the map from new ids back to old.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if w.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let old_ids: Vec<usize> = w.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let k = old_ids.len();
        let mut adj = vec![VertexSet::empty(k); k];
        for (i, &v) in old_ids.iter().enumerate() {
            for u in self.adj[v].intersection(w).iter() {
                adj[i].insert(new_id[u]);
            }
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok((Graph { n: k, m, adj }, old_ids))
    }

    /// The subgraph induced by the first `count` vertex ids. Ids are stable,
    /// so sets over the prefix graph embed into later prefixes by resizing.
    pub fn induced_prefix(&self, count: usize) -> Graph {
        assert!(count <= self.n);
        let keep = VertexSet::full(count).resized(self.n);
        let adj: Vec<VertexSet> = (0..count)
            .map(|v| self.adj[v].intersection(&keep).resized(count))
            .collect();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { n: count, m, adj }
    }

    /// Relabel so that new vertex `i` is old vertex `order[i]`.
    pub fn relabeled(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![VertexSet::empty(self.n); self.n];
        for (i, &v) in order.iter().enumerate() {
            for u in self.adj[v].iter() {
                adj[i].insert(new_id[u]);
            }
        }
        Graph {
            n: self.n,
            m: self.m,
            adj,
        }
    }

    /// A copy with `set` completed into a clique.
    pub fn completed(&self, set: &VertexSet) -> Graph {
        let mut adj = self.adj.clone();
        for v in set.iter() {
            adj[v].union_with(set);
            adj[v].remove(v);
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { n: self.n, m, adj }
    }

    /// Does this graph contain every edge of `other` (same vertex count)?
    pub fn is_supergraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| other.adj[v].is_subset(&self.adj[v]))
    }

    /// An elimination ordering that certifies chordality, if one exists.
    ///
    /// Runs maximum-cardinality search and checks the resulting ordering;
    /// the check fails exactly when the graph has a chordless cycle.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut unnumbered = VertexSet::full(n);
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = unnumbered
                .iter()
                .max_by_key(|&v| (weight[v], n - v))
                .expect("unnumbered vertex");
            visit.push(v);
            unnumbered.remove(v);
            for u in self.adj[v].intersection(&unnumbered).iter() {
                weight[u] += 1;
            }
        }
        // Eliminating in reverse visit order must leave, for every vertex,
        // its not-yet-eliminated neighbors forming a clique.
        visit.reverse();
        let mut later = VertexSet::full(n);
        for &v in &visit {
            later.remove(v);
            let back = self.adj[v].intersection(&later);
            if !self.is_clique(&back) {
                return None;
            }
        }
        Some(visit)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.m)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

// Named instances used throughout the tests and the guide.
impl Graph {
    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Complete bipartite graph `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// Star with `leaves` leaves; vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// `rows × cols` grid; vertex `(r, c)` has id `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let id = r * cols + c;
                if c + 1 < cols {
                    edges.push((id, id + 1));
                }
                if r + 1 < rows {
                    edges.push((id, id + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, edges).unwrap()
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner 5-star 5..9.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        ));
        // duplicates collapse
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn neighborhood_on_paths() {
        // a - b - c - d
        let g = Graph::path(4);
        assert_eq!(g.neighborhood(&set(4, &[1])), set(4, &[0, 2]));
        assert_eq!(g.neighborhood(&set(4, &[1, 2])), set(4, &[0, 3]));
        assert_eq!(g.neighborhood(&VertexSet::empty(4)), VertexSet::empty(4));
        let k5 = Graph::complete(5);
        assert_eq!(k5.neighborhood(&set(5, &[0, 3])), set(5, &[1, 2, 4]));
    }

    #[test]
    fn components_split_cycles_and_paths() {
        let c5 = Graph::cycle(5);
        let comps = c5.connected_components(&set(5, &[0, 2]));
        assert_eq!(comps, vec![set(5, &[1]), set(5, &[3, 4])]);
        assert!(Graph::path(4).connected_components(&set(4, &[1])).len() == 2);
        assert!(c5.connected_components(&VertexSet::full(5)).is_empty());
    }

    #[test]
    fn full_components_match_definition() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.full_components(&set(5, &[0, 2])).len(), 2);
        // a-b-c-d with S={a,c}: {b} is full, {d} sees only c
        let p4 = Graph::path(4);
        assert_eq!(p4.full_components(&set(4, &[0, 2])), vec![set(4, &[1])]);
        // empty separator of a connected graph: the single component is full
        let k4 = Graph::complete(4);
        assert_eq!(k4.full_components(&VertexSet::empty(4)).len(), 1);
    }

    #[test]
    fn clique_checks() {
        let k4 = Graph::complete(4);
        assert!(k4.is_clique(&set(4, &[0, 1, 3])));
        let c5 = Graph::cycle(5);
        assert!(!c5.is_clique(&set(5, &[0, 2])));
        assert!(c5.is_clique(&VertexSet::empty(5)));
        assert!(c5.is_clique(&set(5, &[3])));
    }

    #[test]
    fn chordality() {
        assert!(Graph::path(6).is_chordal());
        assert!(Graph::star(4).is_chordal());
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(6).is_chordal());
        // C4 plus a diagonal is chordal
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(g.is_chordal());
        assert!(Graph::complete(5).is_chordal());
        assert!(!Graph::petersen().is_chordal());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let (h, map) = k4.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert_eq!(h, k4);
        assert_eq!(map, vec![0, 1, 2, 3]);

        let c5 = Graph::cycle(5);
        let (h, _) = c5.induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
        assert_eq!(h, Graph::path(3));

        // one 5-cycle of the Petersen graph induces C5
        let (h, _) = Graph::petersen()
            .induced_subgraph(&set(10, &[0, 1, 2, 3, 4]))
            .unwrap();
        assert_eq!(h, Graph::cycle(5));

        assert!(c5.induced_subgraph(&VertexSet::empty(5)).is_err());
    }

    #[test]
    fn prefix_and_relabel() {
        let g = Graph::path(5);
        assert_eq!(g.induced_prefix(3), Graph::path(3));
        let r = g.relabeled(&[4, 3, 2, 1, 0]);
        assert_eq!(r, Graph::path(5));
        let s = Graph::star(3).relabeled(&[3, 0, 1, 2]);
        // center moved to id 1
        assert_eq!(s.degree(1), 3);
    }

    #[test]
    fn completion_adds_clique() {
        let p4 = Graph::path(4);
        let h = p4.completed(&set(4, &[0, 2, 3]));
        assert!(h.has_edge(0, 2) && h.has_edge(0, 3) && h.has_edge(2, 3));
        assert!(h.is_supergraph_of(&p4));
        assert_eq!(h.m(), 5);
    }
}
