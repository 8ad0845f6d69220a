//! Tree decompositions and their validators.

use crate::graph::Graph;
use crate::set::VertexSet;
use thiserror::Error;

/// A tree of bags. `edges` connect bag indices; a decomposition with a single
/// bag has no edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("no bags")]
    NoBags,
    #[error("bag edge ({0}, {1}) out of range")]
    EdgeOutOfRange(usize, usize),
    #[error("bag graph is not a tree")]
    NotATree,
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("edge ({0}, {1}) is in no bag")]
    GraphEdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected in the tree")]
    VertexDisconnected(usize),
}

impl TreeDecomposition {
    pub fn new(n: usize, bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { n, bags, edges }
    }

    /// Single-bag decomposition containing all of `g`.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition {
            n: g.n(),
            bags: vec![g.vertices()],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest bag size minus one. An all-empty decomposition has width 0.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Check the three decomposition axioms against `g`, plus that the bag
    /// graph is in fact a tree.
    pub fn check(&self, g: &Graph) -> Result<(), DecompositionError> {
        if self.bags.is_empty() {
            return Err(DecompositionError::NoBags);
        }
        let b = self.bags.len();
        let mut tree_adj = vec![Vec::new(); b];
        for &(x, y) in &self.edges {
            if x >= b || y >= b || x == y {
                return Err(DecompositionError::EdgeOutOfRange(x, y));
            }
            tree_adj[x].push(y);
            tree_adj[y].push(x);
        }
        if self.edges.len() + 1 != b || !connected_nodes(&tree_adj, (0..b).collect()) {
            return Err(DecompositionError::NotATree);
        }

        let mut covered = VertexSet::empty(self.n);
        for bag in &self.bags {
            covered.union_with(bag);
        }
        if let Some(v) = covered.complement().first() {
            return Err(DecompositionError::VertexUncovered(v));
        }

        for (u, v) in g.edges() {
            if !self
                .bags
                .iter()
                .any(|bag| bag.contains(u) && bag.contains(v))
            {
                return Err(DecompositionError::GraphEdgeUncovered(u, v));
            }
        }

        for v in 0..self.n {
            let nodes: Vec<usize> = (0..b).filter(|&i| self.bags[i].contains(v)).collect();
            if !connected_nodes(&tree_adj, nodes) {
                return Err(DecompositionError::VertexDisconnected(v));
            }
        }
        Ok(())
    }
}

/// Is the sub-forest induced by `nodes` connected (in the bag tree)?
fn connected_nodes(tree_adj: &[Vec<usize>], nodes: Vec<usize>) -> bool {
    let Some(&start) = nodes.first() else {
        return true;
    };
    let allowed: std::collections::HashSet<usize> = nodes.iter().copied().collect();
    let mut seen = std::collections::HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &tree_adj[x] {
            if allowed.contains(&y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == nodes.len()
}

/// Do the three axioms hold for `td` on `g`?
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> bool {
    td.n() == g.n() && td.check(g).is_ok()
}

/// Is `h` a triangulation of `g`: same vertices, a supergraph, and chordal?
pub fn validate_triangulation(g: &Graph, h: &Graph) -> bool {
    h.n() == g.n() && h.is_supergraph_of(g) && h.is_chordal()
}

/// Clique number of a chordal graph, via an elimination ordering.
pub fn chordal_clique_number(h: &Graph) -> Option<usize> {
    let order = h.perfect_elimination_ordering()?;
    if h.n() == 0 {
        return Some(0);
    }
    let mut later = VertexSet::full(h.n());
    let mut best = 1;
    for v in order {
        later.remove(v);
        best = best.max(1 + h.neighbors(v).intersection_len(&later));
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn trivial_decomposition_is_valid() {
        let g = Graph::petersen();
        let td = TreeDecomposition::trivial(&g);
        assert!(validate_decomposition(&g, &td));
        assert_eq!(td.width(), 9);
    }

    #[test]
    fn path_decomposition_of_a_path() {
        // a-b-c-d: bags {ab},{bc},{cd} along a path
        let g = Graph::path(4);
        let td = TreeDecomposition::new(
            4,
            vec![set(4, &[0, 1]), set(4, &[1, 2]), set(4, &[2, 3])],
            vec![(0, 1), (1, 2)],
        );
        assert!(validate_decomposition(&g, &td));
        assert_eq!(td.width(), 1);
    }

    #[test]
    fn missing_edge_coverage_fails() {
        let g = Graph::path(3);
        let td = TreeDecomposition::new(3, vec![set(3, &[0, 1]), set(3, &[2])], vec![(0, 1)]);
        assert_eq!(
            td.check(&g),
            Err(DecompositionError::GraphEdgeUncovered(1, 2))
        );
    }

    #[test]
    fn broken_connectivity_fails() {
        // vertex 0 appears in two bags that are not adjacent
        let g = Graph::path(3);
        let td = TreeDecomposition::new(
            3,
            vec![set(3, &[0, 1]), set(3, &[1, 2]), set(3, &[0, 2])],
            vec![(0, 1), (1, 2)],
        );
        assert_eq!(td.check(&g), Err(DecompositionError::VertexDisconnected(0)));
    }

    #[test]
    fn non_tree_fails() {
        let g = Graph::path(2);
        let td = TreeDecomposition::new(2, vec![set(2, &[0, 1]), set(2, &[0, 1])], vec![]);
        assert_eq!(td.check(&g), Err(DecompositionError::NotATree));
    }

    #[test]
    fn triangulation_checks() {
        let c4 = Graph::cycle(4);
        let with_diag = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(validate_triangulation(&c4, &with_diag));
        assert!(!validate_triangulation(&c4, &c4));
        assert_eq!(chordal_clique_number(&with_diag), Some(3));
        assert_eq!(chordal_clique_number(&Graph::complete(5)), Some(5));
        assert_eq!(chordal_clique_number(&Graph::cycle(5)), None);
    }
}
