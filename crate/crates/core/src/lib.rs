//! Exact treewidth through minimal separators and potential maximal cliques.
//!
//! The crate is organized around one enumeration primitive — connected vertex
//! sets with bounded neighborhoods ([`enumerate`]) — from which the separator
//! lister ([`separators`]), the potential-maximal-clique lister ([`pmc`]) and
//! three treewidth pipelines ([`treewidth`], [`polyspace`]) are built. Every
//! family the fast paths produce can be replayed against brute-force ground
//! truth ([`oracle`]) at small sizes.
//!
//! The companion guide under `book/` walks through the concepts; its code
//! snippets are compiled and run as part of this crate's doctests.

pub mod corpus;
pub mod decomposition;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pmc;
pub mod polyspace;
pub mod separators;
pub mod set;
pub mod treewidth;

pub use decomposition::{
    chordal_clique_number, validate_decomposition, validate_triangulation, TreeDecomposition,
};
pub use enumerate::{connected_sets_all, connected_sets_rooted, count_bound, ConnectedSetRecord};
pub use graph::{Graph, GraphError};
pub use pmc::{is_nice_pmc, is_pmc, list_pmcs, PotentialMaximalClique};
pub use polyspace::{treewidth_leaf_bag, treewidth_polyspace, PolySpaceConfig};
pub use separators::{is_minimal_separator, list_minimal_separators, MinimalSeparator};
pub use set::VertexSet;
pub use treewidth::{decide_treewidth_at_most, treewidth_exact, TreewidthResult};

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(graphs, "../../../book/src/graphs.md");
    chapter!(connected_sets, "../../../book/src/connected-sets.md");
    chapter!(separators, "../../../book/src/separators.md");
    chapter!(pmcs, "../../../book/src/pmcs.md");
    chapter!(treewidth_chapter, "../../../book/src/treewidth.md");
    chapter!(polyspace_chapter, "../../../book/src/polyspace.md");
    chapter!(oracles, "../../../book/src/oracles.md");
    chapter!(formats, "../../../book/src/formats.md");
}
