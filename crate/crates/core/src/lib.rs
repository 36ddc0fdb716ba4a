//! Decide whether a collection of rooted trees is the collection of depth-`h`
//! universal-cover neighborhoods of some simple graph, and build such a graph
//! when it is.
//!
//! Each root-incident edge of each tree gets a type `(r, s)`. The collection
//! is realizable exactly when, for every diagonal type `(r, r)`, the per-vertex
//! counts form a graphical sequence, and for every other type the counts of
//! `(r, s)` and `(s, r)` form a digraphical bi-degree sequence. Realizing each
//! type separately and taking the union of the edge sets gives a simple graph
//! whose cover balls are the input trees.
//!
//! ```
//! use treecover::{realize_neighborhood, verify_realization, RootedTree};
//!
//! let trees: Vec<RootedTree> = vec!["((())(()))".parse().unwrap(); 4];
//! let realization = realize_neighborhood(&trees, 2).unwrap();
//! assert_eq!(realization.graph.edge_count(), 4);
//! assert!(verify_realization(&realization.graph, &trees, 2));
//! ```

pub mod graph;
pub mod oracle;
pub mod random;
pub mod realize;
pub mod sequence;
pub mod tree;
pub mod typing;
pub mod unfold;

pub use graph::{Digraph, GraphError, GraphParseError, SimpleGraph};
pub use realize::{glue, havel_hakimi, kleitman_wang, realize_neighborhood, Part, Realization, RealizeError};
pub use sequence::{
    check_collection, check_neighborhood, erdos_gallai, fulkerson_chen_anstee, FailureKind, FailureRecord,
    SequenceViolation, TypeKey, Verdict,
};
pub use tree::{
    parse_collection, parse_collection_lines, parse_tree, write_collection, CanonCode, CollectionError, ParseError,
    RootedTree,
};
pub use typing::{build_table, edge_type, EdgeType, TypeClass, TypedDegreeTable, TypingError};
pub use unfold::{cover_ball, first_mismatch, neighborhood_collection, verify_realization};

/// Largest depth among `trees`, 0 for an empty collection.
pub fn max_depth(trees: &[RootedTree]) -> usize {
    trees.iter().map(RootedTree::depth).max().unwrap_or(0)
}
