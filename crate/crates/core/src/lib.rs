//! Atom-bond connectivity index and Roman domination number of trees, closed
//! form extremal bounds relating the two, and exhaustive verification of those
//! bounds over every non-isomorphic tree up to a configurable order.

pub mod abc;
pub mod bounds;
pub mod edgelist;
pub mod enumerate;
pub mod graph;
pub mod report;
pub mod roman;
pub mod verify;

pub use abc::{abc_index, edge_contribution, AbcError, AbcValue};
pub use bounds::{f_max, f_min, BoundPair, BoundsError};
pub use edgelist::{parse_edgelist, parse_graph, write_edgelist, ParseError};
pub use enumerate::{count_trees, enumerate_trees, EnumError, TreeStream};
pub use graph::{make_path, make_spider, make_star, CanonicalCode, DegreeSequence, Graph, GraphError, Tree};
pub use roman::{
    is_valid_rdf, rdf_weight, roman_bruteforce, roman_path_closed_form, roman_tree_dp,
    RomanAssignment, RomanError, RomanResult,
};
