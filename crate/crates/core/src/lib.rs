//! Subgraph matching over graphlet decompositions.
//!
//! Graphs are decomposed into graphlets (a hub vertex, its neighbors, and the
//! edges among those neighbors). A query is answered by picking a minimum hub
//! cover of the query, ordering its graphlets by selectivity, and unifying them
//! one at a time against the data graphlets while extending a partial binding.
//!
//! ```
//! use hubmatch::{find_solutions, parse_edge_list, Ordering, SearchOptions};
//!
//! let data = parse_edge_list("a b\nb c\na c\nc d\n").unwrap();
//! let query = parse_edge_list("1 2\n2 3\n1 3\n").unwrap();
//! let ordering = Ordering::parse("1").unwrap();
//! let result = find_solutions(&data, &query, &ordering, &SearchOptions::default()).unwrap();
//! assert_eq!(result.solutions.len(), 6);
//! ```

pub mod bench;
mod error;
mod exec;
pub mod graph;
pub mod graphlet;
pub mod hub_cover;
pub mod matcher;
pub mod oracle;
pub mod ordering;
pub mod random;
pub mod xml;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{parse_edge_list, to_edge_list, Edge, Graph, VertexId};
pub use graphlet::{graphlet_of, to_graphlets, Graphlet, GraphletMetrics};
pub use hub_cover::{covers, enumerate_minimum_hub_covers, CoverOptions, HubCover};
pub use matcher::{
    find_solutions, Binding, Counter, Matcher, SearchOptions, SearchResult, SearchStats, UnifyMode,
};
pub use oracle::{brute_force_match, OracleLimits};
pub use ordering::{select_best_ordering, Ordering, Selection, SelectionOptions};
pub use xml::{parse_graphlet_xml, to_graphlet_xml};
