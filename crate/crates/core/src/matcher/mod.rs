//! Subgraph matching by graphlet unification.

mod binding;
mod pattern;
mod search;
mod unify;

pub use binding::{is_valid, is_valid_with, Binding};
pub use pattern::{substitute, substitute_with, PatternGraphlet, Term, TermPair};
pub use search::{
    find_solutions, is_inner_ordering, Counter, Matcher, SearchOptions, SearchResult, SearchStats,
    SearchTrace,
};
pub use unify::{
    candidate_filter, passes_filter, unify, unify_one, Assignment, GraphletView, UnifyMode,
    UnifyOutcome,
};
