//! The recursive solution search.
//!
//! Query vertices are processed in the given order. At each step the query
//! graphlet is substituted with the bindings made so far and unified against
//! the data graphlets; every valid unifier extends the current binding for the
//! next step. A branch whose graphlet never unifies yields nothing
//! (`undefined`); a ground graphlet that unifies passes the binding through.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{Graph, VertexId};
use crate::graphlet::boundary_indices;
use crate::hub_cover::covers;
use crate::ordering::Ordering;

use super::binding::{is_valid_with, Binding};
use super::pattern::{substitute_with, PatternGraphlet, Term};
use super::unify::{unify, Assignment, GraphletView, UnifyMode, UnifyOutcome};

/// A data graphlet over dense vertex indices.
#[derive(Clone, Debug)]
pub(crate) struct IndexedGraphlet {
    hub: u32,
    neighbors: Vec<u32>,
    boundaries: Vec<(u32, u32)>,
}

impl IndexedGraphlet {
    fn new(g: &Graph, hub: u32) -> Self {
        IndexedGraphlet {
            hub,
            neighbors: g.adjacent(hub).to_vec(),
            boundaries: boundary_indices(g, hub),
        }
    }
}

impl GraphletView<u32> for IndexedGraphlet {
    fn hub(&self) -> &u32 {
        &self.hub
    }

    fn neighbors(&self) -> &[u32] {
        &self.neighbors
    }

    fn has_neighbor(&self, v: &u32) -> bool {
        self.neighbors.binary_search(v).is_ok()
    }

    fn has_boundary(&self, a: &u32, b: &u32) -> bool {
        let pair = if a < b { (*a, *b) } else { (*b, *a) };
        self.boundaries.binary_search(&pair).is_ok()
    }

    fn boundary_count(&self) -> usize {
        self.boundaries.len()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchStats {
    /// Unification attempts, one per non-terminal step.
    pub unify_calls: u64,
    /// Unifiers produced, summed over all unification attempts.
    pub partial_generated: u64,
    /// Unifiers that passed the validity check.
    pub valid_partial: u64,
    /// Invocations of the recursive search step, the initial one included.
    pub recursive_calls: u64,
    pub solutions_found: u64,
}

impl Add for SearchStats {
    type Output = SearchStats;

    fn add(self, o: SearchStats) -> SearchStats {
        SearchStats {
            unify_calls: self.unify_calls + o.unify_calls,
            partial_generated: self.partial_generated + o.partial_generated,
            valid_partial: self.valid_partial + o.valid_partial,
            recursive_calls: self.recursive_calls + o.recursive_calls,
            solutions_found: self.solutions_found + o.solutions_found,
        }
    }
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: SearchStats) {
        *self = *self + o;
    }
}

/// Selects one field of [`SearchStats`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Counter {
    UnifyCalls,
    PartialGenerated,
    ValidPartial,
    RecursiveCalls,
    Solutions,
}

impl Counter {
    pub const ALL: [Counter; 5] = [
        Counter::UnifyCalls,
        Counter::PartialGenerated,
        Counter::ValidPartial,
        Counter::RecursiveCalls,
        Counter::Solutions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Counter::UnifyCalls => "unifyCalls",
            Counter::PartialGenerated => "partialGenerated",
            Counter::ValidPartial => "validPartial",
            Counter::RecursiveCalls => "recursiveCalls",
            Counter::Solutions => "solutions",
        }
    }

    pub fn get(self, s: &SearchStats) -> u64 {
        match self {
            Counter::UnifyCalls => s.unify_calls,
            Counter::PartialGenerated => s.partial_generated,
            Counter::ValidPartial => s.valid_partial,
            Counter::RecursiveCalls => s.recursive_calls,
            Counter::Solutions => s.solutions_found,
        }
    }
}

impl FromStr for Counter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Counter::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = Counter::ALL.iter().map(|c| c.name()).collect();
                format!(
                    "unknown counter {s:?}; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

/// Every binding the search formed at a recursive step, plus the empty one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchTrace {
    pub states: BTreeSet<Binding>,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub mode: UnifyMode,
    /// Reject orderings whose vertices do not form a hub cover of the query.
    pub require_cover: bool,
    pub trace: bool,
    pub execution: Execution,
    /// Sibling branches above this depth may be explored concurrently.
    pub parallel_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: UnifyMode::Strict,
            require_cover: true,
            trace: false,
            execution: Execution::default(),
            parallel_depth: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Solutions in canonical order.
    pub solutions: Vec<Binding>,
    pub stats: SearchStats,
    pub trace: Option<SearchTrace>,
    /// The top-level search came back undefined: some graphlet never unified
    /// on any branch.
    pub no_match: bool,
}

type Pairs = Vec<(u32, u32)>;

#[derive(Clone)]
struct State {
    value: Vec<Option<u32>>,
    used: Vec<bool>,
}

impl State {
    fn bind(&mut self, p: &Assignment<u32, u32>) {
        for &(q, d) in p {
            self.value[q as usize] = Some(d);
            self.used[d as usize] = true;
        }
    }

    fn unbind(&mut self, p: &Assignment<u32, u32>) {
        for &(q, d) in p {
            self.value[q as usize] = None;
            self.used[d as usize] = false;
        }
    }

    fn pairs(&self) -> Pairs {
        self.value
            .iter()
            .enumerate()
            .filter_map(|(q, d)| d.map(|d| (q as u32, d)))
            .collect()
    }
}

#[derive(Default)]
struct Collected {
    solutions: Vec<Pairs>,
    stats: SearchStats,
    trace: Option<BTreeSet<Pairs>>,
}

impl Collected {
    fn new(trace: bool) -> Self {
        Collected {
            trace: trace.then(BTreeSet::new),
            ..Default::default()
        }
    }

    fn record(&mut self, state: &State) {
        if let Some(t) = &mut self.trace {
            t.insert(state.pairs());
        }
    }

    fn absorb(&mut self, other: Collected) {
        self.solutions.extend(other.solutions);
        self.stats += other.stats;
        if let (Some(mine), Some(theirs)) = (&mut self.trace, other.trace) {
            mine.extend(theirs);
        }
    }
}

/// A data graph and a query graph compiled for repeated searches.
pub struct Matcher<'g> {
    data: &'g Graph,
    query: &'g Graph,
    data_graphlets: Vec<IndexedGraphlet>,
    query_patterns: Vec<PatternGraphlet<u32, u32>>,
}

struct Plan<'o> {
    order: &'o [u32],
    mode: UnifyMode,
    execution: Execution,
    parallel_depth: usize,
    trace: bool,
}

impl<'g> Matcher<'g> {
    /// Fails if the query has an isolated vertex: no graphlet could bind it.
    pub fn new(data: &'g Graph, query: &'g Graph) -> Result<Self> {
        if let Some(v) = query.isolated_vertices().next() {
            return Err(Error::IsolatedQueryVertex(v.to_string()));
        }
        let data_graphlets = (0..data.vertex_count() as u32)
            .map(|v| IndexedGraphlet::new(data, v))
            .collect();
        let query_patterns = (0..query.vertex_count() as u32)
            .map(|v| {
                let g = IndexedGraphlet::new(query, v);
                PatternGraphlet::new(
                    Term::Variable(g.hub),
                    g.neighbors.iter().map(|&n| Term::Variable(n)).collect(),
                    g.boundaries
                        .iter()
                        .map(|&(a, b)| (Term::Variable(a), Term::Variable(b)))
                        .collect(),
                )
                .expect("graphlet-derived patterns are well formed")
            })
            .collect();
        Ok(Matcher {
            data,
            query,
            data_graphlets,
            query_patterns,
        })
    }

    pub fn data(&self) -> &Graph {
        self.data
    }

    pub fn query(&self) -> &Graph {
        self.query
    }

    pub fn run(&self, ordering: &Ordering, options: &SearchOptions) -> Result<SearchResult> {
        ordering.check_against(self.query)?;
        if options.require_cover && !covers(self.query, &ordering.vertex_set())? {
            return Err(Error::NotHubCover(ordering.to_string()));
        }
        let order: Vec<u32> = ordering
            .as_slice()
            .iter()
            .map(|v| self.query.index_of(v.as_str()).unwrap())
            .collect();
        let plan = Plan {
            order: &order,
            mode: options.mode,
            execution: options.execution,
            parallel_depth: options.parallel_depth,
            trace: options.trace,
        };
        let mut state = State {
            value: vec![None; self.query.vertex_count()],
            used: vec![false; self.data.vertex_count()],
        };
        let mut out = Collected::new(options.trace);
        out.record(&state);
        let defined = self.explore(&plan, 0, &mut state, &mut out);

        let mut solutions: Vec<Binding> = out.solutions.iter().map(|p| self.binding(p)).collect();
        solutions.sort();
        let before = solutions.len();
        solutions.dedup();
        assert_eq!(
            before,
            solutions.len(),
            "search emitted a duplicate solution"
        );
        Ok(SearchResult {
            solutions,
            stats: out.stats,
            trace: out.trace.map(|states| SearchTrace {
                states: states.iter().map(|p| self.binding(p)).collect(),
            }),
            no_match: !defined,
        })
    }

    fn binding(&self, pairs: &[(u32, u32)]) -> Binding {
        let map: BTreeMap<VertexId, VertexId> = pairs
            .iter()
            .map(|&(q, d)| (self.query.label(q).clone(), self.data.label(d).clone()))
            .collect();
        Binding::from_map_unchecked(map)
    }

    /// Returns whether the subtree is defined, i.e. produced at least one solution.
    fn explore(&self, plan: &Plan, depth: usize, state: &mut State, out: &mut Collected) -> bool {
        out.stats.recursive_calls += 1;
        if depth == plan.order.len() {
            out.solutions.push(state.pairs());
            out.stats.solutions_found += 1;
            return true;
        }
        let base = &self.query_patterns[plan.order[depth] as usize];
        let Some(pattern) = substitute_with(base, |&q| state.value[q as usize]) else {
            return false;
        };
        out.stats.unify_calls += 1;
        let outcome = match pattern.hub() {
            Term::Constant(c) => unify(
                std::slice::from_ref(&self.data_graphlets[*c as usize]),
                &pattern,
                plan.mode,
            ),
            Term::Variable(_) => unify(&self.data_graphlets, &pattern, plan.mode),
        };
        match outcome {
            UnifyOutcome::NoMatch => false,
            UnifyOutcome::Ground => self.explore(plan, depth + 1, state, out),
            UnifyOutcome::Partial(unifiers) => {
                out.stats.partial_generated += unifiers.len() as u64;
                let valid: Vec<Assignment<u32, u32>> = unifiers
                    .into_iter()
                    .filter(|p| {
                        is_valid_with(
                            p.iter().map(|(q, d)| (q, d)),
                            |&q| state.value[q as usize].is_some(),
                            |&d| state.used[d as usize],
                        )
                    })
                    .collect();
                out.stats.valid_partial += valid.len() as u64;

                let concurrent = plan.execution == Execution::Parallel
                    && depth < plan.parallel_depth
                    && valid.len() > 1;
                if concurrent {
                    let frozen: &State = state;
                    let branches = plan.execution.map(&valid, |p| {
                        let mut local = frozen.clone();
                        local.bind(p);
                        let mut sub = Collected::new(plan.trace);
                        sub.record(&local);
                        let defined = self.explore(plan, depth + 1, &mut local, &mut sub);
                        (defined, sub)
                    });
                    let mut defined = false;
                    for (d, sub) in branches {
                        defined |= d;
                        out.absorb(sub);
                    }
                    defined
                } else {
                    let mut defined = false;
                    for p in &valid {
                        state.bind(p);
                        out.record(state);
                        defined |= self.explore(plan, depth + 1, state, out);
                        state.unbind(p);
                    }
                    defined
                }
            }
        }
    }
}

/// Runs one search from scratch. Use [`Matcher`] to reuse the compiled graphs.
pub fn find_solutions(
    data: &Graph,
    query: &Graph,
    ordering: &Ordering,
    options: &SearchOptions,
) -> Result<SearchResult> {
    Matcher::new(data, query)?.run(ordering, options)
}

/// Whether `inner` lists a subset of `outer`'s vertices in the same relative order.
pub fn is_inner_ordering(inner: &Ordering, outer: &Ordering) -> bool {
    let mut rest = outer.as_slice().iter();
    inner.as_slice().iter().all(|v| rest.any(|w| w == v))
}
