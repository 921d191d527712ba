//! Processing orders for query graphlets: selectivity scoring, connectivity,
//! greedy selection of a hub cover and its order, and ordering enumeration
//! for benchmarks.

use std::cmp::Ordering as CmpOrdering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::{Itertools, Permutations};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::graphlet::{graphlet_of, Graphlet, GraphletMetrics};
use crate::hub_cover::HubCover;

/// A sequence of distinct query vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordering(Vec<VertexId>);

impl Ordering {
    pub fn new(sequence: Vec<VertexId>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &sequence {
            if !seen.insert(v) {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
        }
        Ok(Ordering(sequence))
    }

    /// Parses a comma-separated list such as `3,5,8`.
    pub fn parse(spec: &str) -> Result<Self> {
        let sequence = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(VertexId::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(sequence)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.0.iter().cloned().collect()
    }

    /// Comma-joined labels, the inverse of [`Ordering::parse`].
    pub fn joined(&self) -> String {
        self.0.iter().join(",")
    }

    /// Fails if some element is not a vertex of `q`.
    pub fn check_against(&self, q: &Graph) -> Result<()> {
        match self.0.iter().find(|v| !q.contains(v.as_str())) {
            Some(v) => Err(Error::UnknownVertex(v.to_string())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

impl fmt::Debug for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SelectivityKey {
    pub boundary_count: usize,
    pub free_neighbor_count: usize,
}

impl From<GraphletMetrics> for SelectivityKey {
    fn from(m: GraphletMetrics) -> Self {
        SelectivityKey {
            boundary_count: m.boundary_count,
            free_neighbor_count: m.free_neighbor_count,
        }
    }
}

/// `Less` means `a` is more selective and should be processed first.
///
/// More boundaries wins; among equal non-zero boundary counts fewer free
/// neighbors wins; with no boundaries at all, more free neighbors wins.
pub fn compare_selectivity(a: SelectivityKey, b: SelectivityKey) -> CmpOrdering {
    b.boundary_count.cmp(&a.boundary_count).then_with(|| {
        if a.boundary_count == 0 {
            b.free_neighbor_count.cmp(&a.free_neighbor_count)
        } else {
            a.free_neighbor_count.cmp(&b.free_neighbor_count)
        }
    })
}

/// Two graphlets are connected when their vertex sets (hub plus neighbors) meet.
pub fn connected(g1: &Graphlet, g2: &Graphlet) -> bool {
    g1.vertex_set()
        .intersection(&g2.vertex_set())
        .next()
        .is_some()
}

#[derive(Clone, Debug, Default)]
pub struct SelectionOptions {
    /// Optional per-vertex candidate counts from a data-graph statistics
    /// provider. Breaks ties between equal selectivity keys (fewer first)
    /// before the label tie-break.
    pub candidate_counts: Option<BTreeMap<VertexId, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub cover: HubCover,
    pub ordering: Ordering,
    /// One entry per step at which no candidate was connected to the vertices
    /// already ordered.
    pub warnings: Vec<String>,
}

/// Greedy choice of a cover and its order: repeatedly take the most selective
/// graphlet among members of the covers still in play that touches what has
/// been picked so far, dropping covers that lack the pick.
pub fn select_best_ordering(
    q: &Graph,
    covers: &[HubCover],
    options: &SelectionOptions,
) -> Result<Selection> {
    if covers.is_empty() {
        return Err(Error::NoCovers);
    }
    let mut graphlets: BTreeMap<VertexId, Graphlet> = BTreeMap::new();
    for m in covers.iter().flat_map(|c| c.members()) {
        if !graphlets.contains_key(m) {
            graphlets.insert(m.clone(), graphlet_of(q, m.as_str())?);
        }
    }
    let key = |v: &VertexId| SelectivityKey::from(graphlets[v].metrics());
    let count = |v: &VertexId| {
        options
            .candidate_counts
            .as_ref()
            .and_then(|t| t.get(v).copied())
            .unwrap_or(usize::MAX)
    };
    let rank = |a: &&VertexId, b: &&VertexId| {
        compare_selectivity(key(a), key(b))
            .then_with(|| count(a).cmp(&count(b)))
            .then_with(|| a.cmp(b))
    };

    let mut alive: Vec<&HubCover> = covers.iter().collect();
    let mut picked: Vec<VertexId> = Vec::new();
    let mut reached: BTreeSet<VertexId> = BTreeSet::new();
    let mut warnings = Vec::new();

    loop {
        if let Some(done) = alive.iter().find(|c| c.len() == picked.len()) {
            return Ok(Selection {
                cover: (*done).clone(),
                ordering: Ordering(picked),
                warnings,
            });
        }
        let pool: BTreeSet<&VertexId> = alive
            .iter()
            .flat_map(|c| c.members())
            .filter(|m| !picked.contains(m))
            .collect();
        let touching: Vec<&VertexId> = pool
            .iter()
            .copied()
            .filter(|m| {
                picked.is_empty()
                    || graphlets[*m]
                        .vertex_set()
                        .iter()
                        .any(|v| reached.contains(v))
            })
            .collect();
        let candidates = if touching.is_empty() {
            warnings.push(format!(
                "position {}: no remaining candidate is connected to {{{}}}; connectivity ignored",
                picked.len() + 1,
                picked.iter().join(",")
            ));
            pool.into_iter().collect()
        } else {
            touching
        };
        let choice = candidates
            .iter()
            .min_by(|a, b| rank(a, b))
            .copied()
            .cloned()
            .unwrap();
        alive.retain(|c| c.contains(&choice));
        reached.extend(graphlets[&choice].vertex_set());
        picked.push(choice);
    }
}

/// Every order of every cover, deduplicated and sorted.
pub fn enumerate_mhc_orderings(covers: &[HubCover]) -> Vec<Ordering> {
    let all: BTreeSet<Ordering> = covers
        .iter()
        .flat_map(|c| {
            let members: Vec<VertexId> = c.members().iter().cloned().collect();
            let k = members.len();
            members.into_iter().permutations(k).map(Ordering)
        })
        .collect();
    all.into_iter().collect()
}

/// Lazy stream of all permutations of a query's vertices, in lexicographic
/// label order.
pub struct FullOrderings {
    inner: Permutations<std::vec::IntoIter<VertexId>>,
}

impl Iterator for FullOrderings {
    type Item = Ordering;

    fn next(&mut self) -> Option<Ordering> {
        self.inner.next().map(Ordering)
    }
}

pub const DEFAULT_FULL_ORDERING_CAP: usize = 9;

pub fn enumerate_full_orderings(q: &Graph, max_vertices: usize) -> Result<FullOrderings> {
    let n = q.vertex_count();
    if n > max_vertices {
        return Err(Error::Capacity {
            what: "query",
            actual: n,
            limit: max_vertices,
            hint: "sample orderings instead of enumerating them",
        });
    }
    Ok(FullOrderings {
        inner: q.vertices().to_vec().into_iter().permutations(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use crate::hub_cover::{enumerate_minimum_hub_covers, CoverOptions};

    fn query() -> Graph {
        parse_edge_list(include_str!("../../../fixtures/query.edges")).unwrap()
    }

    fn key(b: usize, f: usize) -> SelectivityKey {
        SelectivityKey {
            boundary_count: b,
            free_neighbor_count: f,
        }
    }

    fn ord(s: &str) -> Ordering {
        Ordering::parse(s).unwrap()
    }

    #[test]
    fn selectivity_rules() {
        assert_eq!(compare_selectivity(key(2, 0), key(1, 0)), CmpOrdering::Less);
        assert_eq!(compare_selectivity(key(0, 2), key(0, 1)), CmpOrdering::Less);
        assert_eq!(
            compare_selectivity(key(1, 0), key(1, 0)),
            CmpOrdering::Equal
        );
        assert_eq!(compare_selectivity(key(1, 0), key(1, 2)), CmpOrdering::Less);
        assert_eq!(compare_selectivity(key(1, 2), key(0, 2)), CmpOrdering::Less);
    }

    #[test]
    fn connectivity() {
        let q = query();
        let g = |v: &str| graphlet_of(&q, v).unwrap();
        assert!(!connected(&g("1"), &g("7")));
        assert!(connected(&g("1"), &g("6")));
        assert!(connected(&g("5"), &g("5")));
    }

    #[test]
    fn greedy_on_motivating_query() {
        let q = query();
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let sel = select_best_ordering(&q, &covers, &SelectionOptions::default()).unwrap();
        assert_eq!(sel.ordering, ord("3,6,7"));
        assert_eq!(sel.cover.to_string(), "{3,6,7}");
        assert!(sel.warnings.is_empty());
    }

    #[test]
    fn greedy_single_edge_tie_breaks_by_label() {
        let q = Graph::from_pairs([("u", "v")]);
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let sel = select_best_ordering(&q, &covers, &SelectionOptions::default()).unwrap();
        assert_eq!(sel.ordering, ord("u"));
    }

    #[test]
    fn greedy_path_picks_middle() {
        let q = Graph::from_pairs([("u", "v"), ("v", "w")]);
        let all: Vec<HubCover> = ["u", "v", "w"]
            .iter()
            .filter_map(|m| HubCover::new(&q, [VertexId::new(*m).unwrap()]).ok())
            .collect();
        let sel = select_best_ordering(&q, &all, &SelectionOptions::default()).unwrap();
        assert_eq!(sel.ordering, ord("v"));
    }

    #[test]
    fn candidate_counts_break_key_ties() {
        let q = Graph::from_pairs([("u", "v")]);
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let counts = [("u", 9), ("v", 1)]
            .into_iter()
            .map(|(v, c)| (VertexId::new(v).unwrap(), c))
            .collect();
        let opts = SelectionOptions {
            candidate_counts: Some(counts),
        };
        assert_eq!(
            select_best_ordering(&q, &covers, &opts).unwrap().ordering,
            ord("v")
        );
    }

    #[test]
    fn disconnected_cover_falls_back_with_warning() {
        // two disjoint edges: every cover has one endpoint from each
        let q = Graph::from_pairs([("a", "b"), ("c", "d")]);
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let sel = select_best_ordering(&q, &covers, &SelectionOptions::default()).unwrap();
        assert_eq!(sel.ordering, ord("a,c"));
        assert_eq!(sel.warnings.len(), 1);
    }

    #[test]
    fn empty_covers() {
        assert_eq!(
            select_best_ordering(&query(), &[], &SelectionOptions::default()),
            Err(Error::NoCovers)
        );
    }

    #[test]
    fn mhc_orderings() {
        let q = query();
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let all = enumerate_mhc_orderings(&covers);
        assert_eq!(all.len(), 24);
        assert!(all.contains(&ord("3,5,8")) && all.contains(&ord("7,2,6")));

        let single = HubCover::new(
            &Graph::from_pairs([("u", "v")]),
            [VertexId::new("u").unwrap()],
        )
        .unwrap();
        assert_eq!(enumerate_mhc_orderings(&[single]), vec![ord("u")]);
        let pair = Graph::from_pairs([("a", "x"), ("b", "y")]);
        let cover = HubCover::new(&pair, ["a", "b"].map(|s| VertexId::new(s).unwrap())).unwrap();
        assert_eq!(
            enumerate_mhc_orderings(&[cover]),
            vec![ord("a,b"), ord("b,a")]
        );
    }

    #[test]
    fn full_orderings() {
        let q = query();
        let all: Vec<Ordering> = enumerate_full_orderings(&q, DEFAULT_FULL_ORDERING_CAP)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 40320);
        assert!(all.contains(&ord("3,5,8,6,1,2,4,7")));
        assert!(all.contains(&ord("5,2,7,1,8,4,6,3")));
        assert!(all.windows(2).all(|w| w[0] < w[1]));

        let one = parse_edge_list("x\n").unwrap();
        assert_eq!(enumerate_full_orderings(&one, 9).unwrap().count(), 1);
        let three = Graph::from_pairs([("a", "b"), ("b", "c")]);
        assert_eq!(enumerate_full_orderings(&three, 9).unwrap().count(), 6);
        assert!(matches!(
            enumerate_full_orderings(&q, 7),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn ordering_validation() {
        assert!(matches!(
            Ordering::parse("1,2,1"),
            Err(Error::InvalidOrdering(_))
        ));
        assert!(matches!(
            ord("1,9").check_against(&query()),
            Err(Error::UnknownVertex(_))
        ));
        assert_eq!(ord(" 3, 5,8 ").joined(), "3,5,8");
        assert_eq!(ord("3,5,8").to_string(), "(3, 5, 8)");
    }
}
