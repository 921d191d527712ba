//! Minimum hub covers.
//!
//! A vertex set covers a query when every edge is incident to a member or is a
//! boundary of some member's graphlet (both endpoints adjacent to the member).
//! Minimum covers are found exhaustively, testing all subsets of size 1, 2, ...
//! and stopping at the first size that admits a cover.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{Graph, VertexId};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HubCover(BTreeSet<VertexId>);

impl HubCover {
    /// Wraps a member set after checking it covers `query`.
    pub fn new(query: &Graph, members: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let members: BTreeSet<VertexId> = members.into_iter().collect();
        if covers(query, &members)? {
            Ok(HubCover(members))
        } else {
            Err(Error::NotHubCover(format_members(&members)))
        }
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.contains(v)
    }
}

fn format_members(members: &BTreeSet<VertexId>) -> String {
    format!("{{{}}}", members.iter().join(","))
}

impl fmt::Display for HubCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_members(&self.0))
    }
}

impl fmt::Debug for HubCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense adjacency matrix; covers tests are dominated by edge lookups.
struct Coverage {
    n: usize,
    adjacent: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl Coverage {
    fn new(q: &Graph) -> Self {
        let n = q.vertex_count();
        let mut adjacent = vec![false; n * n];
        let mut edges = Vec::with_capacity(q.edge_count());
        for a in 0..n {
            for &b in q.adjacent(a as u32) {
                let b = b as usize;
                adjacent[a * n + b] = true;
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        Coverage { n, adjacent, edges }
    }

    fn covered_by(&self, members: &[usize]) -> bool {
        let mut is_member = vec![false; self.n];
        for &m in members {
            is_member[m] = true;
        }
        self.edges.iter().all(|&(u, v)| {
            is_member[u]
                || is_member[v]
                || members
                    .iter()
                    .any(|&m| self.adjacent[m * self.n + u] && self.adjacent[m * self.n + v])
        })
    }
}

/// Whether `members` covers every edge of `q`.
pub fn covers(q: &Graph, members: &BTreeSet<VertexId>) -> Result<bool> {
    let indices = members
        .iter()
        .map(|m| q.require_index(m.as_str()).map(|i| i as usize))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coverage::new(q).covered_by(&indices))
}

#[derive(Clone, Copy, Debug)]
pub struct CoverOptions {
    /// Largest query accepted by the exhaustive search.
    pub max_vertices: usize,
    pub execution: Execution,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions {
            max_vertices: 20,
            execution: Execution::default(),
        }
    }
}

/// All minimum hub covers of `q`, sorted.
pub fn enumerate_minimum_hub_covers(q: &Graph, options: &CoverOptions) -> Result<Vec<HubCover>> {
    if q.edge_count() == 0 {
        return Err(Error::EdgelessQuery);
    }
    let n = q.vertex_count();
    if n > options.max_vertices {
        return Err(Error::Capacity {
            what: "query",
            actual: n,
            limit: options.max_vertices,
            hint: "supply hub covers explicitly",
        });
    }
    let coverage = Coverage::new(q);
    for size in 1..=n {
        let candidates: Vec<Vec<usize>> = (0..n).combinations(size).collect();
        let hits = options
            .execution
            .map(&candidates, |c| coverage.covered_by(c));
        let found: Vec<HubCover> = candidates
            .iter()
            .zip(hits)
            .filter(|(_, hit)| *hit)
            .map(|(c, _)| HubCover(c.iter().map(|&i| q.label(i as u32).clone()).collect()))
            .sorted()
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the full vertex set always covers the query")
}
