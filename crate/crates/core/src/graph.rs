//! Undirected simple graphs over text-labelled vertices.
//!
//! Vertices are stored sorted by label, so the dense index of a vertex and its
//! label order agree. Everything downstream (graphlets, covers, the search
//! engine) relies on that to get label-ordered output from index-ordered work.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex label: a non-empty token without whitespace. Compared as raw text.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::str::FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Returns `None` for a self-loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &VertexId {
        &self.0
    }

    pub fn second(&self) -> &VertexId {
        &self.1
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.0 == v || &self.1 == v
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

/// Undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    labels: Vec<VertexId>,
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit vertices and edges. Edge endpoints are
    /// declared implicitly; duplicates collapse.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut labels: BTreeSet<VertexId> = vertices.into_iter().collect();
        for e in &edges {
            labels.insert(e.0.clone());
            labels.insert(e.1.clone());
        }
        let labels: Vec<VertexId> = labels.into_iter().collect();
        let mut adjacency = vec![Vec::new(); labels.len()];
        let index = |v: &VertexId| labels.binary_search(v).unwrap() as u32;
        for e in &edges {
            let (a, b) = (index(&e.0), index(&e.1));
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            labels,
            adjacency,
            edge_count: edges.len(),
        }
    }

    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        Self::from_parts(std::iter::empty(), edges)
    }

    /// Convenience constructor for literal edge lists; panics on bad labels or self-loops.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        Self::from_edges(pairs.into_iter().map(|(u, v)| {
            Edge::new(VertexId::new(u).unwrap(), VertexId::new(v).unwrap())
                .expect("self-loop in literal edge list")
        }))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertices in label order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: &str) -> Option<u32> {
        self.labels
            .binary_search_by(|probe| probe.as_str().cmp(v))
            .ok()
            .map(|i| i as u32)
    }

    pub(crate) fn require_index(&self, v: &str) -> Result<u32> {
        self.index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn label(&self, index: u32) -> &VertexId {
        &self.labels[index as usize]
    }

    /// Sorted neighbor indices of the vertex at `index`.
    pub fn adjacent(&self, index: u32) -> &[u32] {
        &self.adjacency[index as usize]
    }

    pub fn has_edge_between(&self, a: u32, b: u32) -> bool {
        self.adjacency[a as usize].binary_search(&b).is_ok()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.has_edge_between(a, b),
            _ => false,
        }
    }

    pub fn degree(&self, v: &str) -> Option<usize> {
        self.index_of(v).map(|i| self.adjacency[i as usize].len())
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(move |(a, list)| {
                list.iter()
                    .filter(move |&&b| (b as usize) > a)
                    .map(move |&b| Edge(self.labels[a].clone(), self.labels[b as usize].clone()))
            })
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.labels
            .iter()
            .zip(&self.adjacency)
            .filter(|(_, adj)| adj.is_empty())
            .map(|(v, _)| v)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Parses the edge-list format: one `u v` edge or one `u` vertex declaration
/// per line, `#` comments, LF or CRLF line endings.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let label = |t: &str| {
            VertexId::new(t).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })
        };
        match tokens.as_slice() {
            [] => {}
            [v] => {
                vertices.insert(label(v)?);
            }
            [u, v] => {
                let edge = Edge::new(label(u)?, label(v)?).ok_or_else(|| Error::Parse {
                    line,
                    message: format!("self-loop on {u:?}"),
                })?;
                edges.insert(edge);
            }
            more => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected one or two tokens, found {}", more.len()),
                })
            }
        }
    }
    Ok(Graph::from_parts(vertices, edges))
}

/// Writes the edge-list format: edges in canonical order, then isolated vertices.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(e.first().as_str());
        out.push(' ');
        out.push_str(e.second().as_str());
        out.push('\n');
    }
    for v in g.isolated_vertices() {
        out.push_str(v.as_str());
        out.push('\n');
    }
    out
}
