//! Graphlet decomposition: a hub vertex, its neighbors, and the edges among
//! those neighbors (the boundaries).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graphlet {
    hub: VertexId,
    neighbors: Vec<VertexId>,
    boundaries: Vec<Edge>,
}

impl Graphlet {
    /// Builds a graphlet, checking that the hub is not its own neighbor and
    /// that every boundary joins two neighbors. Sets are canonicalized.
    pub fn new(
        hub: VertexId,
        neighbors: impl IntoIterator<Item = VertexId>,
        boundaries: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let neighbors: BTreeSet<VertexId> = neighbors.into_iter().collect();
        if neighbors.contains(&hub) {
            return Err(Error::InvalidGraphlet(format!(
                "vertex {hub} lists itself as a neighbor"
            )));
        }
        let boundaries: BTreeSet<Edge> = boundaries.into_iter().collect();
        for b in &boundaries {
            if !neighbors.contains(b.first()) || !neighbors.contains(b.second()) {
                return Err(Error::InvalidGraphlet(format!(
                    "boundary {b:?} of graphlet {hub} uses a vertex that is not a neighbor"
                )));
            }
        }
        Ok(Graphlet {
            hub,
            neighbors: neighbors.into_iter().collect(),
            boundaries: boundaries.into_iter().collect(),
        })
    }

    pub fn hub(&self) -> &VertexId {
        &self.hub
    }

    /// Neighbors in label order.
    pub fn neighbors(&self) -> &[VertexId] {
        &self.neighbors
    }

    /// Boundaries in canonical order.
    pub fn boundaries(&self) -> &[Edge] {
        &self.boundaries
    }

    pub fn has_neighbor(&self, v: &VertexId) -> bool {
        self.neighbors.binary_search(v).is_ok()
    }

    /// Hub plus neighbors.
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        std::iter::once(self.hub.clone())
            .chain(self.neighbors.iter().cloned())
            .collect()
    }

    pub fn metrics(&self) -> GraphletMetrics {
        let touched: BTreeSet<&VertexId> = self
            .boundaries
            .iter()
            .flat_map(|b| [b.first(), b.second()])
            .collect();
        GraphletMetrics {
            boundary_count: self.boundaries.len(),
            free_neighbor_count: self.neighbors.len() - touched.len(),
        }
    }
}

impl fmt::Debug for Graphlet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {{", self.hub)?;
        for (i, n) in self.neighbors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}, {")?;
        for (i, b) in self.boundaries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b:?}")?;
        }
        f.write_str("}>")
    }
}

/// Boundary count and the number of neighbors that sit on no boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphletMetrics {
    pub boundary_count: usize,
    pub free_neighbor_count: usize,
}

/// Boundaries of the graphlet at `hub` as sorted index pairs.
pub(crate) fn boundary_indices(g: &Graph, hub: u32) -> Vec<(u32, u32)> {
    let adj = g.adjacent(hub);
    let mut out = Vec::new();
    for (i, &a) in adj.iter().enumerate() {
        for &b in &adj[i + 1..] {
            if g.has_edge_between(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn graphlet_at(g: &Graph, hub: u32) -> Graphlet {
    // adjacency and boundary pairs come out of the graph already sorted
    Graphlet {
        hub: g.label(hub).clone(),
        neighbors: g
            .adjacent(hub)
            .iter()
            .map(|&n| g.label(n).clone())
            .collect(),
        boundaries: boundary_indices(g, hub)
            .into_iter()
            .map(|(a, b)| Edge::new(g.label(a).clone(), g.label(b).clone()).unwrap())
            .collect(),
    }
}

/// One graphlet per vertex, ordered by hub label.
pub fn to_graphlets(g: &Graph) -> Vec<Graphlet> {
    (0..g.vertex_count() as u32)
        .map(|v| graphlet_at(g, v))
        .collect()
}

pub fn graphlet_of(g: &Graph, v: &str) -> Result<Graphlet> {
    Ok(graphlet_at(g, g.require_index(v)?))
}

/// Rebuilds a graph from its graphlets using only hub-neighbor edges.
pub fn reassemble<'a>(graphlets: impl IntoIterator<Item = &'a Graphlet>) -> Graph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for gl in graphlets {
        vertices.push(gl.hub.clone());
        for n in &gl.neighbors {
            edges.extend(Edge::new(gl.hub.clone(), n.clone()));
        }
    }
    Graph::from_parts(vertices, edges)
}
