//! Brute-force reference matcher.
//!
//! Enumerates injective maps from query vertices to data vertices with plain
//! backtracking in label order, keeping the edge-preserving ones. Deliberately
//! independent of graphlets, covers and unification.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matcher::Binding;

#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub max_query_vertices: usize,
    pub max_data_vertices: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_query_vertices: 8,
            max_data_vertices: 20,
        }
    }
}

/// Every injective, edge-preserving map from `query` into `data`, sorted.
pub fn brute_force_match(
    data: &Graph,
    query: &Graph,
    limits: &OracleLimits,
) -> Result<Vec<Binding>> {
    if query.vertex_count() > limits.max_query_vertices {
        return Err(Error::Capacity {
            what: "oracle query",
            actual: query.vertex_count(),
            limit: limits.max_query_vertices,
            hint: "use the matcher alone",
        });
    }
    if data.vertex_count() > limits.max_data_vertices {
        return Err(Error::Capacity {
            what: "oracle data graph",
            actual: data.vertex_count(),
            limit: limits.max_data_vertices,
            hint: "use the matcher alone",
        });
    }
    let data_edges: BTreeSet<(String, String)> = data
        .edges()
        .flat_map(|e| {
            let (u, v) = (e.first().to_string(), e.second().to_string());
            [(u.clone(), v.clone()), (v, u)]
        })
        .collect();
    let query_vertices: Vec<String> = query.vertices().iter().map(|v| v.to_string()).collect();
    let query_edges: Vec<(String, String)> = query
        .edges()
        .map(|e| (e.first().to_string(), e.second().to_string()))
        .collect();
    let data_vertices: Vec<String> = data.vertices().iter().map(|v| v.to_string()).collect();

    let mut found = Vec::new();
    let mut assigned: BTreeMap<String, String> = BTreeMap::new();
    extend(
        &query_vertices,
        &query_edges,
        &data_vertices,
        &data_edges,
        &mut assigned,
        &mut found,
    );
    found.sort();
    Ok(found)
}

fn extend(
    query_vertices: &[String],
    query_edges: &[(String, String)],
    data_vertices: &[String],
    data_edges: &BTreeSet<(String, String)>,
    assigned: &mut BTreeMap<String, String>,
    found: &mut Vec<Binding>,
) {
    let Some(next) = query_vertices.get(assigned.len()) else {
        let mut b = Binding::new();
        for (k, v) in assigned.iter() {
            b.insert(
                VertexId::new(k.as_str()).unwrap(),
                VertexId::new(v.as_str()).unwrap(),
            )
            .expect("oracle assignments are injective");
        }
        found.push(b);
        return;
    };
    for candidate in data_vertices {
        if assigned.values().any(|v| v == candidate) {
            continue;
        }
        // every query edge between `next` and an already assigned vertex must land on a data edge
        let consistent = query_edges.iter().all(|(u, w)| {
            let other = if u == next {
                w
            } else if w == next {
                u
            } else {
                return true;
            };
            match assigned.get(other) {
                Some(image) => data_edges.contains(&(candidate.clone(), image.clone())),
                None => true,
            }
        });
        if consistent {
            assigned.insert(next.clone(), candidate.clone());
            extend(
                query_vertices,
                query_edges,
                data_vertices,
                data_edges,
                assigned,
                found,
            );
            assigned.remove(next);
        }
    }
}
