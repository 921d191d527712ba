#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hubmatch::random::{erdos_renyi, random_connected};
use hubmatch::{
    enumerate_minimum_hub_covers, parse_edge_list, select_best_ordering, Binding, CoverOptions,
    Graph, Ordering, SelectionOptions,
};

pub const DATA_EDGES: &str = include_str!("../../../../fixtures/data.edges");
pub const QUERY_EDGES: &str = include_str!("../../../../fixtures/query.edges");
pub const DATA_XML: &str = include_str!("../../../../fixtures/data.xml");
pub const QUERY_XML: &str = include_str!("../../../../fixtures/query.xml");

pub fn data() -> Graph {
    parse_edge_list(DATA_EDGES).unwrap()
}

pub fn query() -> Graph {
    parse_edge_list(QUERY_EDGES).unwrap()
}

pub fn ord(s: &str) -> Ordering {
    Ordering::parse(s).unwrap()
}

pub fn auto_ordering(q: &Graph) -> Ordering {
    let covers = enumerate_minimum_hub_covers(q, &CoverOptions::default()).unwrap();
    select_best_ordering(q, &covers, &SelectionOptions::default())
        .unwrap()
        .ordering
}

/// Data: G(n, p) with 6..=12 vertices and p in [0.25, 0.5].
/// Query: connected, 3..=5 vertices.
pub fn instance(seed: u64) -> (Graph, Graph) {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(6..=12);
    let p = rng.gen_range(0.25..=0.5);
    let data = erdos_renyi(n, p, "d", &mut rng);
    let k = rng.gen_range(3..=5);
    let extra = rng.gen_range(0.0..=0.6);
    let query = random_connected(k, extra, "q", &mut rng);
    (data, query)
}

/// Problems with a binding as an embedding of `query` in `data`; empty when
/// it is total, injective and edge-preserving. Checked directly against the
/// edge sets.
pub fn embedding_defects(data: &Graph, query: &Graph, b: &Binding) -> Vec<String> {
    let mut out = Vec::new();
    let keys: BTreeSet<&str> = b.keys().map(|k| k.as_str()).collect();
    let expected: BTreeSet<&str> = query.vertices().iter().map(|v| v.as_str()).collect();
    if keys != expected {
        out.push(format!("not total: {b:?}"));
    }
    let values: BTreeSet<&str> = b.values().map(|v| v.as_str()).collect();
    if values.len() != b.len() {
        out.push(format!("not injective: {b:?}"));
    }
    for e in query.edges() {
        match (b.get(e.first()), b.get(e.second())) {
            (Some(x), Some(y)) if data.has_edge(x.as_str(), y.as_str()) => {}
            _ => out.push(format!("edge {e:?} not preserved by {b:?}")),
        }
    }
    out
}
