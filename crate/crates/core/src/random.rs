//! Seeded random graphs for property suites and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, Graph, VertexId};
use crate::ordering::Ordering;

fn label(prefix: &str, i: usize) -> VertexId {
    VertexId::new(format!("{prefix}{i}")).unwrap()
}

/// G(n, p) over vertices `{prefix}0 .. {prefix}{n-1}`; isolated vertices are kept.
pub fn erdos_renyi<R: Rng>(n: usize, p: f64, prefix: &str, rng: &mut R) -> Graph {
    let vertices: Vec<VertexId> = (0..n).map(|i| label(prefix, i)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.extend(Edge::new(vertices[i].clone(), vertices[j].clone()));
            }
        }
    }
    Graph::from_parts(vertices, edges)
}

/// A random spanning tree plus each remaining pair with probability `extra`.
/// Connected for every `n >= 1`.
pub fn random_connected<R: Rng>(n: usize, extra: f64, prefix: &str, rng: &mut R) -> Graph {
    let vertices: Vec<VertexId> = (0..n).map(|i| label(prefix, i)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        edges.extend(Edge::new(
            vertices[order[k]].clone(),
            vertices[parent].clone(),
        ));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(extra) {
                edges.extend(Edge::new(vertices[i].clone(), vertices[j].clone()));
            }
        }
    }
    Graph::from_parts(vertices, edges)
}

/// A uniformly random permutation of the query's vertices.
pub fn random_full_ordering<R: Rng>(q: &Graph, rng: &mut R) -> Ordering {
    let mut vs = q.vertices().to_vec();
    vs.shuffle(rng);
    Ordering::new(vs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn is_connected(g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in g.adjacent(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    #[test]
    fn connected_generator_is_connected() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..8 {
            for _ in 0..20 {
                let g = random_connected(n, 0.2, "q", &mut rng);
                assert_eq!(g.vertex_count(), n);
                assert!(is_connected(&g));
            }
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = erdos_renyi(10, 0.4, "d", &mut StdRng::seed_from_u64(3));
        let b = erdos_renyi(10, 0.4, "d", &mut StdRng::seed_from_u64(3));
        assert_eq!(a, b);
        assert_eq!(a.vertex_count(), 10);
    }
}
