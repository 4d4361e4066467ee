//! Maximum number of pairwise internally disjoint paths between two vertices,
//! by unit-vertex-capacity flow: every vertex except the endpoints is split
//! into an in/out pair of capacity one. Augmenting paths are searched in
//! deterministic id order.

use crate::error::{Error, Result};
use crate::graph::Graph;

struct FlowNet {
    // adj[v] = indices into `edges`
    adj: Vec<Vec<usize>>,
    // (to, cap); edges stored in pairs, rev edge = idx ^ 1
    edges: Vec<(usize, u32)>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            edges: Vec::new(),
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        let i = self.edges.len();
        self.edges.push((to, cap));
        self.edges.push((from, 0));
        self.adj[from].push(i);
        self.adj[to].push(i + 1);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        // BFS for a shortest residual path; deterministic by insertion order.
        let mut prev_edge = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        let mut queue = std::collections::VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &ei in &self.adj[v] {
                let (to, cap) = self.edges[ei];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    prev_edge[to] = ei;
                    queue.push_back(to);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let ei = prev_edge[v];
            self.edges[ei].1 -= 1;
            self.edges[ei ^ 1].1 += 1;
            v = self.edges[ei ^ 1].0;
        }
        true
    }
}

/// Maximum number of pairwise internally disjoint `x`–`y` paths. An edge
/// `xy` counts as one path.
pub fn disjoint_paths_count(g: &Graph, x: usize, y: usize) -> Result<usize> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::EqualEndpoints(x));
    }
    let n = g.vertex_count();
    // Node ids: in(v) = 2v, out(v) = 2v + 1. For x and y the pair is fused
    // by giving the internal arc unbounded capacity.
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let cap = if v == x || v == y { u32::MAX } else { 1 };
        net.add(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    let mut flow = 0;
    while net.augment(2 * x + 1, 2 * y) {
        flow += 1;
    }
    Ok(flow)
}

/// Brute-force oracle: maximum packing of internally disjoint `x`–`y` paths
/// by exhaustive search. Only intended for small graphs (≤ ~10 vertices).
pub fn disjoint_paths_brute(g: &Graph, x: usize, y: usize) -> Result<usize> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::EqualEndpoints(x));
    }
    // Enumerate all simple x-y paths as interior-vertex masks.
    let mut interiors: Vec<u64> = Vec::new();
    let mut stack = vec![(x, 1u64 << x, 0u64)];
    while let Some((v, visited, interior)) = stack.pop() {
        for w in g.neighbors(v).iter() {
            if w == y {
                interiors.push(interior);
            } else if visited >> w & 1 == 0 {
                stack.push((w, visited | 1 << w, interior | 1 << w));
            }
        }
    }
    interiors.sort_unstable();
    interiors.dedup();
    // Max set packing over pairwise disjoint interiors.
    fn pack(interiors: &[u64], used: u64) -> usize {
        let mut best = 0;
        for (i, &m) in interiors.iter().enumerate() {
            if m & used == 0 {
                best = best.max(1 + pack(&interiors[i + 1..], used | m));
            }
        }
        best
    }
    Ok(pack(&interiors, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, Graph};

    fn complete(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn cliques_and_cycles() {
        let k4 = complete(4);
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(disjoint_paths_count(&k4, u, v).unwrap(), 3);
                assert_eq!(disjoint_paths_brute(&k4, u, v).unwrap(), 3);
            }
        }
        for n in 3..8 {
            let c = cycle(n);
            assert_eq!(disjoint_paths_count(&c, 0, n / 2).unwrap(), 2);
        }
        let p5 = path(5);
        assert_eq!(disjoint_paths_count(&p5, 0, 4).unwrap(), 1);
    }

    #[test]
    fn equal_endpoints_rejected() {
        assert_eq!(
            disjoint_paths_count(&path(3), 1, 1),
            Err(Error::EqualEndpoints(1))
        );
    }

    #[test]
    fn disconnected_pair() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disjoint_paths_count(&g, 0, 3).unwrap(), 0);
    }
}
