//! Immutable simple undirected graphs over dense integer vertex ids with
//! bitset adjacency. This is the substrate every other module builds on.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// An edge key in canonical `(min, max)` order.
pub type Edge = (usize, usize);

pub fn edge_key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. Adjacency is symmetric, loop-free and
/// duplicate-free by construction; vertex ids are exactly `0..n`.
/// Immutable after construction and safe to share across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges, deduplicated.
    /// Rejects out-of-range ids and self-loops, naming the offending pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Bitset::new(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Bitset::new(n); n],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { id: v, n: self.n })
        }
    }

    /// Subgraph induced on `X`, together with the id-order-preserving map
    /// from new ids to the original ids (ascending).
    pub fn induced_subgraph(&self, x: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep: Vec<usize> = x.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { id: bad, n: self.n });
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Bitset::new(keep.len()); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].iter() {
                if new_id[w] != usize::MAX {
                    adj[i].insert(new_id[w]);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| keep.iter().map(|&v| ls[v].clone()).collect());
        Ok((
            Graph {
                n: keep.len(),
                adj,
                labels,
            },
            keep,
        ))
    }

    /// Line graph: one vertex per edge of `self` in lexicographic endpoint
    /// order, adjacent iff the edges share an end. The edge order is
    /// returned so callers can map line-graph vertices back.
    pub fn line_graph(&self) -> (Graph, Vec<Edge>) {
        let edges = self.edges();
        let m = edges.len();
        let mut adj = vec![Bitset::new(m); m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        (
            Graph {
                n: m,
                adj,
                labels: None,
            },
            edges,
        )
    }

    /// Replace each edge `uv` by a path with `extra(uv)` new internal
    /// vertices. `extra` must cover every edge. Original vertices keep their
    /// ids; internal vertices are appended in edge order, along the path.
    pub fn subdivide(&self, extra: &BTreeMap<Edge, usize>) -> Result<Graph> {
        let edges = self.edges();
        for &e in &edges {
            if !extra.contains_key(&e) {
                return Err(Error::MissingEdgeExtra(e.0, e.1));
            }
        }
        let total_extra: usize = edges.iter().map(|e| extra[e]).sum();
        let mut out_edges = Vec::with_capacity(self.edge_count() + 2 * total_extra);
        let mut next = self.n;
        for &(u, v) in &edges {
            let k = extra[&(u, v)];
            let mut prev = u;
            for _ in 0..k {
                out_edges.push((prev, next));
                prev = next;
                next += 1;
            }
            out_edges.push((prev, v));
        }
        Graph::from_edges(next, &out_edges)
    }

    pub fn subdivide_uniform(&self, k: usize) -> Graph {
        let extra: BTreeMap<Edge, usize> = self.edges().into_iter().map(|e| (e, k)).collect();
        self.subdivide(&extra).expect("covers every edge")
    }

    /// Connected components as sorted vertex lists, ordered by minimum id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Is the whole graph a path? Accepts `K_1`; rejects the empty graph.
    pub fn is_path(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        if self.n == 1 {
            return true;
        }
        self.edge_count() == self.n - 1
            && self.vertices().all(|v| self.degree(v) <= 2)
            && self.is_connected()
    }

    /// If the graph is a path, its vertices in order (one of the two
    /// directions, starting at the lower-id end).
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_path() {
            return None;
        }
        if self.n == 1 {
            return Some(vec![0]);
        }
        let start = self.vertices().find(|&v| self.degree(v) == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < self.n {
            let next = self.adj[cur].iter().find(|&w| w != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    pub fn is_stable_set(&self, x: &[usize]) -> bool {
        for (i, &u) in x.iter().enumerate() {
            for &v in &x[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// No edge with one end in `X` and one in `Y`. The sets must be disjoint.
    pub fn are_anticomplete(&self, x: &[usize], y: &[usize]) -> Result<bool> {
        let xs = Bitset::from_iter(self.n, x.iter().copied());
        let ys = Bitset::from_iter(self.n, y.iter().copied());
        let mut both = xs.clone();
        both.intersect_with(&ys);
        if let Some(shared) = both.first() {
            return Err(Error::OverlappingSets(shared));
        }
        Ok(self.anticomplete_sets(&xs, &ys))
    }

    /// Unchecked variant over bitsets; callers guarantee disjointness.
    pub fn anticomplete_sets(&self, xs: &Bitset, ys: &Bitset) -> bool {
        xs.iter().all(|u| self.adj[u].is_disjoint(ys))
    }

    /// Does the vertex sequence induce a path in order? Requires distinct
    /// vertices, consecutive adjacency and no chords.
    pub fn seq_induces_path(&self, seq: &[usize]) -> bool {
        if seq.is_empty() {
            return false;
        }
        let set = Bitset::from_iter(self.n, seq.iter().copied());
        if set.count() != seq.len() {
            return false;
        }
        for (i, &u) in seq.iter().enumerate() {
            for (j, &v) in seq.iter().enumerate().skip(i + 1) {
                let expect = j == i + 1;
                if self.has_edge(u, v) != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Simple (not necessarily induced) path check: distinct vertices,
    /// consecutive adjacency.
    pub fn seq_is_simple_path(&self, seq: &[usize]) -> bool {
        if seq.is_empty() {
            return false;
        }
        let set = Bitset::from_iter(self.n, seq.iter().copied());
        if set.count() != seq.len() {
            return false;
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + self.n, v + self.n)),
        );
        Graph::from_edges(n, &edges).expect("valid shifted edges")
    }

    /// Suppress every degree-2 vertex in `keep_out` order: repeatedly replace
    /// a degree-2 vertex (not in `protect`) and its two neighbors' edges by a
    /// single edge. Used by tests to undo subdivisions.
    pub fn suppress_degree_two(&self, protect: &[usize]) -> Graph {
        let mut n = self.n;
        let mut edges: Vec<Edge> = self.edges();
        let prot = Bitset::from_iter(self.n, protect.iter().copied());
        loop {
            let mut deg: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &(u, v) in &edges {
                deg.entry(u).or_default().push(v);
                deg.entry(v).or_default().push(u);
            }
            let cand = deg.iter().find(|(v, ns)| {
                !prot.contains(**v)
                    && ns.len() == 2
                    && ns[0] != ns[1]
                    && !edges.contains(&edge_key(ns[0], ns[1]))
            });
            let Some((&v, ns)) = cand else { break };
            let (a, b) = (ns[0], ns[1]);
            edges.retain(|&e| e != edge_key(a, v) && e != edge_key(b, v));
            edges.push(edge_key(a, b));
            // Relabel to keep ids dense: drop v, shift everything above.
            edges = edges
                .iter()
                .map(|&(x, y)| {
                    let f = |z: usize| if z > v { z - 1 } else { z };
                    edge_key(f(x), f(y))
                })
                .collect();
            n -= 1;
        }
        Graph::from_edges(n, &edges).expect("suppression keeps edges valid")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Path on `n` vertices with ids in order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_basic() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.is_path());

        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert!(k1.is_path());

        let all: Vec<Edge> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edges(4, &all).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn from_edges_rejections() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        // Duplicates collapse.
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraphs() {
        let all: Vec<Edge> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edges(4, &all).unwrap();
        let (k3, map) = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = cycle(5);
        let (sub, _) = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert!(sub.is_path());
        assert_eq!(sub.vertex_count(), 4);

        let (same, map) = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        assert!(c5.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn line_graphs() {
        let p3 = path(3);
        let (l, _) = p3.line_graph();
        assert!(l.is_path());
        assert_eq!(l.vertex_count(), 2);

        let k3 = cycle(3);
        let (l, _) = k3.line_graph();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.edge_count(), 3);

        // Star K_{1,3}: all edge pairs share the center.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (l, edges) = star.line_graph();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.edge_count(), 3);
        // Brute-force oracle: adjacency iff shared endpoint.
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let share = edges[i].0 == edges[j].0
                    || edges[i].0 == edges[j].1
                    || edges[i].1 == edges[j].0
                    || edges[i].1 == edges[j].1;
                assert_eq!(l.has_edge(i, j), share);
            }
        }
    }

    #[test]
    fn line_graph_size_formula() {
        // |V(L)| = |E|, |E(L)| = sum C(deg, 2).
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (1, 2)]).unwrap();
        let (l, _) = g.line_graph();
        assert_eq!(l.vertex_count(), g.edge_count());
        let expect: usize = g.vertices().map(|v| g.degree(v) * (g.degree(v) - 1) / 2).sum();
        assert_eq!(l.edge_count(), expect);
    }

    #[test]
    fn subdivision() {
        let k3 = cycle(3);
        let c6 = k3.subdivide_uniform(1);
        assert_eq!(c6.vertex_count(), 6);
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));
        assert!(c6.is_connected());

        let same = k3.subdivide_uniform(0);
        assert_eq!(same, k3);

        let p2 = path(2);
        let extra: BTreeMap<Edge, usize> = [((0, 1), 3)].into_iter().collect();
        let p5 = p2.subdivide(&extra).unwrap();
        assert!(p5.is_path());
        assert_eq!(p5.vertex_count(), 5);

        let missing: BTreeMap<Edge, usize> = BTreeMap::new();
        assert!(k3.subdivide(&missing).is_err());
    }

    #[test]
    fn suppress_recovers_original() {
        let k4_edges: Vec<Edge> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edges(4, &k4_edges).unwrap();
        let sub = k4.subdivide_uniform(2);
        let back = sub.suppress_degree_two(&[]);
        assert_eq!(back.vertex_count(), 4);
        assert_eq!(back.edge_count(), 6);
    }

    #[test]
    fn predicates() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.are_anticomplete(&[0, 1], &[2, 3]), Ok(true));
        assert_eq!(
            two_k2.are_anticomplete(&[0, 1], &[1, 2]),
            Err(Error::OverlappingSets(1))
        );

        assert!(!cycle(4).is_path());

        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(k33.is_stable_set(&[0, 1, 2]));
        assert!(!k33.is_stable_set(&[0, 3]));
    }

    #[test]
    fn components_and_path_order() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);

        let p = path(4);
        assert_eq!(p.path_order(), Some(vec![0, 1, 2, 3]));
        assert_eq!(cycle(4).path_order(), None);
    }
}
