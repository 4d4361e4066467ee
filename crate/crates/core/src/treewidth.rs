//! Exact treewidth via dynamic programming over vertex subsets in the
//! elimination-ordering formulation, with degeneracy/contraction lower
//! bounds and a greedy fill-in upper bound for pruning. Decompositions are
//! reconstructed from the optimal ordering and can be independently checked
//! by [`verify_decomposition`].

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

pub const DEFAULT_VERTEX_LIMIT: usize = 22;

/// Tree of bags certifying a width.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<usize>>,
    /// Bag-index pairs forming a tree.
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }
}

/// First violated decomposition clause, for independent checking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    NotATree(String),
    BadVertexId { bag: usize, id: usize },
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    VertexBagsDisconnected(usize),
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NotATree(why) => write!(f, "bag graph is not a tree: {why}"),
            TdViolation::BadVertexId { bag, id } => write!(f, "bag {bag} holds invalid vertex {id}"),
            TdViolation::VertexUncovered(v) => write!(f, "vertex {v} appears in no bag"),
            TdViolation::EdgeUncovered(u, v) => write!(f, "edge ({u}, {v}) inside no bag"),
            TdViolation::VertexBagsDisconnected(v) => {
                write!(f, "bags containing vertex {v} do not induce a subtree")
            }
        }
    }
}

/// Check all four decomposition clauses, independently of the solver.
/// Returns the width on success.
pub fn verify_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<usize, TdViolation> {
    let nb = td.bags.len();
    // Tree shape.
    if td.tree_edges.len() + 1 != nb && !(nb == 0 && td.tree_edges.is_empty()) {
        return Err(TdViolation::NotATree(format!(
            "{} bags need {} edges, found {}",
            nb,
            nb.saturating_sub(1),
            td.tree_edges.len()
        )));
    }
    let mut tadj = vec![Vec::new(); nb];
    for &(a, b) in &td.tree_edges {
        if a >= nb || b >= nb {
            return Err(TdViolation::NotATree(format!("edge ({a}, {b}) out of range")));
        }
        if a == b {
            return Err(TdViolation::NotATree(format!("self-loop at bag {a}")));
        }
        tadj[a].push(b);
        tadj[b].push(a);
    }
    if nb > 0 {
        let mut seen = vec![false; nb];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(x) = stack.pop() {
            for &y in &tadj[x] {
                if !seen[y] {
                    seen[y] = true;
                    cnt += 1;
                    stack.push(y);
                }
            }
        }
        if cnt != nb {
            return Err(TdViolation::NotATree("disconnected".into()));
        }
    }
    // Vertex ids and coverage.
    let n = g.vertex_count();
    let mut holder: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (bi, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(TdViolation::BadVertexId { bag: bi, id: v });
            }
            holder[v].push(bi);
        }
    }
    if let Some(v) = (0..n).find(|&v| holder[v].is_empty()) {
        return Err(TdViolation::VertexUncovered(v));
    }
    for (u, v) in g.edges() {
        let ok = td
            .bags
            .iter()
            .any(|bag| bag.contains(&u) && bag.contains(&v));
        if !ok {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }
    // Per-vertex subtree connectivity.
    for (v, bags_of_v) in holder.iter().enumerate() {
        let inside: Vec<usize> = bags_of_v.clone();
        let inset: std::collections::HashSet<usize> = inside.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![inside[0]];
        seen.insert(inside[0]);
        while let Some(x) = stack.pop() {
            for &y in &tadj[x] {
                if inset.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        if seen.len() != inside.len() {
            return Err(TdViolation::VertexBagsDisconnected(v));
        }
    }
    Ok(td.width())
}

/// Degeneracy: max over the removal process of the current minimum degree.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut alive: Vec<bool> = vec![true; n];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        best = best.max(deg[v]);
        alive[v] = false;
        for w in g.neighbors(v).iter() {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Minor-min-degree bound: repeatedly contract a minimum-degree vertex into
/// its least-degree neighbor, recording the minimum degree seen. Sound lower
/// bound since contraction cannot raise treewidth.
pub fn mmd_lowerbound(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut remaining = n;
    let mut best = 0;
    while remaining > 1 {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (adj[v].len(), v))
            .unwrap();
        best = best.max(adj[v].len());
        if adj[v].is_empty() {
            alive[v] = false;
            remaining -= 1;
            continue;
        }
        let u = adj[v]
            .iter()
            .copied()
            .min_by_key(|&u| (adj[u].len(), u))
            .unwrap();
        // Contract v into u.
        let vs: Vec<usize> = adj[v].iter().copied().collect();
        for w in vs {
            adj[w].remove(&v);
            if w != u {
                adj[w].insert(u);
                adj[u].insert(w);
            }
        }
        adj[v].clear();
        alive[v] = false;
        remaining -= 1;
    }
    best
}

/// Max of the two sound lower bounds; never exceeds the true treewidth.
pub fn treewidth_lowerbound(g: &Graph) -> usize {
    degeneracy(g).max(mmd_lowerbound(g))
}

/// Greedy fill-in: eliminate the vertex needing fewest fill edges. Returns
/// the achieved width and the ordering.
fn greedy_fillin(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let ns: Vec<usize> = adj[v].iter().copied().collect();
            let mut fill = 0;
            for i in 0..ns.len() {
                for j in i + 1..ns.len() {
                    if !adj[ns[i]].contains(&ns[j]) {
                        fill += 1;
                    }
                }
            }
            let key = (fill, ns.len(), v);
            if best.map(|b| key < b).unwrap_or(true) {
                best = Some(key);
            }
        }
        let (_, _, v) = best.unwrap();
        let ns: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(ns.len());
        for i in 0..ns.len() {
            adj[ns[i]].remove(&v);
            for j in i + 1..ns.len() {
                adj[ns[i]].insert(ns[j]);
                adj[ns[j]].insert(ns[i]);
            }
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    (width, order)
}

/// Back-degree of `v` when eliminated after exactly the set `t`:
/// vertices outside `t ∪ {v}` reachable from `v` through `t`.
#[inline]
fn q_size(adj: &[u32], t: u32, v: usize) -> u32 {
    (reach_through(adj, t, v) & !t & !(1 << v)).count_ones()
}

#[inline]
fn reach_through(adj: &[u32], t: u32, v: usize) -> u32 {
    let mut reach = adj[v];
    let mut pending = reach & t;
    let mut processed = 0u32;
    while pending != 0 {
        let u = pending.trailing_zeros() as usize;
        processed |= 1 << u;
        reach |= adj[u];
        pending = reach & t & !processed;
    }
    reach
}

/// Width of a concrete elimination ordering (used by the reconstruction and
/// by test oracles).
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.vertex_count();
    assert!(n <= 32);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let mut t = 0u32;
    let mut width = 0;
    for &v in order {
        width = width.max(q_size(&adj, t, v) as usize);
        t |= 1 << v;
    }
    width
}

/// Exact treewidth with decomposition. Subset DP, `O(2^n poly(n))`; refuses
/// graphs above `vertex_limit` (default 22).
pub fn treewidth_exact(g: &Graph, vertex_limit: Option<usize>) -> Result<(usize, TreeDecomposition)> {
    let n = g.vertex_count();
    // The subset DP is indexed by u32 masks, so 31 is an absolute ceiling.
    let limit = vertex_limit.unwrap_or(DEFAULT_VERTEX_LIMIT).min(31);
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limit {
        return Err(Error::VertexLimitExceeded { n, limit });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();

    let lb = treewidth_lowerbound(g);
    let (ub, ub_order) = greedy_fillin(g);
    debug_assert!(lb <= ub);
    if lb == ub {
        let td = decomposition_from_order(g, &ub_order);
        return Ok((ub, td));
    }

    // dp[s] = minimum over orderings of s (eliminated first) of the maximum
    // back-degree, clamped: states that cannot beat the greedy bound are dead.
    const DEAD: u8 = u8::MAX;
    let full: u32 = (1u32 << n) - 1;
    let mut dp = vec![DEAD; 1usize << n];
    dp[0] = 0;
    for s in 1..=full {
        let mut best = DEAD;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = dp[(s & !(1u32 << v)) as usize];
            if prev == DEAD {
                continue;
            }
            let q = q_size(&adj, s & !(1u32 << v), v) as u8;
            let cost = prev.max(q);
            if cost < best {
                best = cost;
            }
        }
        if best as usize >= ub {
            best = DEAD;
        }
        dp[s as usize] = best;
    }

    let (width, order) = if dp[full as usize] == DEAD {
        (ub, ub_order)
    } else {
        let width = dp[full as usize] as usize;
        // Reconstruct backwards; smallest vertex id on ties.
        let mut order = vec![0usize; n];
        let mut s = full;
        for i in (0..n).rev() {
            let mut chosen = None;
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let prev = dp[(s & !(1u32 << v)) as usize];
                if prev == DEAD {
                    continue;
                }
                let q = q_size(&adj, s & !(1u32 << v), v) as u8;
                if prev.max(q) == dp[s as usize] {
                    chosen = Some(v);
                    break;
                }
            }
            let v = chosen.expect("dp value must be achievable");
            order[i] = v;
            s &= !(1u32 << v);
        }
        (width, order)
    };

    let td = decomposition_from_order(g, &order);
    debug_assert_eq!(td.width(), width);
    debug_assert!(verify_decomposition(g, &td).is_ok());
    Ok((width, td))
}

/// Bags from an elimination ordering: bag(v) = {v} ∪ Q at elimination time,
/// attached towards the earliest-eliminated vertex of Q; then bags that are
/// subsets of a neighbor are merged away.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    assert!(n <= 32 && order.len() == n);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut qsets: Vec<u32> = Vec::with_capacity(n);
    let mut t = 0u32;
    for &v in order {
        let q = reach_through(&adj, t, v) & !t & !(1 << v);
        let mut bag: Vec<usize> = (0..n).filter(|&w| q >> w & 1 == 1).collect();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        qsets.push(q);
        t |= 1 << v;
    }
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for (i, &qset) in qsets.iter().enumerate() {
        if qset != 0 {
            // Attach towards the earliest-eliminated vertex of Q_i.
            let w = (0..n)
                .filter(|&w| qset >> w & 1 == 1)
                .min_by_key(|&w| pos[w])
                .unwrap();
            tree_edges.push((i, pos[w]));
        } else {
            // Q empty: this bag roots its component's subtree.
            roots.push(i);
        }
    }
    // Chain component roots; the linking bags share no vertices, so the
    // per-vertex subtree property is unaffected.
    for pair in roots.windows(2) {
        tree_edges.push((pair[0], pair[1]));
    }
    prune_subset_bags(TreeDecomposition { bags, tree_edges })
}

/// Merge every bag that is a subset of one of its tree neighbors.
fn prune_subset_bags(mut td: TreeDecomposition) -> TreeDecomposition {
    loop {
        let nb = td.bags.len();
        if nb <= 1 {
            return td;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nb];
        for &(a, b) in &td.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let target = (0..nb).find_map(|i| {
            adj[i]
                .iter()
                .find(|&&j| {
                    td.bags[i].iter().all(|v| td.bags[j].contains(v))
                })
                .map(|&j| (i, j))
        });
        let Some((i, j)) = target else { return td };
        // Remove bag i, reattach its other neighbors to j.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in &td.tree_edges {
            let (a2, b2) = if a == i { (j, b) } else if b == i { (a, j) } else { (a, b) };
            if a2 != b2 {
                edges.push((a2, b2));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let remap = |x: usize| if x > i { x - 1 } else { x };
        td.bags.remove(i);
        td.tree_edges = edges
            .into_iter()
            .map(|(a, b)| (remap(a), remap(b)))
            .collect();
    }
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

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges).unwrap()
    }

    fn tw(g: &Graph) -> usize {
        let (w, td) = treewidth_exact(g, None).unwrap();
        assert_eq!(verify_decomposition(g, &td), Ok(w));
        w
    }

    #[test]
    fn cliques_and_bicliques() {
        for t in 1..=5 {
            assert_eq!(tw(&complete(t + 1)), t);
        }
        for t in 1..=4 {
            assert_eq!(tw(&complete_bipartite(t, t)), t);
        }
    }

    #[test]
    fn trees_and_cycles() {
        assert_eq!(tw(&path(2)), 1);
        assert_eq!(tw(&path(9)), 1);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(tw(&star), 1);
        assert_eq!(tw(&cycle(5)), 2);
        assert_eq!(tw(&complete(1)), 0);
    }

    #[test]
    fn brute_force_agreement_small() {
        // All orderings vs DP on every graph with <= 5 vertices, plus seeded
        // graphs on 6 and 7 vertices.
        fn brute(g: &Graph) -> usize {
            let n = g.vertex_count();
            let mut ids: Vec<usize> = (0..n).collect();
            let mut best = usize::MAX;
            permute(&mut ids, 0, &mut |order| {
                best = best.min(elimination_width(g, order));
            });
            best
        }
        fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
            if k == v.len() {
                f(v);
                return;
            }
            for i in k..v.len() {
                v.swap(k, i);
                permute(v, k + 1, f);
                v.swap(k, i);
            }
        }
        // Exhaustive over all labeled graphs on 4 vertices.
        for mask in 0u32..(1 << 6) {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            assert_eq!(tw(&g), brute(&g), "mask {mask}");
        }
        // Seeded random graphs on 6 and 7 vertices.
        let mut rng = crate::rng::SplitMix64::new(0xDECAF);
        for n in [6usize, 7] {
            for _ in 0..25 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.next_bool(1, 2) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(tw(&g), brute(&g));
            }
        }
    }

    #[test]
    fn verifier_catches_violations() {
        let g = path(4);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            tree_edges: vec![(0, 1), (1, 2)],
        };
        assert_eq!(verify_decomposition(&g, &td), Ok(1));

        // Trivial one-bag decomposition.
        let triv = TreeDecomposition {
            bags: vec![vec![0, 1, 2, 3]],
            tree_edges: vec![],
        };
        assert_eq!(verify_decomposition(&g, &triv), Ok(3));

        // Dropping the middle bag disconnects vertex 1's (or 2's) bags and
        // uncovers an edge; with the tree reconnected the edge clause fires.
        let broken = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2, 3]],
            tree_edges: vec![(0, 1)],
        };
        assert_eq!(
            verify_decomposition(&g, &broken),
            Err(TdViolation::EdgeUncovered(1, 2))
        );

        let cycle_shape = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            tree_edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert!(matches!(
            verify_decomposition(&g, &cycle_shape),
            Err(TdViolation::NotATree(_))
        ));

        let disconnected_vertex = TreeDecomposition {
            bags: vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]],
            tree_edges: vec![(0, 1), (1, 2)],
        };
        assert_eq!(
            verify_decomposition(&g, &disconnected_vertex),
            Err(TdViolation::VertexBagsDisconnected(0))
        );
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(treewidth_lowerbound(&complete(6)), 5);
        assert_eq!(treewidth_lowerbound(&cycle(9)), 2);
        assert_eq!(tw(&cycle(9)), 2);
        // Bound never exceeds the exact value on a small corpus.
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..30 {
            let n = 5 + (rng.next_below(4) as usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_bool(2, 5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert!(treewidth_lowerbound(&g) <= tw(&g));
        }
    }

    #[test]
    fn limit_guard() {
        let g = path(23);
        assert!(matches!(
            treewidth_exact(&g, None),
            Err(Error::VertexLimitExceeded { n: 23, limit: 22 })
        ));
        assert!(treewidth_exact(&g, Some(23)).is_ok());
        assert!(treewidth_exact(&Graph::empty(0), None).is_err());
    }

    #[test]
    fn induced_subgraph_monotone() {
        let mut rng = crate::rng::SplitMix64::new(99);
        for _ in 0..15 {
            let n = 6 + (rng.next_below(3) as usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_bool(1, 2) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let keep: Vec<usize> = (0..n).filter(|_| rng.next_bool(2, 3)).collect();
            if keep.is_empty() {
                continue;
            }
            let (sub, _) = g.induced_subgraph(&keep).unwrap();
            assert!(tw(&sub) <= tw(&g));
        }
    }
}
