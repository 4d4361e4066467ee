//! Inverse line graphs via Krausz partitions: a connected graph G is a line
//! graph iff its edge set partitions into cliques with every vertex in at
//! most two of them; the root graph has one vertex per clique (plus a
//! pendant end for each vertex lying in a single clique).
//!
//! For connected graphs on five or more vertices the root is unique up to
//! isomorphism (Whitney), so the first partition found suffices. The one
//! genuine ambiguity, K_3 = L(K_3) = L(K_{1,3}), is handled by returning
//! both preimages.

use crate::graph::{edge_key, Graph};

/// Root graphs R with L(R) isomorphic to `g`. Empty when `g` is not a line
/// graph. `g` must be connected.
pub fn line_graph_roots(g: &Graph) -> Vec<Graph> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    if n == 1 {
        return vec![crate::graph::path(2)];
    }
    debug_assert!(g.is_connected());
    // K_3 is the Whitney-exceptional case with two distinct roots.
    if n == 3 && g.edge_count() == 3 {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        return vec![crate::graph::cycle(3), star];
    }
    let edges = g.edges();
    let mut assigned = vec![usize::MAX; edges.len()];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    if krausz(g, &edges, &mut assigned, &mut cliques, &mut membership) {
        vec![root_from_partition(&cliques, &membership)]
    } else {
        Vec::new()
    }
}

/// Backtracking over the first unassigned edge: choose the full clique that
/// will contain it, among complete subsets of the common neighborhood whose
/// internal edges are all unassigned.
fn krausz(
    g: &Graph,
    edges: &[(usize, usize)],
    assigned: &mut Vec<usize>,
    cliques: &mut Vec<Vec<usize>>,
    membership: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(ei) = assigned.iter().position(|&c| c == usize::MAX) else {
        return true;
    };
    let (u, v) = edges[ei];
    if membership[u].len() >= 2 || membership[v].len() >= 2 {
        return false;
    }
    // Candidate extra vertices: common neighbors of u and v that still have
    // room, reachable through unassigned edges.
    let mut common: Vec<usize> = g
        .neighbors(u)
        .iter()
        .filter(|&w| g.has_edge(v, w) && membership[w].len() < 2)
        .collect();
    common.sort_unstable();
    // Enumerate complete subsets of `common` (together with u, v), smallest
    // first; all edges inside the chosen clique must be unassigned.
    let mut subsets = complete_subsets(g, &common);
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    for extra in subsets {
        let mut clique = vec![u, v];
        clique.extend(extra.iter().copied());
        clique.sort_unstable();
        // Collect inner edges; all must be unassigned.
        let mut inner = Vec::new();
        let mut ok = true;
        for i in 0..clique.len() {
            for j in i + 1..clique.len() {
                let key = edge_key(clique[i], clique[j]);
                let idx = edges.binary_search(&key).expect("clique edges exist");
                if assigned[idx] != usize::MAX {
                    ok = false;
                }
                inner.push(idx);
            }
        }
        if !ok {
            continue;
        }
        let cid = cliques.len();
        for &idx in &inner {
            assigned[idx] = cid;
        }
        for &w in &clique {
            membership[w].push(cid);
        }
        cliques.push(clique.clone());
        if krausz(g, edges, assigned, cliques, membership) {
            return true;
        }
        cliques.pop();
        for &w in &clique {
            membership[w].pop();
        }
        for &idx in &inner {
            assigned[idx] = usize::MAX;
        }
    }
    false
}

/// All subsets of `pool` that induce cliques (pool members are already
/// adjacent to the edge being covered), including the empty set.
fn complete_subsets(g: &Graph, pool: &[usize]) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, pool: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..pool.len() {
            let w = pool[i];
            if cur.iter().all(|&x| g.has_edge(x, w)) {
                cur.push(w);
                out.push(cur.clone());
                rec(g, pool, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = vec![vec![]];
    let mut cur = Vec::new();
    rec(g, pool, 0, &mut cur, &mut out);
    out
}

fn root_from_partition(cliques: &[Vec<usize>], membership: &[Vec<usize>]) -> Graph {
    let mut next = cliques.len();
    let mut edges = Vec::with_capacity(membership.len());
    for cl in membership {
        match cl.as_slice() {
            [a, b] => edges.push((*a, *b)),
            [a] => {
                edges.push((*a, next));
                next += 1;
            }
            _ => unreachable!("every covered vertex lies in one or two cliques"),
        }
    }
    Graph::from_edges(next, &edges).expect("krausz partition yields a simple root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::iso::are_isomorphic;

    #[test]
    fn cycles_are_self_roots() {
        for n in 4..9 {
            let roots = line_graph_roots(&cycle(n));
            assert_eq!(roots.len(), 1);
            assert!(are_isomorphic(&roots[0], &cycle(n)));
        }
    }

    #[test]
    fn triangle_has_two_roots() {
        let roots = line_graph_roots(&cycle(3));
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn path_roots() {
        // L(P_n) = P_{n-1}.
        let roots = line_graph_roots(&path(4));
        assert_eq!(roots.len(), 1);
        assert!(are_isomorphic(&roots[0], &path(5)));
    }

    #[test]
    fn line_graph_roundtrip() {
        let star_plus = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let (l, _) = star_plus.line_graph();
        let roots = line_graph_roots(&l);
        assert_eq!(roots.len(), 1);
        assert!(are_isomorphic(&roots[0], &star_plus));
    }

    #[test]
    fn non_line_graphs_rejected() {
        // K_{1,3} is the forbidden induced subgraph for line graphs.
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(line_graph_roots(&claw).is_empty());
        // The 5-wheel: odd hub degree cannot be covered by two hub cliques.
        let wheel5 = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)],
        )
        .unwrap();
        assert!(line_graph_roots(&wheel5).is_empty());
        // The 4-wheel, by contrast, is L(K_4 minus an edge).
        let wheel4 =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
                .unwrap();
        assert_eq!(line_graph_roots(&wheel4).len(), 1);
    }
}
