//! Canonical codes for small graphs (intended for at most ~16 vertices):
//! the lexicographically maximal lower-triangle adjacency bit string over
//! all vertex orderings, found by backtracking with prefix pruning.
//! Maximal (rather than minimal) puts edges early, which anchors the search
//! on sparse graphs. Used to deduplicate generated catalogs up to
//! isomorphism.

use crate::graph::Graph;

/// Canonical form: packed lower-triangle bits of the adjacency matrix under
/// the code-maximizing vertex order. Equal codes iff isomorphic.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 20, "canonical codes only supported for small graphs");
    if n <= 1 {
        return vec![];
    }
    let bits = n * (n - 1) / 2;
    let words = bits.div_ceil(64);
    let m = g.edge_count();
    // Complete and empty graphs are fixed points of every ordering.
    if m == n * (n - 1) / 2 || m == 0 {
        let mut code = vec![0u64; words];
        if m > 0 {
            for b in 0..bits {
                code[b / 64] |= 1 << (b % 64);
            }
        }
        return code;
    }
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut partial = vec![0u64; words];
    search(g, &mut perm, &mut used, &mut partial, 0, &mut best);
    best.expect("at least one permutation")
}

fn get_bit(code: &[u64], idx: usize) -> bool {
    code[idx / 64] >> (idx % 64) & 1 == 1
}

/// Compare candidate code against best on bit positions `[from, to)`:
/// Greater means the candidate prefix beats the best so far.
fn prefix_cmp(partial: &[u64], best: &[u64], from: usize, to: usize) -> std::cmp::Ordering {
    for idx in from..to {
        let p = get_bit(partial, idx);
        let b = get_bit(best, idx);
        if p != b {
            return if p {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Less
            };
        }
    }
    std::cmp::Ordering::Equal
}

/// Branch-and-bound over orderings. A branch survives only while its full
/// partial code is no smaller than the incumbent's corresponding prefix
/// (codes are a few words, so the comparison is cheap), and the incumbent
/// only ever grows, so pruning stays sound as it moves.
fn search(
    g: &Graph,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    partial: &mut Vec<u64>,
    bits_filled: usize,
    best: &mut Option<Vec<u64>>,
) {
    let n = g.vertex_count();
    let k = perm.len();
    if k == n {
        let better = match best {
            None => true,
            Some(b) => prefix_cmp(partial, b, 0, bits_filled).is_gt(),
        };
        if better {
            *best = Some(partial.clone());
        }
        return;
    }
    // Candidates ordered by the row value they would contribute, largest
    // first, so the first dive sets a strong bound.
    let mut cands: Vec<(u32, usize)> = (0..n)
        .filter(|&v| !used[v])
        .map(|v| {
            let mut row: u32 = 0;
            for (j, &u) in perm.iter().enumerate() {
                if g.has_edge(v, u) {
                    row |= 1 << (k - 1 - j);
                }
            }
            (row, v)
        })
        .collect();
    cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (row, v) in cands {
        let saved = partial.clone();
        for j in 0..k {
            if row >> (k - 1 - j) & 1 == 1 {
                let idx = bits_filled + j;
                partial[idx / 64] |= 1 << (idx % 64);
            }
        }
        let new_filled = bits_filled + k;
        let keep = match best {
            None => true,
            Some(b) => !prefix_cmp(partial, b, 0, new_filled).is_lt(),
        };
        if keep {
            used[v] = true;
            perm.push(v);
            search(g, perm, used, partial, new_filled, best);
            perm.pop();
            used[v] = false;
        }
        *partial = saved;
    }
}

/// Isomorphism test by invariants plus canonical code.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, Graph};

    #[test]
    fn relabeling_invariance() {
        let c5 = cycle(5);
        let shuffled = Graph::from_edges(5, &[(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&c5), canonical_code(&shuffled));
        assert!(are_isomorphic(&c5, &shuffled));
    }

    #[test]
    fn distinguishes_same_size_graphs() {
        let c6 = cycle(6);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(c6.edge_count(), two_triangles.edge_count());
        assert!(!are_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn paths_vs_stars() {
        let p4 = path(4);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
        assert!(are_isomorphic(&p4, &path(4)));
    }

    #[test]
    fn long_cycles_stay_cheap() {
        assert!(are_isomorphic(&cycle(16), &cycle(16)));
        assert!(!are_isomorphic(&cycle(16), &path(16)));
    }
}
