//! Exact induced-subgraph search: backtracking over pattern vertices with
//! degree and neighborhood-bitmask pruning. Candidate order is ascending
//! host id throughout, so results are reproducible run to run.

use crate::bitset::Bitset;
use crate::graph::Graph;

/// Injective map from pattern vertex ids to host vertex ids. When produced
/// by [`find_induced`] it preserves adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Exhaustive check that `map` is an induced embedding of `h` into `g`.
    pub fn verify(&self, h: &Graph, g: &Graph) -> bool {
        if self.map.len() != h.vertex_count() {
            return false;
        }
        let mut seen = Bitset::new(g.vertex_count());
        for &w in &self.map {
            if w >= g.vertex_count() || seen.contains(w) {
                return false;
            }
            seen.insert(w);
        }
        for u in 0..self.map.len() {
            for v in u + 1..self.map.len() {
                if h.has_edge(u, v) != g.has_edge(self.map[u], self.map[v]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Search verdict. `Absent` is exact: it is only returned when the search
/// space was exhausted within budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Embedding),
    Absent,
    Exhausted,
}

impl SearchOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            SearchOutcome::Found(e) => Some(e),
            _ => None,
        }
    }
}

/// Node-expansion budget. A counter rather than wall-clock so verdicts are
/// reproducible.
#[derive(Clone, Debug)]
pub struct Budget {
    remaining: u64,
    pub spent: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            remaining: limit,
            spent: 0,
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn step(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        self.spent += 1;
        true
    }
}

/// Find an induced copy of `h` in `g`. The empty pattern embeds trivially.
pub fn find_induced(h: &Graph, g: &Graph, budget: &mut Budget) -> SearchOutcome {
    let hn = h.vertex_count();
    let gn = g.vertex_count();
    if hn == 0 {
        return SearchOutcome::Found(Embedding { map: vec![] });
    }
    if hn > gn {
        return SearchOutcome::Absent;
    }

    let order = pattern_order(h);
    // placed_neighbors[i]: pattern neighbors of order[i] among order[..i].
    let mut image = vec![usize::MAX; hn];
    let mut used = Bitset::new(gn);
    let host_deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();

    struct Ctx<'a> {
        h: &'a Graph,
        g: &'a Graph,
        order: &'a [usize],
        host_deg: &'a [usize],
    }

    fn rec(
        ctx: &Ctx,
        depth: usize,
        image: &mut [usize],
        used: &mut Bitset,
        budget: &mut Budget,
    ) -> SearchOutcome {
        if depth == ctx.order.len() {
            return SearchOutcome::Found(Embedding {
                map: image.to_vec(),
            });
        }
        let p = ctx.order[depth];
        // Candidate mask: start from all unused, then constrain by each
        // placed pattern vertex (neighbors must map to neighbors,
        // non-neighbors to non-neighbors).
        let gn = ctx.g.vertex_count();
        let mut cand = Bitset::new(gn);
        for w in 0..gn {
            if !used.contains(w) && ctx.host_deg[w] >= ctx.h.degree(p) {
                cand.insert(w);
            }
        }
        for &q in &ctx.order[..depth] {
            let mq = image[q];
            if ctx.h.has_edge(p, q) {
                cand.intersect_with(ctx.g.neighbors(mq));
            } else {
                cand.subtract(ctx.g.neighbors(mq));
            }
            if cand.is_empty() {
                return SearchOutcome::Absent;
            }
        }
        for w in cand.iter() {
            if !budget.step() {
                return SearchOutcome::Exhausted;
            }
            image[p] = w;
            used.insert(w);
            match rec(ctx, depth + 1, image, used, budget) {
                SearchOutcome::Absent => {}
                done => return done,
            }
            used.remove(w);
            image[p] = usize::MAX;
        }
        SearchOutcome::Absent
    }

    let ctx = Ctx {
        h,
        g,
        order: &order,
        host_deg: &host_deg,
    };
    rec(&ctx, 0, &mut image, &mut used, budget)
}

/// Convenience wrapper with no budget.
pub fn contains_induced(h: &Graph, g: &Graph) -> bool {
    matches!(
        find_induced(h, g, &mut Budget::unlimited()),
        SearchOutcome::Found(_)
    )
}

/// Pattern vertex order: highest degree first, then greedily the vertex with
/// the most already-ordered neighbors (ties by degree then id). Keeps the
/// search anchored in connected patterns.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let anchored = h.neighbors(v).iter().filter(|&u| placed[u]).count();
            let key = (anchored, h.degree(v), n - v);
            if best.map(|b| key > b).unwrap_or(true) {
                best = Some(key);
            }
        }
        let (_, _, inv) = best.unwrap();
        let v = n - inv;
        placed[v] = true;
        order.push(v);
    }
    order
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
    fn k3_in_k4() {
        let out = find_induced(&complete(3), &complete(4), &mut Budget::unlimited());
        let SearchOutcome::Found(e) = &out else {
            panic!("expected embedding")
        };
        assert!(e.verify(&complete(3), &complete(4)));
    }

    #[test]
    fn no_induced_p4_in_k4() {
        assert_eq!(
            find_induced(&path(4), &complete(4), &mut Budget::unlimited()),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn p4_in_c5() {
        let out = find_induced(&path(4), &cycle(5), &mut Budget::unlimited());
        let SearchOutcome::Found(e) = &out else {
            panic!("expected embedding")
        };
        assert!(e.verify(&path(4), &cycle(5)));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let mut b = Budget::new(1);
        let out = find_induced(&path(4), &cycle(9), &mut b);
        assert_eq!(out, SearchOutcome::Exhausted);
    }

    #[test]
    fn empty_and_oversized_patterns() {
        let g = path(3);
        assert!(matches!(
            find_induced(&Graph::empty(0), &g, &mut Budget::unlimited()),
            SearchOutcome::Found(_)
        ));
        assert_eq!(
            find_induced(&path(5), &g, &mut Budget::unlimited()),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn disconnected_pattern() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        // C_6 contains an induced 2K_2.
        assert!(contains_induced(&two_k2, &cycle(6)));
        // K_4 does not.
        assert!(!contains_induced(&two_k2, &complete(4)));
    }
}
