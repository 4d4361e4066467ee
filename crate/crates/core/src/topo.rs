//! Backtracking searches for induced topological models:
//!
//! - [`find_induced_subdivision`]: an induced subgraph of the host isomorphic
//!   to *some* subdivision of a pattern graph (optionally spanning, which
//!   decides "is this graph a subdivision of F").
//! - [`find_induced_line_subdivision`]: an induced subgraph isomorphic to the
//!   line graph of some subdivision of the pattern.
//!
//! Both assign pattern structure to host vertices task by task and maintain
//! the exact-adjacency invariant at every step, so a completed assignment is
//! a certified induced model. Candidates are tried in ascending host id;
//! exhaustion without a model is an exact "absent" verdict. Catalog
//! enumeration cannot decide these families at realistic host sizes (the
//! number of subdivisions explodes combinatorially), hence the structural
//! searches.

use crate::bitset::Bitset;
use crate::embed::{Budget, Embedding};
use crate::graph::{edge_key, Edge, Graph};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoOutcome<M> {
    Found(M),
    Absent,
    Exhausted,
}

impl<M> TopoOutcome<M> {
    pub fn found(&self) -> Option<&M> {
        match self {
            TopoOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

/// A found subdivision model: images of pattern vertices, and for every
/// pattern edge the full host path between the images (inclusive).
#[derive(Clone, Debug)]
pub struct SubdivisionModel {
    pub branch: Vec<usize>,
    /// Indexed like `pattern.edges()`; each path runs from the image of the
    /// lower edge endpoint to the image of the higher one.
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionModel {
    /// Extra internal vertices per pattern edge.
    pub fn extra_map(&self, pattern: &Graph) -> BTreeMap<Edge, usize> {
        pattern
            .edges()
            .into_iter()
            .zip(&self.paths)
            .map(|(e, p)| (e, p.len() - 2))
            .collect()
    }

    /// The concrete subdivision graph and its induced embedding into `g`.
    /// Vertex numbering follows `Graph::subdivide`.
    pub fn realize(&self, pattern: &Graph, g: &Graph) -> (Graph, Embedding) {
        let extra = self.extra_map(pattern);
        let s = pattern.subdivide(&extra).expect("model covers all edges");
        let mut map = vec![usize::MAX; s.vertex_count()];
        for (f_v, &img) in self.branch.iter().enumerate() {
            map[f_v] = img;
        }
        let mut next = pattern.vertex_count();
        for path in &self.paths {
            for &w in &path[1..path.len() - 1] {
                map[next] = w;
                next += 1;
            }
        }
        let emb = Embedding { map };
        debug_assert!(emb.verify(&s, g));
        (s, emb)
    }
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Place(usize),
    Route(usize), // index into pattern.edges()
}

/// Pattern vertices ordered so each next one is anchored to placed ones;
/// every edge is routed as soon as both endpoints are placed.
fn task_schedule(f: &Graph) -> Vec<Task> {
    let n = f.vertex_count();
    let edges = f.edges();
    let mut placed = vec![false; n];
    let mut routed = vec![false; edges.len()];
    let mut tasks = Vec::new();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = f.neighbors(v).iter().filter(|&u| placed[u]).count();
                (anchored, f.degree(v), n - v)
            })
            .unwrap();
        placed[v] = true;
        tasks.push(Task::Place(v));
        for (ei, &(a, b)) in edges.iter().enumerate() {
            if !routed[ei] && placed[a] && placed[b] {
                routed[ei] = true;
                tasks.push(Task::Route(ei));
            }
        }
    }
    tasks
}

struct SubdivSearch<'a> {
    f: &'a Graph,
    g: &'a Graph,
    edges: Vec<Edge>,
    tasks: Vec<Task>,
    spanning: bool,
    image: Vec<usize>,
    used: Bitset,
    used_count: usize,
    paths: Vec<Vec<usize>>,
}

impl SubdivSearch<'_> {
    /// May `w` join the model when its only permitted committed neighbors
    /// are `allowed`? (Everything else committed must be non-adjacent.)
    fn respects(&self, w: usize, allowed: &[usize]) -> bool {
        self.used
            .iter()
            .all(|z| !self.g.has_edge(w, z) || allowed.contains(&z))
    }

    fn solve(&mut self, ti: usize, budget: &mut Budget) -> TopoOutcome<SubdivisionModel> {
        if ti == self.tasks.len() {
            if self.spanning && self.used_count != self.g.vertex_count() {
                return TopoOutcome::Absent;
            }
            return TopoOutcome::Found(SubdivisionModel {
                branch: self.image.clone(),
                paths: self.paths.clone(),
            });
        }
        match self.tasks[ti] {
            Task::Place(v) => self.place(v, ti, budget),
            Task::Route(ei) => {
                let (a, b) = self.edges[ei];
                let (ia, ib) = (self.image[a], self.image[b]);
                if self.g.has_edge(ia, ib) {
                    // The direct edge is forced: any longer routing would
                    // leave it as a chord.
                    self.paths[ei] = vec![ia, ib];
                    let out = self.solve(ti + 1, budget);
                    self.paths[ei] = Vec::new();
                    return out;
                }
                let mut prefix = vec![ia];
                self.route(ei, ib, &mut prefix, ti, budget)
            }
        }
    }

    fn place(&mut self, v: usize, ti: usize, budget: &mut Budget) -> TopoOutcome<SubdivisionModel> {
        for w in 0..self.g.vertex_count() {
            if self.used.contains(w) {
                continue;
            }
            let deg_ok = if self.spanning {
                self.g.degree(w) == self.f.degree(v)
            } else {
                self.g.degree(w) >= self.f.degree(v)
            };
            if !deg_ok {
                continue;
            }
            // Adjacency to placed images is legal only across F-edges (the
            // routing is then forced direct); never to path interiors.
            let allowed: Vec<usize> = self
                .f
                .neighbors(v)
                .iter()
                .map(|u| self.image[u])
                .filter(|&img| img != usize::MAX)
                .collect();
            if !self.respects(w, &allowed) {
                continue;
            }
            if !budget.step() {
                return TopoOutcome::Exhausted;
            }
            self.image[v] = w;
            self.used.insert(w);
            self.used_count += 1;
            let out = self.solve(ti + 1, budget);
            self.used.remove(w);
            self.used_count -= 1;
            self.image[v] = usize::MAX;
            if !matches!(out, TopoOutcome::Absent) {
                return out;
            }
        }
        TopoOutcome::Absent
    }

    /// Extend the replacement path for edge `ei` towards `target`.
    fn route(
        &mut self,
        ei: usize,
        target: usize,
        prefix: &mut Vec<usize>,
        ti: usize,
        budget: &mut Budget,
    ) -> TopoOutcome<SubdivisionModel> {
        let head = *prefix.last().unwrap();
        for w in self.g.neighbors(head).iter() {
            if self.used.contains(w) {
                continue;
            }
            if self.g.degree(w) < 2 || (self.spanning && self.g.degree(w) != 2) {
                continue;
            }
            // Interiors touch only their predecessor; adjacency to the
            // target closes the path immediately (otherwise it would chord).
            if !self.respects(w, &[head, target]) {
                continue;
            }
            if !budget.step() {
                return TopoOutcome::Exhausted;
            }
            let closes = self.g.has_edge(w, target);
            self.used.insert(w);
            self.used_count += 1;
            prefix.push(w);
            let out = if closes {
                let mut full = prefix.clone();
                full.push(target);
                self.paths[ei] = full;
                let out = self.solve(ti + 1, budget);
                self.paths[ei] = Vec::new();
                out
            } else {
                self.route(ei, target, prefix, ti, budget)
            };
            prefix.pop();
            self.used.remove(w);
            self.used_count -= 1;
            if !matches!(out, TopoOutcome::Absent) {
                return out;
            }
        }
        TopoOutcome::Absent
    }
}

/// Search for an induced subgraph of `g` isomorphic to a subdivision of `f`.
/// With `spanning`, the model must use every host vertex, deciding whether
/// `g` itself is a subdivision of `f`.
pub fn find_induced_subdivision(
    f: &Graph,
    g: &Graph,
    spanning: bool,
    budget: &mut Budget,
) -> TopoOutcome<SubdivisionModel> {
    if f.vertex_count() == 0 {
        return if !spanning || g.vertex_count() == 0 {
            TopoOutcome::Found(SubdivisionModel {
                branch: vec![],
                paths: vec![],
            })
        } else {
            TopoOutcome::Absent
        };
    }
    if f.vertex_count() > g.vertex_count() {
        return TopoOutcome::Absent;
    }
    if spanning {
        // Subdivisions preserve branch degrees and only add degree-2
        // vertices, so degree counts and the edge/vertex balance must match.
        if g.edge_count() + f.vertex_count() != f.edge_count() + g.vertex_count() {
            return TopoOutcome::Absent;
        }
        let max_d = g
            .vertices()
            .map(|v| g.degree(v))
            .chain(f.vertices().map(|v| f.degree(v)))
            .max()
            .unwrap_or(0);
        for d in 0..=max_d {
            if d == 2 {
                continue;
            }
            let fc = f.vertices().filter(|&v| f.degree(v) == d).count();
            let gc = g.vertices().filter(|&v| g.degree(v) == d).count();
            if fc != gc {
                return TopoOutcome::Absent;
            }
        }
    }
    let edges = f.edges();
    let paths = vec![Vec::new(); edges.len()];
    let mut search = SubdivSearch {
        f,
        g,
        edges,
        tasks: task_schedule(f),
        spanning,
        image: vec![usize::MAX; f.vertex_count()],
        used: Bitset::new(g.vertex_count()),
        used_count: 0,
        paths,
    };
    search.solve(0, budget)
}

/// Is `g` (all of it) a subdivision of `f`? Returns the branch-vertex map
/// (pattern vertex -> host vertex).
pub fn is_subdivision_of(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
    match find_induced_subdivision(f, g, true, &mut Budget::unlimited()) {
        TopoOutcome::Found(m) => Some(m.branch),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Line graphs of subdivisions.
// ---------------------------------------------------------------------------

/// A found model of L(S), S a subdivision of the pattern: for every pattern
/// edge, the host vertices standing for the consecutive sub-edges of its
/// replacement path, ordered from the lower endpoint's side.
#[derive(Clone, Debug)]
pub struct LineModel {
    pub rails: Vec<Vec<usize>>,
}

impl LineModel {
    /// The concrete line graph of the underlying subdivision and its induced
    /// embedding into `g`.
    pub fn realize(&self, pattern: &Graph, g: &Graph) -> (Graph, Embedding) {
        let edges = pattern.edges();
        let extra: BTreeMap<Edge, usize> = edges
            .iter()
            .zip(&self.rails)
            .map(|(&e, r)| (e, r.len() - 1))
            .collect();
        let s = pattern.subdivide(&extra).expect("covers edges");
        // Sub-edges of `s` per pattern edge, mirroring Graph::subdivide's
        // internal numbering, mapped to the rail vertices in order.
        let mut sub_edge_img: BTreeMap<Edge, usize> = BTreeMap::new();
        let mut next = pattern.vertex_count();
        for (&(u, v), rail) in edges.iter().zip(&self.rails) {
            let k = rail.len();
            let mut prev = u;
            for (i, &img) in rail.iter().enumerate() {
                let cur = if i + 1 == k { v } else { next };
                sub_edge_img.insert(edge_key(prev, cur), img);
                if i + 1 != k {
                    prev = next;
                    next += 1;
                }
            }
        }
        let (l, l_edges) = s.line_graph();
        let map: Vec<usize> = l_edges.iter().map(|e| sub_edge_img[e]).collect();
        let emb = Embedding { map };
        debug_assert!(emb.verify(&l, g));
        (l, emb)
    }
}

struct LineSearch<'a> {
    g: &'a Graph,
    edges: Vec<Edge>,
    order: Vec<usize>,
    /// Port vertices accumulated at each pattern vertex (one per routed
    /// incident edge; a length-one rail serves both endpoints).
    ports: Vec<Vec<usize>>,
    used: Bitset,
    rails: Vec<Vec<usize>>,
}

impl LineSearch<'_> {
    fn respects(&self, w: usize, allowed: &[usize]) -> bool {
        self.used
            .iter()
            .all(|z| !self.g.has_edge(w, z) || allowed.contains(&z))
    }

    fn adjacent_to_all(&self, w: usize, vs: &[usize]) -> bool {
        vs.iter().all(|&p| self.g.has_edge(w, p))
    }

    fn solve(&mut self, oi: usize, budget: &mut Budget) -> TopoOutcome<LineModel> {
        if oi == self.order.len() {
            return TopoOutcome::Found(LineModel {
                rails: self.rails.clone(),
            });
        }
        let ei = self.order[oi];
        let (u, v) = self.edges[ei];
        // Route from an endpoint that already has ports when possible.
        let (from, to) = if self.ports[u].is_empty() && !self.ports[v].is_empty() {
            (v, u)
        } else {
            (u, v)
        };
        let mut rail = Vec::new();
        self.extend(ei, from, to, &mut rail, oi, budget)
    }

    /// Try candidate sub-edge vertices extending `rail` for edge `ei`.
    fn extend(
        &mut self,
        ei: usize,
        from: usize,
        to: usize,
        rail: &mut Vec<usize>,
        oi: usize,
        budget: &mut Budget,
    ) -> TopoOutcome<LineModel> {
        let first = rail.is_empty();
        let cands: Vec<usize> = if first {
            match self.ports[from].first() {
                Some(&p) => self.g.neighbors(p).iter().collect(),
                None => (0..self.g.vertex_count()).collect(),
            }
        } else {
            self.g.neighbors(*rail.last().unwrap()).iter().collect()
        };
        for w in cands {
            if self.used.contains(w) {
                continue;
            }
            // Must-neighbors: every port at `from` when first, else just the
            // predecessor. Adjacency to ports at `to` is legal only for the
            // closing sub-edge, and then to all of them.
            let required: Vec<usize> = if first {
                self.ports[from].clone()
            } else {
                vec![*rail.last().unwrap()]
            };
            if !self.adjacent_to_all(w, &required) {
                continue;
            }
            let hit = self.ports[to]
                .iter()
                .filter(|&&p| self.g.has_edge(w, p))
                .count();
            let close_forced = !self.ports[to].is_empty() && hit == self.ports[to].len();
            if hit > 0 && !close_forced {
                continue;
            }
            let mut allowed = required.clone();
            allowed.extend(self.ports[to].iter().copied());
            if !self.respects(w, &allowed) {
                continue;
            }
            if !budget.step() {
                return TopoOutcome::Exhausted;
            }
            self.used.insert(w);
            rail.push(w);
            let close_options: &[bool] = if close_forced {
                &[true]
            } else if self.ports[to].is_empty() {
                &[true, false]
            } else {
                &[false]
            };
            let mut out = TopoOutcome::Absent;
            for &close in close_options {
                out = if close {
                    self.close_rail(ei, from, to, rail, oi, budget)
                } else {
                    self.extend(ei, from, to, rail, oi, budget)
                };
                if !matches!(out, TopoOutcome::Absent) {
                    break;
                }
            }
            rail.pop();
            self.used.remove(w);
            if !matches!(out, TopoOutcome::Absent) {
                return out;
            }
        }
        TopoOutcome::Absent
    }

    fn close_rail(
        &mut self,
        ei: usize,
        from: usize,
        to: usize,
        rail: &mut [usize],
        oi: usize,
        budget: &mut Budget,
    ) -> TopoOutcome<LineModel> {
        let head = *rail.first().unwrap();
        let tail = *rail.last().unwrap();
        self.ports[from].push(head);
        self.ports[to].push(tail);
        // Store normalized from the lower endpoint's side.
        self.rails[ei] = if from == self.edges[ei].0 {
            rail.to_vec()
        } else {
            rail.iter().rev().copied().collect()
        };
        let out = self.solve(oi + 1, budget);
        self.rails[ei] = Vec::new();
        self.ports[from].pop();
        self.ports[to].pop();
        out
    }
}

/// Search for an induced subgraph of `g` isomorphic to the line graph of
/// some subdivision of `f`. `f` must have at least one edge.
pub fn find_induced_line_subdivision(
    f: &Graph,
    g: &Graph,
    budget: &mut Budget,
) -> TopoOutcome<LineModel> {
    let edges = f.edges();
    if edges.is_empty() {
        // L(S) of an edgeless subdivision is the empty graph.
        return TopoOutcome::Found(LineModel { rails: vec![] });
    }
    if edges.len() > g.vertex_count() {
        return TopoOutcome::Absent;
    }
    // Routing order: anchor each next edge to already-touched vertices.
    let mut order: Vec<usize> = Vec::with_capacity(edges.len());
    let mut touched = vec![false; f.vertex_count()];
    let mut done = vec![false; edges.len()];
    for _ in 0..edges.len() {
        let ei = (0..edges.len())
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let (a, b) = edges[i];
                let t = touched[a] as usize + touched[b] as usize;
                let anchor_deg = f.degree(a).max(f.degree(b));
                (t, anchor_deg, edges.len() - i)
            })
            .unwrap();
        done[ei] = true;
        touched[edges[ei].0] = true;
        touched[edges[ei].1] = true;
        order.push(ei);
    }
    let rails = vec![Vec::new(); edges.len()];
    let mut search = LineSearch {
        g,
        ports: vec![Vec::new(); f.vertex_count()],
        edges,
        order,
        used: Bitset::new(g.vertex_count()),
        rails,
    };
    search.solve(0, budget)
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
    fn cycles_are_triangle_subdivisions() {
        assert!(is_subdivision_of(&cycle(6), &cycle(3)).is_some());
        assert!(is_subdivision_of(&cycle(3), &cycle(3)).is_some());
        assert!(is_subdivision_of(&cycle(6), &complete(4)).is_none());
        assert!(is_subdivision_of(&path(5), &path(2)).is_some());
        assert!(is_subdivision_of(&path(5), &cycle(3)).is_none());
    }

    #[test]
    fn k4_subdivision_recognition() {
        let k4 = complete(4);
        let s = k4.subdivide_uniform(2);
        assert!(is_subdivision_of(&s, &k4).is_some());
        // Wrong vertex: extra isolated vertex is not a subdivision.
        let plus = s.disjoint_union(&Graph::empty(1));
        assert!(is_subdivision_of(&plus, &k4).is_none());
    }

    #[test]
    fn induced_subdivision_in_host() {
        // C_7 plus a chord contains an induced C_6? No: but contains an
        // induced cycle >= 3 of K_3. Use a concrete host: C_9 hosts an
        // induced subdivision of K_3 (the cycle itself).
        let out = find_induced_subdivision(&cycle(3), &cycle(9), false, &mut Budget::unlimited());
        let TopoOutcome::Found(m) = out else {
            panic!("expected model");
        };
        let (s, emb) = m.realize(&cycle(3), &cycle(9));
        assert!(emb.verify(&s, &cycle(9)));
        assert_eq!(s.vertex_count(), 9);

        // K_4 contains no induced subdivision of C_4 (any 4 vertices have
        // chords).
        let out = find_induced_subdivision(&cycle(4), &complete(4), false, &mut Budget::unlimited());
        assert!(matches!(out, TopoOutcome::Absent));
    }

    #[test]
    fn line_model_roundtrip() {
        // L(subdivision of K_{1,3}) hides inside the line graph itself.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = star.subdivide_uniform(1);
        let (l, _) = s.line_graph();
        let out = find_induced_line_subdivision(&star, &l, &mut Budget::unlimited());
        let TopoOutcome::Found(m) = out else {
            panic!("expected line model");
        };
        let (pat, emb) = m.realize(&star, &l);
        assert!(emb.verify(&pat, &l));
    }

    #[test]
    fn line_model_absent_in_triangle_free_host() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        // Line graphs of stars contain triangles; C_9 has none.
        let out = find_induced_line_subdivision(&star, &cycle(9), &mut Budget::unlimited());
        assert!(matches!(out, TopoOutcome::Absent));
    }

    #[test]
    fn line_model_of_cycle_is_cycle() {
        // L(subdivision of C_3) = some C_m; C_8 hosts it as itself.
        let out = find_induced_line_subdivision(&cycle(3), &cycle(8), &mut Budget::unlimited());
        let TopoOutcome::Found(m) = out else {
            panic!("expected model");
        };
        let (pat, emb) = m.realize(&cycle(3), &cycle(8));
        assert!(emb.verify(&pat, &cycle(8)));
        assert_eq!(pat.vertex_count(), 8);
    }

    #[test]
    fn budget_trips() {
        let out = find_induced_subdivision(&cycle(3), &cycle(30), false, &mut Budget::new(2));
        assert!(matches!(out, TopoOutcome::Exhausted));
    }
}
