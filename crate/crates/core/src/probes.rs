//! Validators and small-scale deciders for blocks, polypaths, clusters and
//! webs. Block systems use plain (not necessarily induced) paths — a clique
//! needs chords in its connecting paths — while polypaths, clusters and
//! webs use induced paths throughout. Certificate checks are literal,
//! clause-by-clause, and report the first violation.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::flow::disjoint_paths_count;
use crate::graph::Graph;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ProbeViolation(pub String);

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, ProbeViolation> {
    Err(ProbeViolation(msg.into()))
}

/// Vertex-pair key in canonical order.
pub type PairKey = (usize, usize);

pub fn pair_key(x: usize, y: usize) -> PairKey {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

// ---------------------------------------------------------------------------
// Blocks
// ---------------------------------------------------------------------------

/// Explicit path systems certifying block properties.
#[derive(Clone, Debug, Default)]
pub struct BlockCertificate {
    pub block: Vec<usize>,
    pub systems: BTreeMap<PairKey, Vec<Vec<usize>>>,
}

/// Menger-style decision: `b` is a k-block iff it has at least `k` vertices
/// and every pair is joined by `k` internally disjoint paths.
pub fn is_k_block(g: &Graph, b: &[usize], k: usize) -> Result<bool> {
    if b.len() < 2 {
        return Err(Error::Invalid(
            "block set must have at least 2 vertices".into(),
        ));
    }
    for &v in b {
        g.check_vertex(v)?;
    }
    if b.len() < k {
        return Ok(false);
    }
    for (i, &x) in b.iter().enumerate() {
        for &y in &b[i + 1..] {
            if disjoint_paths_count(g, x, y)? < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check a block certificate: at least `k` internally disjoint paths per
/// 2-subset; optionally every path of length at most `d`; optionally the
/// strong condition (interiors of one system avoid every other system
/// entirely).
pub fn verify_block_certificate(
    g: &Graph,
    cert: &BlockCertificate,
    k: usize,
    d: Option<usize>,
    strong: bool,
) -> std::result::Result<(), ProbeViolation> {
    let b = &cert.block;
    if b.len() < 2 {
        return fail("block: needs at least 2 vertices");
    }
    if b.len() < k {
        return fail(format!(
            "block: {} vertices cannot form a {k}-block",
            b.len()
        ));
    }
    for (i, &x) in b.iter().enumerate() {
        for &y in &b[i + 1..] {
            let key = pair_key(x, y);
            let Some(paths) = cert.systems.get(&key) else {
                return fail(format!("systems: missing entry for pair ({x}, {y})"));
            };
            if paths.len() < k {
                return fail(format!(
                    "systems[({x}, {y})]: {} paths, {k} required",
                    paths.len()
                ));
            }
            let mut interiors_seen = Bitset::new(g.vertex_count());
            for (pi, p) in paths.iter().enumerate() {
                if p.len() < 2 || pair_key(p[0], p[p.len() - 1]) != key {
                    return fail(format!(
                        "systems[({x}, {y})][{pi}]: ends are not {{{x}, {y}}}"
                    ));
                }
                if !g.seq_is_simple_path(p) {
                    return fail(format!("systems[({x}, {y})][{pi}]: not a path in order"));
                }
                if let Some(dd) = d {
                    if p.len() - 1 > dd {
                        return fail(format!(
                            "systems[({x}, {y})][{pi}]: length {} exceeds {dd}",
                            p.len() - 1
                        ));
                    }
                }
                for &v in &p[1..p.len() - 1] {
                    if interiors_seen.contains(v) {
                        return fail(format!("systems[({x}, {y})]: interior vertex {v} reused"));
                    }
                    interiors_seen.insert(v);
                }
            }
        }
    }
    if strong {
        let keys: Vec<PairKey> = cert.systems.keys().copied().collect();
        for &ka in &keys {
            let mut interior_a = Bitset::new(g.vertex_count());
            for p in &cert.systems[&ka] {
                for &v in &p[1..p.len() - 1] {
                    interior_a.insert(v);
                }
            }
            for &kb in &keys {
                if ka == kb {
                    continue;
                }
                for p in &cert.systems[&kb] {
                    for &v in p {
                        if interior_a.contains(v) {
                            return fail(format!(
                                "strong: interior vertex {v} of pair ({}, {}) meets pair ({}, {})",
                                ka.0, ka.1, kb.0, kb.1
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Polypaths
// ---------------------------------------------------------------------------

/// Pairwise disjoint induced paths.
pub fn is_polypath(g: &Graph, paths: &[Vec<usize>]) -> bool {
    let mut seen = Bitset::new(g.vertex_count());
    for p in paths {
        if !g.seq_induces_path(p) {
            return false;
        }
        for &v in p {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
    }
    true
}

/// Every vertex of every path has neighbors in fewer than `d` other paths.
pub fn is_d_loose(g: &Graph, paths: &[Vec<usize>], d: usize) -> bool {
    if !is_polypath(g, paths) {
        return false;
    }
    let sets: Vec<Bitset> = paths
        .iter()
        .map(|p| Bitset::from_iter(g.vertex_count(), p.iter().copied()))
        .collect();
    for (i, p) in paths.iter().enumerate() {
        for &v in p {
            let touched = sets
                .iter()
                .enumerate()
                .filter(|(j, set)| *j != i && g.neighbors(v).intersects(set))
                .count();
            if touched >= d {
                return false;
            }
        }
    }
    true
}

/// Answer for the fancy-subset enumeration; combinatorial guards cap the
/// supported sizes, and "unsupported" is distinct from "none".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FancyAnswer {
    Subsets(Vec<Vec<usize>>),
    Unsupported,
}

/// All `w'`-subsets (as index lists) whose every member touches every path
/// outside the subset. Supported only for `w' <= 3` and at most 16 paths.
pub fn fancy_subsets(g: &Graph, paths: &[Vec<usize>], w_prime: usize) -> FancyAnswer {
    if w_prime == 0 || w_prime > 3 || paths.len() > 16 || w_prime > paths.len() {
        return FancyAnswer::Unsupported;
    }
    let sets: Vec<Bitset> = paths
        .iter()
        .map(|p| Bitset::from_iter(g.vertex_count(), p.iter().copied()))
        .collect();
    let touches = |i: usize, j: usize| -> bool {
        paths[i]
            .iter()
            .any(|&v| g.neighbors(v).intersects(&sets[j]))
    };
    let n = paths.len();
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..w_prime).collect();
    loop {
        let ok = combo.iter().all(|&i| {
            (0..n)
                .filter(|j| !combo.contains(j))
                .all(|j| touches(i, j))
        });
        if ok {
            out.push(combo.clone());
        }
        // Next combination in lexicographic order.
        let mut pos = w_prime;
        while pos > 0 && combo[pos - 1] == n - (w_prime - pos) - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        combo[pos - 1] += 1;
        for q in pos..w_prime {
            combo[q] = combo[q - 1] + 1;
        }
    }
    FancyAnswer::Subsets(out)
}

// ---------------------------------------------------------------------------
// Clusters
// ---------------------------------------------------------------------------

/// Cluster clauses: `paths` a polypath, pairwise anticomplete, disjoint from
/// `s`, and every apex with a neighbor in every path.
pub fn validate_cluster(
    g: &Graph,
    s: &[usize],
    paths: &[Vec<usize>],
) -> std::result::Result<(), ProbeViolation> {
    for &x in s {
        if g.check_vertex(x).is_err() {
            return fail(format!("S: vertex {x} out of range"));
        }
    }
    let sset = Bitset::from_iter(g.vertex_count(), s.iter().copied());
    if sset.count() != s.len() {
        return fail("S: duplicate vertices");
    }
    for (i, p) in paths.iter().enumerate() {
        for &v in p {
            if v >= g.vertex_count() {
                return fail(format!("paths[{i}]: vertex {v} out of range"));
            }
            if sset.contains(v) {
                return fail(format!("paths[{i}]: vertex {v} also lies in S"));
            }
        }
    }
    if !is_polypath(g, paths) {
        return fail("paths: not pairwise disjoint induced paths");
    }
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            if !g.are_anticomplete(&paths[i], &paths[j]).unwrap_or(false) {
                return fail(format!("paths[{i}]/paths[{j}]: not anticomplete"));
            }
        }
    }
    for (i, p) in paths.iter().enumerate() {
        let pset = Bitset::from_iter(g.vertex_count(), p.iter().copied());
        for &x in s {
            if !g.neighbors(x).intersects(&pset) {
                return fail(format!("S vertex {x}: no neighbor in paths[{i}]"));
            }
        }
    }
    Ok(())
}

pub fn is_cluster(g: &Graph, s: &[usize], paths: &[Vec<usize>]) -> bool {
    validate_cluster(g, s, paths).is_ok()
}

/// First path vertex with at least `d` neighbors in `s`, if any.
pub fn meagerness_offender(
    g: &Graph,
    s: &[usize],
    paths: &[Vec<usize>],
    d: usize,
) -> Option<usize> {
    let sset = Bitset::from_iter(g.vertex_count(), s.iter().copied());
    for p in paths {
        for &v in p {
            let mut nb = g.neighbors(v).clone();
            nb.intersect_with(&sset);
            if nb.count() >= d {
                return Some(v);
            }
        }
    }
    None
}

/// Every path vertex has fewer than `d` neighbors in `s`.
pub fn is_d_meager(g: &Graph, s: &[usize], paths: &[Vec<usize>], d: usize) -> bool {
    is_cluster(g, s, paths) && meagerness_offender(g, s, paths, d).is_none()
}

// ---------------------------------------------------------------------------
// Webs
// ---------------------------------------------------------------------------

/// One induced path per 2-subset, pairwise meeting only in shared endpoints.
#[derive(Clone, Debug, Default)]
pub struct WebCertificate {
    pub web: Vec<usize>,
    pub lambda: BTreeMap<PairKey, Vec<usize>>,
}

/// Check the three web clauses literally.
pub fn verify_web(g: &Graph, cert: &WebCertificate) -> std::result::Result<(), ProbeViolation> {
    let w = &cert.web;
    let wset = Bitset::from_iter(g.vertex_count(), w.iter().copied());
    if wset.count() != w.len() {
        return fail("W1: duplicate vertices in W");
    }
    for (i, &x) in w.iter().enumerate() {
        for &y in &w[i + 1..] {
            let key = pair_key(x, y);
            let Some(p) = cert.lambda.get(&key) else {
                return fail(format!("W2: missing path for pair ({x}, {y})"));
            };
            if p.is_empty() || pair_key(p[0], p[p.len() - 1]) != key {
                return fail(format!(
                    "W2: path for ({x}, {y}) does not have ends {x}, {y}"
                ));
            }
            if !g.seq_induces_path(p) {
                return fail(format!("W2: path for ({x}, {y}) is not an induced path"));
            }
        }
    }
    let keys: Vec<PairKey> = cert.lambda.keys().copied().collect();
    for (a, &ka) in keys.iter().enumerate() {
        for &kb in &keys[a + 1..] {
            let pa = &cert.lambda[&ka];
            let pb = &cert.lambda[&kb];
            let fa = Bitset::from_iter(g.vertex_count(), pa.iter().copied());
            let mut shared = Bitset::from_iter(g.vertex_count(), pb.iter().copied());
            shared.intersect_with(&fa);
            let mut want: Vec<usize> = [ka.0, ka.1]
                .iter()
                .filter(|v| [kb.0, kb.1].contains(v))
                .copied()
                .collect();
            want.sort_unstable();
            let got: Vec<usize> = shared.iter().collect();
            if got != want {
                return fail(format!(
                    "W3: paths for ({}, {}) and ({}, {}) share {:?}, expected {:?}",
                    ka.0, ka.1, kb.0, kb.1, got, want
                ));
            }
        }
    }
    Ok(())
}

/// A web from a strong block certificate by keeping one path per pair.
/// Valid whenever the chosen paths are induced.
pub fn block_certificate_to_web(cert: &BlockCertificate) -> WebCertificate {
    WebCertificate {
        web: cert.block.clone(),
        lambda: cert
            .systems
            .iter()
            .filter_map(|(k, paths)| paths.first().map(|p| (*k, p.clone())))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Minor-model witnesses
// ---------------------------------------------------------------------------

/// A contraction witness: pairwise disjoint connected branch sets plus the
/// cross edges that must be present.
#[derive(Clone, Debug)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
    pub required_edges: Vec<(usize, usize)>,
}

pub fn check_minor_model(
    g: &Graph,
    model: &MinorModel,
) -> std::result::Result<(), ProbeViolation> {
    let mut seen = Bitset::new(g.vertex_count());
    for (i, set) in model.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return fail(format!("branch_sets[{i}]: empty"));
        }
        for &v in set {
            if v >= g.vertex_count() {
                return fail(format!("branch_sets[{i}]: vertex {v} out of range"));
            }
            if seen.contains(v) {
                return fail(format!("branch_sets[{i}]: vertex {v} reused"));
            }
            seen.insert(v);
        }
        let (sub, _) = g.induced_subgraph(set).expect("ids checked");
        if !sub.is_connected() {
            return fail(format!("branch_sets[{i}]: not connected"));
        }
    }
    for &(i, j) in &model.required_edges {
        if i >= model.branch_sets.len() || j >= model.branch_sets.len() {
            return fail(format!("required_edges: bad branch indices ({i}, {j})"));
        }
        let a = &model.branch_sets[i];
        let bset = Bitset::from_iter(g.vertex_count(), model.branch_sets[j].iter().copied());
        if !a.iter().any(|&v| g.neighbors(v).intersects(&bset)) {
            return fail(format!("required_edges: no edge between sets {i} and {j}"));
        }
    }
    Ok(())
}

/// The K_{s,l}-minor witness carried by every (s,l)-cluster: apex singletons
/// on one side, path branch sets on the other.
pub fn cluster_minor_witness(g: &Graph, s: &[usize], paths: &[Vec<usize>]) -> MinorModel {
    let mut branch_sets: Vec<Vec<usize>> = s.iter().map(|&x| vec![x]).collect();
    branch_sets.extend(paths.iter().cloned());
    let required_edges = (0..s.len())
        .flat_map(|i| (0..paths.len()).map(move |j| (i, s.len() + j)))
        .collect();
    let model = MinorModel {
        branch_sets,
        required_edges,
    };
    debug_assert!(check_minor_model(g, &model).is_ok());
    model
}

/// The K_{w',w-w'}-minor witness carried by a w'-fancy polypath.
pub fn fancy_minor_witness(_g: &Graph, paths: &[Vec<usize>], subset: &[usize]) -> MinorModel {
    let inside: Vec<Vec<usize>> = subset.iter().map(|&i| paths[i].clone()).collect();
    let outside: Vec<Vec<usize>> = (0..paths.len())
        .filter(|i| !subset.contains(i))
        .map(|i| paths[i].clone())
        .collect();
    let k = inside.len();
    let mut branch_sets = inside;
    branch_sets.extend(outside);
    let total = branch_sets.len();
    let required_edges = (0..k).flat_map(|i| (k..total).map(move |j| (i, j))).collect();
    MinorModel {
        branch_sets,
        required_edges,
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

    fn k4_certificate() -> (Graph, BlockCertificate) {
        let k4 = complete(4);
        let b = vec![0, 1, 2, 3];
        let mut systems = BTreeMap::new();
        for x in 0..4usize {
            for y in x + 1..4 {
                let others: Vec<usize> = (0..4).filter(|&z| z != x && z != y).collect();
                let paths = vec![vec![x, y], vec![x, others[0], y], vec![x, others[1], y]];
                systems.insert(pair_key(x, y), paths);
            }
        }
        (k4, BlockCertificate { block: b, systems })
    }

    #[test]
    fn block_decisions() {
        let k4 = complete(4);
        assert!(is_k_block(&k4, &[0, 1, 2, 3], 3).unwrap());
        let c5 = cycle(5);
        assert!(is_k_block(&c5, &[0, 2, 4], 2).unwrap());
        assert!(!is_k_block(&c5, &[0, 2, 4], 3).unwrap());
        let p5 = path(5);
        assert!(!is_k_block(&p5, &[0, 4], 2).unwrap());
        assert!(is_k_block(&p5, &[0], 1).is_err());
    }

    #[test]
    fn block_certificates() {
        let (k4, cert) = k4_certificate();
        assert!(verify_block_certificate(&k4, &cert, 3, None, false).is_ok());
        assert!(verify_block_certificate(&k4, &cert, 3, Some(2), false).is_ok());
        // The two-hop paths park interiors on other pairs' endpoints, so the
        // strong condition must fail here.
        assert!(verify_block_certificate(&k4, &cert, 3, None, true).is_err());

        // One lengthened path violates d = 2.
        let mut longer = cert.clone();
        longer.systems.get_mut(&(0, 1)).unwrap()[1] = vec![0, 2, 3, 1];
        let err = verify_block_certificate(&k4, &longer, 3, Some(2), false).unwrap_err();
        assert!(err.0.contains("exceeds 2"), "{err}");

        // Direct-edge systems are a strong (and 1-short) 1-block witness.
        let mut direct = BlockCertificate {
            block: vec![0, 1, 2, 3],
            systems: BTreeMap::new(),
        };
        for x in 0..4usize {
            for y in x + 1..4 {
                direct.systems.insert(pair_key(x, y), vec![vec![x, y]]);
            }
        }
        assert!(verify_block_certificate(&k4, &direct, 1, Some(1), true).is_ok());

        // A shared interior vertex is reported by id.
        let mut shared = direct.clone();
        shared.systems.insert(pair_key(0, 1), vec![vec![0, 2, 1]]);
        let err = verify_block_certificate(&k4, &shared, 1, None, true).unwrap_err();
        assert!(err.0.contains("vertex 2"), "{err}");
    }

    #[test]
    fn polypaths_and_looseness() {
        // Two anticomplete paths: 1-loose, no 1-fancy subset.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let paths = vec![vec![0, 1, 2], vec![3, 4, 5]];
        assert!(is_polypath(&g, &paths));
        assert!(is_d_loose(&g, &paths, 1));
        assert_eq!(fancy_subsets(&g, &paths, 1), FancyAnswer::Subsets(vec![]));

        let bad = vec![vec![0, 1], vec![1, 2]];
        assert!(!is_polypath(&g, &bad));

        assert_eq!(fancy_subsets(&g, &paths, 4), FancyAnswer::Unsupported);
    }

    #[test]
    fn looseness_monotone() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3)]).unwrap();
        let paths = vec![vec![0, 1, 2], vec![3, 4, 5]];
        assert!(!is_d_loose(&g, &paths, 1));
        assert!(is_d_loose(&g, &paths, 2));
        assert!(is_d_loose(&g, &paths, 3));
    }

    #[test]
    fn fancy_and_loose_synthetic() {
        // Six 2-vertex paths; the first three each touch every other path,
        // contacts spread so each vertex meets at most one foreign path.
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (2 * i, 2 * i + 1)).collect();
        for i in 0..3usize {
            for j in 0..6usize {
                if i == j {
                    continue;
                }
                let a = 2 * i + (j % 2);
                let b = 2 * j + (i % 2);
                edges.push((a, b));
            }
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        let paths: Vec<Vec<usize>> = (0..6).map(|i| vec![2 * i, 2 * i + 1]).collect();
        assert!(is_polypath(&g, &paths));
        let FancyAnswer::Subsets(subs) = fancy_subsets(&g, &paths, 3) else {
            panic!("supported sizes");
        };
        assert!(subs.contains(&vec![0, 1, 2]));
        let model = fancy_minor_witness(&g, &paths, &[0, 1, 2]);
        assert!(check_minor_model(&g, &model).is_ok());
    }

    #[test]
    fn clusters() {
        // Three paths of 5 vertices, three apexes each adjacent to one
        // interior vertex per path: a (3,3)-cluster, 2-meager.
        let mut edges = Vec::new();
        for p in 0..3usize {
            let off = 5 * p;
            for i in 0..4 {
                edges.push((off + i, off + i + 1));
            }
        }
        let apexes = [15, 16, 17];
        for (ai, &a) in apexes.iter().enumerate() {
            for p in 0..3usize {
                edges.push((a, 5 * p + 1 + ai));
            }
        }
        let g = Graph::from_edges(18, &edges).unwrap();
        let paths: Vec<Vec<usize>> = (0..3).map(|p| (5 * p..5 * p + 5).collect()).collect();
        assert!(is_cluster(&g, &apexes, &paths));
        assert!(is_d_meager(&g, &apexes, &paths, 2));
        assert!(!is_d_meager(&g, &apexes, &paths, 1));
        let model = cluster_minor_witness(&g, &apexes, &paths);
        assert!(check_minor_model(&g, &model).is_ok());

        // Apex missing a path is reported.
        let mut short = edges.clone();
        short.retain(|&e| e != (15, 1));
        let g2 = Graph::from_edges(18, &short).unwrap();
        let err = validate_cluster(&g2, &apexes, &paths).unwrap_err();
        assert!(err.0.contains("no neighbor"), "{err}");

        assert_eq!(meagerness_offender(&g, &apexes, &paths, 1), Some(1));
    }

    #[test]
    fn webs() {
        let k4 = complete(4);
        let mut lambda = BTreeMap::new();
        for x in 0..4usize {
            for y in x + 1..4 {
                lambda.insert(pair_key(x, y), vec![x, y]);
            }
        }
        let cert = WebCertificate {
            web: vec![0, 1, 2, 3],
            lambda: lambda.clone(),
        };
        assert!(verify_web(&k4, &cert).is_ok());

        // Strong-block -> web conversion on direct edges.
        let mut systems = BTreeMap::new();
        for (k, p) in &lambda {
            systems.insert(*k, vec![p.clone()]);
        }
        let bc = BlockCertificate {
            block: vec![0, 1, 2, 3],
            systems,
        };
        let web = block_certificate_to_web(&bc);
        assert!(verify_web(&k4, &web).is_ok());
    }

    #[test]
    fn web_crossing_violation() {
        // Two paths through a common interior vertex violate W3; the other
        // pairs ride direct edges.
        let host = Graph::from_edges(
            5,
            &[(0, 4), (4, 1), (2, 4), (4, 3), (0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap();
        let mut lambda = BTreeMap::new();
        lambda.insert((0, 1), vec![0, 4, 1]);
        lambda.insert((2, 3), vec![2, 4, 3]);
        lambda.insert((0, 2), vec![0, 2]);
        lambda.insert((0, 3), vec![0, 3]);
        lambda.insert((1, 2), vec![1, 2]);
        lambda.insert((1, 3), vec![1, 3]);
        let cert = WebCertificate {
            web: vec![0, 1, 2, 3],
            lambda,
        };
        let err = verify_web(&host, &cert).unwrap_err();
        assert!(err.0.starts_with("W3"), "{err}");
        assert!(err.0.contains("[4]"), "{err}");
    }

    #[test]
    fn minor_model_rejections() {
        let g = path(4);
        let ok = MinorModel {
            branch_sets: vec![vec![0, 1], vec![2, 3]],
            required_edges: vec![(0, 1)],
        };
        assert!(check_minor_model(&g, &ok).is_ok());
        let disconnected = MinorModel {
            branch_sets: vec![vec![0, 2]],
            required_edges: vec![],
        };
        assert!(check_minor_model(&g, &disconnected).is_err());
        let missing_edge = MinorModel {
            branch_sets: vec![vec![0], vec![3]],
            required_edges: vec![(0, 1)],
        };
        assert!(check_minor_model(&g, &missing_edge).is_err());
    }
}
