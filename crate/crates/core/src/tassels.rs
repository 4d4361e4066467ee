//! Strands, tassels, hassles and array witnesses: the labeled structures
//! layered over a graph, their validators, and the three constructive
//! transformations (tassel to array, walk to tassel, cluster to hassle).
//!
//! Validators never search for structure: they check a supplied witness,
//! clause by clause, so every check is polynomial.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lang::BitString;
use crate::probes;
use crate::rng::SplitMix64;

/// A path plus a neck vertex with at least one neighbor on the path.
#[derive(Clone, Debug)]
pub struct Strand {
    pub graph: Graph,
    pub neck: usize,
    pub path: Vec<usize>,
}

/// Disjoint copies of one strand glued at the neck.
#[derive(Clone, Debug)]
pub struct Tassel {
    pub graph: Graph,
    pub neck: usize,
    pub paths: Vec<Vec<usize>>,
}

/// Disjoint c-stretched walks, arbitrary edges between them, plus a neck.
#[derive(Clone, Debug)]
pub struct Hassle {
    pub graph: Graph,
    pub neck: usize,
    pub walks: Vec<Vec<usize>>,
}

/// The path/apex labeling of an n-array.
#[derive(Clone, Debug)]
pub struct ArrayWitness {
    pub paths: Vec<Vec<usize>>,
    pub apexes: Vec<usize>,
}

/// A failed witness clause, naming the field at fault.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct WitnessViolation(pub String);

fn fail(msg: impl Into<String>) -> std::result::Result<(), WitnessViolation> {
    Err(WitnessViolation(msg.into()))
}

// ---------------------------------------------------------------------------
// Strands
// ---------------------------------------------------------------------------

/// Build the strand encoded by a neck-adjacency pattern: a path on
/// `pattern.len()` vertices (ids in path order), neck as the last id,
/// adjacent to position `i` iff bit `i` is set.
pub fn strand_from_pattern(pattern: &BitString) -> Result<Strand> {
    if !pattern.has_one() {
        return Err(Error::AllZeroPattern);
    }
    let n = pattern.len();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    for i in 0..n {
        if pattern.bit(i) {
            edges.push((i, n));
        }
    }
    let graph = Graph::from_edges(n + 1, &edges)?;
    Ok(Strand {
        graph,
        neck: n,
        path: (0..n).collect(),
    })
}

/// Neck-adjacency bits of a strand along its stored path order.
pub fn strand_bits(s: &Strand) -> BitString {
    BitString::new(
        s.path
            .iter()
            .map(|&p| s.graph.has_edge(s.neck, p))
            .collect(),
    )
}

pub fn validate_strand(s: &Strand) -> std::result::Result<(), WitnessViolation> {
    let g = &s.graph;
    if g.check_vertex(s.neck).is_err() {
        return fail("neck: vertex id out of range");
    }
    if s.path.contains(&s.neck) {
        return fail("path_order: contains the neck");
    }
    if !g.seq_induces_path(&s.path) {
        return fail("path_order: does not induce a path in order");
    }
    if s.path.len() + 1 != g.vertex_count() {
        return fail("graph: extra vertices beyond path plus neck");
    }
    if !s.path.iter().any(|&p| g.has_edge(s.neck, p)) {
        return fail("neck: no neighbor in the path");
    }
    Ok(())
}

/// Neck avoids the first and last `c` path vertices.
pub fn is_c_strand(s: &Strand, c: usize) -> bool {
    if validate_strand(s).is_err() {
        return false;
    }
    strand_bits(s).is_c_padded(c)
}

// ---------------------------------------------------------------------------
// Tassels
// ---------------------------------------------------------------------------

/// Glue `count` disjoint copies of the strand at a single neck. Copy `k`'s
/// path occupies ids `k*len..(k+1)*len`; the neck is the last id.
pub fn build_tassel(strand: &Strand, count: usize) -> Result<Tassel> {
    if count == 0 {
        return Err(Error::ZeroSize);
    }
    validate_strand(strand).map_err(|v| Error::Invalid(v.0))?;
    let bits = strand_bits(strand);
    let len = bits.len();
    let neck = count * len;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut paths = Vec::with_capacity(count);
    for k in 0..count {
        let off = k * len;
        for i in 1..len {
            edges.push((off + i - 1, off + i));
        }
        for i in 0..len {
            if bits.bit(i) {
                edges.push((off + i, neck));
            }
        }
        paths.push((off..off + len).collect());
    }
    let graph = Graph::from_edges(neck + 1, &edges)?;
    Ok(Tassel { graph, neck, paths })
}

pub fn validate_tassel(t: &Tassel) -> std::result::Result<(), WitnessViolation> {
    let g = &t.graph;
    if t.paths.is_empty() {
        return fail("paths: empty");
    }
    if g.check_vertex(t.neck).is_err() {
        return fail("neck: vertex id out of range");
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[t.neck] = true;
    for (i, p) in t.paths.iter().enumerate() {
        for &v in p {
            if v >= g.vertex_count() {
                return fail(format!("paths[{i}]: vertex id out of range"));
            }
            if seen[v] {
                return fail(format!("paths[{i}]: overlaps the neck or another path"));
            }
            seen[v] = true;
        }
        if !g.seq_induces_path(p) {
            return fail(format!("paths[{i}]: does not induce a path in order"));
        }
    }
    if !seen.iter().all(|&b| b) {
        return fail("graph: vertices outside neck and paths");
    }
    for i in 0..t.paths.len() {
        for j in i + 1..t.paths.len() {
            if !t.graph
                .are_anticomplete(&t.paths[i], &t.paths[j])
                .unwrap_or(false)
            {
                return fail(format!("paths[{i}]/paths[{j}]: not anticomplete"));
            }
        }
    }
    // All strands are copies of one strand: identical neck-adjacency bits up
    // to reversal (hence identical lengths), each with a neighbor.
    let mut canon: Option<BitString> = None;
    for (i, p) in t.paths.iter().enumerate() {
        let bits = BitString::new(p.iter().map(|&v| g.has_edge(t.neck, v)).collect());
        if !bits.has_one() {
            return fail(format!("paths[{i}]: neck has no neighbor here"));
        }
        let c = bits.canonical();
        match &canon {
            None => canon = Some(c),
            Some(prev) if *prev != c => {
                return fail(format!("paths[{i}]: strand differs from paths[0]"))
            }
            _ => {}
        }
    }
    Ok(())
}

/// At least `c` paths, all copies of one `c`-strand.
pub fn is_c_tassel(t: &Tassel, c: usize) -> bool {
    if c == 0 || validate_tassel(t).is_err() || t.paths.len() < c {
        return false;
    }
    let p = &t.paths[0];
    let bits = BitString::new(p.iter().map(|&v| t.graph.has_edge(t.neck, v)).collect());
    bits.is_c_padded(c)
}

/// Reinterpret a tassel as a hassle (paths are walks).
pub fn tassel_as_hassle(t: &Tassel) -> Hassle {
    Hassle {
        graph: t.graph.clone(),
        neck: t.neck,
        walks: t.paths.clone(),
    }
}

// ---------------------------------------------------------------------------
// Hassles
// ---------------------------------------------------------------------------

pub fn validate_hassle(h: &Hassle) -> std::result::Result<(), WitnessViolation> {
    let g = &h.graph;
    if h.walks.is_empty() {
        return fail("walks: empty");
    }
    if g.check_vertex(h.neck).is_err() {
        return fail("neck: vertex id out of range");
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[h.neck] = true;
    for (i, w) in h.walks.iter().enumerate() {
        if w.is_empty() {
            return fail(format!("walks[{i}]: empty sequence"));
        }
        let mut mine = vec![false; g.vertex_count()];
        for &v in w {
            if v >= g.vertex_count() {
                return fail(format!("walks[{i}]: vertex id out of range"));
            }
            if v == h.neck {
                return fail(format!("walks[{i}]: passes through the neck"));
            }
            if seen[v] && !mine[v] {
                return fail(format!("walks[{i}]: overlaps another walk"));
            }
            seen[v] = true;
            mine[v] = true;
        }
        for pair in w.windows(2) {
            if pair[0] == pair[1] || !g.has_edge(pair[0], pair[1]) {
                return fail(format!("walks[{i}]: consecutive images not adjacent"));
            }
        }
    }
    if !seen.iter().all(|&b| b) {
        return fail("graph: vertices outside neck and walks");
    }
    Ok(())
}

/// Every window of at most `c` consecutive positions induces a path.
fn is_c_stretched(g: &Graph, walk: &[usize], c: usize) -> bool {
    for size in 1..=c.min(walk.len()) {
        for win in walk.windows(size) {
            let mut set: Vec<usize> = win.to_vec();
            set.sort_unstable();
            set.dedup();
            let (sub, _) = g.induced_subgraph(&set).expect("walk ids valid");
            if !sub.is_path() {
                return false;
            }
        }
    }
    true
}

/// All hassle invariants at parameter `c`: at least `c` pairwise disjoint
/// `c`-stretched walks, the neck with a neighbor in each walk but none among
/// its first or last `c` vertices. Edges between walks are unrestricted.
pub fn is_c_hassle(h: &Hassle, c: usize) -> bool {
    validate_hassle_at(h, c).is_ok()
}

pub fn validate_hassle_at(h: &Hassle, c: usize) -> std::result::Result<(), WitnessViolation> {
    if c == 0 {
        return fail("c: must be positive");
    }
    validate_hassle(h)?;
    if h.walks.len() < c {
        return fail(format!("walks: {} found, {c} required", h.walks.len()));
    }
    let g = &h.graph;
    for (i, w) in h.walks.iter().enumerate() {
        if !is_c_stretched(g, w, c) {
            return fail(format!("walks[{i}]: not {c}-stretched"));
        }
        if !w.iter().any(|&v| g.has_edge(h.neck, v)) {
            return fail(format!("walks[{i}]: neck has no neighbor"));
        }
        let k = c.min(w.len());
        let ends: Vec<usize> = w[..k].iter().chain(&w[w.len() - k..]).copied().collect();
        if ends.iter().any(|&v| g.has_edge(h.neck, v)) {
            return fail(format!(
                "walks[{i}]: neck adjacent among the first or last {c} vertices"
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Arrays
// ---------------------------------------------------------------------------

pub fn validate_array(
    g: &Graph,
    w: &ArrayWitness,
    n: usize,
) -> std::result::Result<(), WitnessViolation> {
    if w.paths.len() != n {
        return fail(format!("paths: {} found, {n} required", w.paths.len()));
    }
    if w.apexes.len() != n {
        return fail(format!("apexes: {} found, {n} required", w.apexes.len()));
    }
    let mut seen = vec![false; g.vertex_count()];
    for (i, &x) in w.apexes.iter().enumerate() {
        if x >= g.vertex_count() {
            return fail(format!("apexes[{i}]: vertex id out of range"));
        }
        if seen[x] {
            return fail(format!("apexes[{i}]: duplicate apex"));
        }
        seen[x] = true;
    }
    for (i, p) in w.paths.iter().enumerate() {
        for &v in p {
            if v >= g.vertex_count() {
                return fail(format!("paths[{i}]: vertex id out of range"));
            }
            if seen[v] {
                return fail(format!("paths[{i}]: overlaps an apex or another path"));
            }
            seen[v] = true;
        }
        if !g.seq_induces_path(p) {
            return fail(format!("paths[{i}]: does not induce a path in order"));
        }
    }
    if !seen.iter().all(|&b| b) {
        return fail("graph: vertices outside paths and apexes");
    }
    if !g.is_stable_set(&w.apexes) {
        return fail("apexes: not pairwise non-adjacent");
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.are_anticomplete(&w.paths[i], &w.paths[j]).unwrap_or(false) {
                return fail(format!("paths[{i}]/paths[{j}]: not anticomplete"));
            }
        }
    }
    for (i, p) in w.paths.iter().enumerate() {
        let mut prev_max: Option<usize> = None;
        for (j, &x) in w.apexes.iter().enumerate() {
            let positions: Vec<usize> = p
                .iter()
                .enumerate()
                .filter(|(_, &v)| g.has_edge(x, v))
                .map(|(pos, _)| pos)
                .collect();
            if positions.is_empty() {
                return fail(format!("apexes[{j}]: no neighbor in paths[{i}]"));
            }
            if let Some(m) = prev_max {
                if positions.iter().any(|&pos| pos <= m) {
                    return fail(format!(
                        "paths[{i}]: neighbors of apexes[{j}] do not all appear after apexes[{}]",
                        j - 1
                    ));
                }
            }
            prev_max = Some(*positions.iter().max().unwrap());
        }
    }
    Ok(())
}

pub fn is_n_array(g: &Graph, w: &ArrayWitness, n: usize) -> bool {
    validate_array(g, w, n).is_ok()
}

/// The constructive tassel-to-array transformation: `d` disjoint copies of
/// the tassel (`d` = its path count), apex `i` the neck of copy `i`, and for
/// each path index `j` the end `u` of copy `i`'s path joined to the end `v`
/// of copy `i+1`'s (`u` = first stored vertex, `v` = last). The array path
/// `L_j` concatenates the copies' `j`-th paths.
pub fn array_from_tassel(t: &Tassel) -> Result<(Graph, ArrayWitness)> {
    if !is_c_tassel(t, 1) {
        return Err(Error::Invalid(
            "input must satisfy the tassel invariants at c = 1".into(),
        ));
    }
    let d = t.paths.len();
    let step = t.graph.vertex_count();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for copy in 0..d {
        let off = copy * step;
        for (u, v) in t.graph.edges() {
            edges.push((u + off, v + off));
        }
    }
    for copy in 0..d - 1 {
        for path in &t.paths {
            let u = path[0] + copy * step;
            let v = path[path.len() - 1] + (copy + 1) * step;
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(d * step, &edges)?;
    let apexes: Vec<usize> = (0..d).map(|copy| t.neck + copy * step).collect();
    let paths: Vec<Vec<usize>> = (0..d)
        .map(|j| {
            let mut seq = Vec::with_capacity(d * t.paths[j].len());
            for copy in 0..d {
                let off = copy * step;
                seq.extend(t.paths[j].iter().rev().map(|&v| v + off));
            }
            seq
        })
        .collect();
    let witness = ArrayWitness { paths, apexes };
    debug_assert!(is_n_array(&g, &witness, d));
    Ok((g, witness))
}

/// Seeded random n-array: per path, `n` disjoint consecutive intervals
/// chosen left to right become the apexes' neighborhoods. Deterministic
/// under the seed (SplitMix64 throughout).
pub fn random_array(
    n: usize,
    len_range: (usize, usize),
    seed: u64,
) -> Result<(Graph, ArrayWitness)> {
    let (lo, hi) = len_range;
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if lo > hi || lo < n {
        return Err(Error::Invalid(format!(
            "path length range [{lo}, {hi}] cannot hold {n} disjoint intervals"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut interval_sets: Vec<Vec<Vec<usize>>> = Vec::new(); // per path, per apex
    let mut base = 0usize;
    for _ in 0..n {
        let len = rng.next_range(lo as u64, hi as u64) as usize;
        let ids: Vec<usize> = (base..base + len).collect();
        for w in ids.windows(2) {
            edges.push((w[0], w[1]));
        }
        // Interval lengths first, then gaps, both uniform over what remains.
        let mut budget = len - n;
        let mut lens = vec![1usize; n];
        for l in lens.iter_mut() {
            let extra = rng.next_below(budget as u64 + 1) as usize;
            *l += extra;
            budget -= extra;
        }
        let mut gaps = vec![0usize; n + 1];
        for gap in gaps.iter_mut().take(n) {
            let take = rng.next_below(budget as u64 + 1) as usize;
            *gap = take;
            budget -= take;
        }
        gaps[n] = budget;
        let mut cursor = gaps[0];
        let mut intervals = Vec::with_capacity(n);
        for j in 0..n {
            let iv: Vec<usize> = ids[cursor..cursor + lens[j]].to_vec();
            cursor += lens[j] + gaps[j + 1];
            intervals.push(iv);
        }
        interval_sets.push(intervals);
        paths.push(ids);
        base += len;
    }
    let apexes: Vec<usize> = (base..base + n).collect();
    for intervals in &interval_sets {
        for (j, iv) in intervals.iter().enumerate() {
            for &v in iv {
                edges.push((apexes[j], v));
            }
        }
    }
    let g = Graph::from_edges(base + n, &edges)?;
    let witness = ArrayWitness { paths, apexes };
    debug_assert!(is_n_array(&g, &witness, n));
    Ok((g, witness))
}

// ---------------------------------------------------------------------------
// Walk-to-tassel construction
// ---------------------------------------------------------------------------

/// Build the tassel for a walk with the given neck-adjacency bits: `c` fresh
/// disjoint paths, each as long as the walk, with the new neck adjacent to
/// position `j` of every path iff bit `j` is set. The walk is validated
/// against its host graph; the construction itself uses only the bits.
pub fn tassel_from_walk(
    host: &Graph,
    walk: &[usize],
    neck_bits: &BitString,
    c: usize,
) -> Result<Tassel> {
    if walk.len() != neck_bits.len() {
        return Err(Error::WalkBitsMismatch {
            walk: walk.len(),
            bits: neck_bits.len(),
        });
    }
    if walk.is_empty() {
        return Err(Error::ZeroSize);
    }
    for &v in walk {
        host.check_vertex(v)?;
    }
    for pair in walk.windows(2) {
        if pair[0] == pair[1] || !host.has_edge(pair[0], pair[1]) {
            return Err(Error::Invalid(format!(
                "walk positions {} and {} are not adjacent in the host",
                pair[0], pair[1]
            )));
        }
    }
    tassel_from_bits(neck_bits, c)
}

/// The bit-level core of the walk-to-tassel construction.
pub fn tassel_from_bits(neck_bits: &BitString, c: usize) -> Result<Tassel> {
    if c == 0 {
        return Err(Error::ZeroSize);
    }
    if !neck_bits.has_one() {
        return Err(Error::AllZeroPattern);
    }
    if !neck_bits.is_c_padded(c) {
        return Err(Error::PaddingViolation { c });
    }
    let strand = strand_from_pattern(neck_bits)?;
    let t = build_tassel(&strand, c)?;
    debug_assert!(is_c_tassel(&t, c));
    Ok(t)
}

/// Neck-adjacency bits of a vertex over a walk in a host graph.
pub fn walk_neck_bits(host: &Graph, walk: &[usize], neck: usize) -> BitString {
    BitString::new(walk.iter().map(|&v| host.has_edge(neck, v)).collect())
}

// ---------------------------------------------------------------------------
// Cluster-to-hassle extraction
// ---------------------------------------------------------------------------

/// The constructive cluster-to-hassle extraction. Preconditions: `(s, paths)`
/// must be a `d`-meager `(2cd, 2c²d)`-cluster in `g` (checked here via the
/// structure validators; violations name the failed clause). The extraction
/// then cannot fail: per path and end, grow the largest prefix seeing fewer
/// than `cd` apexes, certify it has at least `c` vertices, pick the least
/// apex clear of both ends, and keep the first `c` paths of the most-used
/// apex. The result is the induced subgraph on that apex and those paths.
pub fn hassle_from_cluster(
    g: &Graph,
    s: &[usize],
    paths: &[Vec<usize>],
    c: usize,
    d: usize,
) -> Result<Hassle> {
    if c == 0 || d == 0 {
        return Err(Error::ZeroSize);
    }
    if s.len() != 2 * c * d {
        return Err(Error::Invalid(format!(
            "cluster precondition: |S| = {} but 2cd = {}",
            s.len(),
            2 * c * d
        )));
    }
    if paths.len() != 2 * c * c * d {
        return Err(Error::Invalid(format!(
            "cluster precondition: {} paths but 2c²d = {}",
            paths.len(),
            2 * c * c * d
        )));
    }
    probes::validate_cluster(g, s, paths)
        .map_err(|v| Error::Invalid(format!("cluster precondition: {v}")))?;
    if let Some(offender) = probes::meagerness_offender(g, s, paths, d) {
        return Err(Error::Invalid(format!(
            "cluster precondition: path vertex {offender} has at least {d} neighbors in S"
        )));
    }

    let cd = c * d;
    // Largest prefix from an end seeing fewer than cd apexes.
    let prefix_guard = |seq: &[usize]| -> usize {
        let mut hit = vec![false; s.len()];
        let mut count = 0usize;
        let mut best = 0usize;
        for (k, &v) in seq.iter().enumerate() {
            for (si, &x) in s.iter().enumerate() {
                if !hit[si] && g.has_edge(x, v) {
                    hit[si] = true;
                    count += 1;
                }
            }
            if count < cd {
                best = k + 1;
            } else {
                break;
            }
        }
        best
    };

    let mut chosen: Vec<usize> = Vec::with_capacity(paths.len()); // apex index per path
    for (pi, p) in paths.iter().enumerate() {
        let front = prefix_guard(p);
        let rev: Vec<usize> = p.iter().rev().copied().collect();
        let back = prefix_guard(&rev);
        assert!(
            front >= c && back >= c,
            "extraction defect: guarded prefix of path {pi} shorter than c"
        );
        let k = c.min(p.len());
        let ends: Vec<usize> = p[..k].iter().chain(&p[p.len() - k..]).copied().collect();
        let x = s
            .iter()
            .enumerate()
            .find(|(_, &x)| ends.iter().all(|&v| !g.has_edge(x, v)))
            .map(|(si, _)| si);
        let Some(si) = x else {
            panic!("extraction defect: every apex touches an end of path {pi}");
        };
        chosen.push(si);
    }
    // Pigeonhole: some apex serves at least c paths; least id wins.
    let mut counts = vec![0usize; s.len()];
    for &si in &chosen {
        counts[si] += 1;
    }
    let (best_si, _) = counts
        .iter()
        .enumerate()
        .find(|(_, &cnt)| cnt >= c)
        .expect("extraction defect: pigeonhole failed");
    let picked: Vec<usize> = chosen
        .iter()
        .enumerate()
        .filter(|(_, &si)| si == best_si)
        .map(|(pi, _)| pi)
        .take(c)
        .collect();

    let x = s[best_si];
    let mut keep: Vec<usize> = vec![x];
    for &pi in &picked {
        keep.extend(paths[pi].iter().copied());
    }
    // The output never leaves {x} ∪ V(selected paths).
    let (sub, old_ids) = g.induced_subgraph(&keep)?;
    let new_id = |v: usize| old_ids.binary_search(&v).expect("kept vertex");
    let hassle = Hassle {
        graph: sub,
        neck: new_id(x),
        walks: picked
            .iter()
            .map(|&pi| paths[pi].iter().map(|&v| new_id(v)).collect())
            .collect(),
    };
    assert!(
        is_c_hassle(&hassle, c),
        "extraction defect: output fails the hassle invariants"
    );
    Ok(hassle)
}
