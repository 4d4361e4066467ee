//! The acceptance battery: one function per criterion, runnable from the
//! test suite and from the CLI. Every threshold, seed and tolerance is
//! pinned here; a criterion either passes or reports what failed.

use crate::embed::contains_induced;
use crate::flow::{disjoint_paths_brute, disjoint_paths_count};
use crate::graph::Graph;
use crate::io;
use crate::lang::{
    brute_force_unavoidable, h_ab_family, preprocess_family, tassel_oracle, tasselled_search,
    unavoidable, AvoidVerdict, BitString, OracleOutcome, PatternSet, TasselledSearch,
};
use crate::obstructions::{
    complete, complete_bipartite, t_clean_check, wall, CleanVerdict, ObstructionKind,
};
use crate::probes;
use crate::rng::SplitMix64;
use crate::tassels::{
    array_from_tassel, build_tassel, hassle_from_cluster, is_c_hassle, is_c_tassel, is_n_array,
    random_array, strand_from_pattern, tassel_from_walk, walk_neck_bits, ArrayWitness,
};
use crate::treewidth::{treewidth_exact, treewidth_lowerbound, verify_decomposition};
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {:2} {} ({} ms): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.millis,
            self.detail
        )
    }
}

pub const CRITERION_COUNT: usize = 13;

pub fn run_criterion(id: usize) -> CriterionReport {
    let (name, f): (&'static str, fn() -> (bool, String)) = match id {
        1 => ("treewidth pins", c01_treewidth_pins),
        2 => ("wall pins", c02_wall_pins),
        3 => ("arrays: treewidth and freeness", c03_array_properties),
        4 => ("full 3-clean verdicts", c04_clean_verdicts),
        5 => ("tassel-to-array construction", c05_array_construction),
        6 => ("nine-string set 3-unavoidable", c06_nine_strings),
        7 => ("padded strand families tasselled", c07_h_ab),
        8 => ("avoidance oracle equivalence", c08_oracle_equivalence),
        9 => ("spike-run family", c09_spike_family),
        10 => ("Menger consistency", c10_menger),
        11 => ("cluster-to-hassle extraction", c11_cluster_extraction),
        12 => ("walk-to-tassel construction", c12_walk_tassel),
        13 => ("decomposition verifier independence", c13_td_verifier),
        _ => panic!("criterion ids are 1..=13"),
    };
    let t0 = Instant::now();
    let (pass, detail) = f();
    CriterionReport {
        id,
        name,
        pass,
        detail,
        millis: t0.elapsed().as_millis(),
    }
}

pub fn run_all() -> Vec<CriterionReport> {
    (1..=CRITERION_COUNT).map(run_criterion).collect()
}

// --- criterion 1 ----------------------------------------------------------

fn c01_treewidth_pins() -> (bool, String) {
    let mut worst_ms = 0u128;
    for t in 1..=5 {
        let g = complete(t + 1).unwrap();
        let t0 = Instant::now();
        let (w, td) = treewidth_exact(&g, None).unwrap();
        worst_ms = worst_ms.max(t0.elapsed().as_millis());
        if w != t || verify_decomposition(&g, &td) != Ok(w) {
            return (false, format!("complete({}) solved to width {w}", t + 1));
        }
        if t0.elapsed().as_secs() >= 1 {
            return (false, format!("complete({}) exceeded 1 s", t + 1));
        }
    }
    for t in 1..=4 {
        let g = complete_bipartite(t, t).unwrap();
        let t0 = Instant::now();
        let (w, td) = treewidth_exact(&g, None).unwrap();
        worst_ms = worst_ms.max(t0.elapsed().as_millis());
        if w != t || verify_decomposition(&g, &td) != Ok(w) {
            return (false, format!("biclique {t},{t} solved to width {w}"));
        }
        if t0.elapsed().as_secs() >= 1 {
            return (false, format!("biclique {t},{t} exceeded 1 s"));
        }
    }
    (true, format!("9 pins exact; worst solve {worst_ms} ms"))
}

// --- criterion 2 ----------------------------------------------------------

fn c02_wall_pins() -> (bool, String) {
    for t in [2usize, 3] {
        let g = wall(t);
        let t0 = Instant::now();
        let (w, td) = treewidth_exact(&g, None).unwrap();
        if w != t {
            return (
                false,
                format!("wall({t}) has treewidth {w}; the wall convention is invalid"),
            );
        }
        if verify_decomposition(&g, &td) != Ok(w) {
            return (false, format!("wall({t}) decomposition failed verification"));
        }
        if t == 3 && t0.elapsed().as_secs() > 60 {
            return (false, "wall(3) exceeded 60 s".into());
        }
    }
    (true, "treewidth(wall(t)) = t for t in {2, 3}".into())
}

// --- criterion 3 ----------------------------------------------------------

/// Seeds and path-length ranges for the array corpus; shared with
/// criterion 4 so "the arrays above" are literally the same instances.
pub fn array_corpus(n: usize) -> Vec<(Graph, ArrayWitness)> {
    let (lens, base_seed) = match n {
        1 => ((1usize, 8usize), 100u64),
        2 => ((6, 9), 200),
        3 => ((5, 6), 300),
        4 => ((4, 6), 400),
        _ => panic!("corpus defined for n in 1..=4"),
    };
    (0..20)
        .map(|i| random_array(n, lens, base_seed + i).unwrap())
        .collect()
}

fn c03_array_properties() -> (bool, String) {
    let k4 = complete(4).unwrap();
    let k33 = complete_bipartite(3, 3).unwrap();
    for n in 1..=3usize {
        for (g, w) in array_corpus(n) {
            if !is_n_array(&g, &w, n) {
                return (false, format!("corpus {n}-array fails its own witness"));
            }
            if g.vertex_count() > 22 {
                return (false, format!("{n}-array exceeds the solver limit"));
            }
            let (tw, td) = treewidth_exact(&g, None).unwrap();
            if tw < n || verify_decomposition(&g, &td) != Ok(tw) {
                return (
                    false,
                    format!("{n}-array on {} vertices has treewidth {tw}", g.vertex_count()),
                );
            }
            if contains_induced(&k4, &g) || contains_induced(&k33, &g) {
                return (false, format!("{n}-array contains a forbidden clique/biclique"));
            }
        }
    }
    let mut lb_min = usize::MAX;
    for (g, w) in array_corpus(4) {
        if !is_n_array(&g, &w, 4) {
            return (false, "corpus 4-array fails its own witness".into());
        }
        let lb = treewidth_lowerbound(&g);
        lb_min = lb_min.min(lb);
        if lb < 2 {
            return (false, format!("4-array lower bound {lb} < 2"));
        }
        if contains_induced(&k4, &g) || contains_induced(&k33, &g) {
            return (false, "4-array contains a forbidden clique/biclique".into());
        }
    }
    (
        true,
        format!("60 exact arrays (tw >= n) + 20 bounded (min lb {lb_min}); all K4/K33-free"),
    )
}

// --- criterion 4 ----------------------------------------------------------

fn c04_clean_verdicts() -> (bool, String) {
    let budget = 500_000_000u64;
    let wall3 = wall(3);
    let wall_min = wall3.vertex_count();
    let line_min = wall3.edge_count();
    let mut wall_active = 0usize;
    let mut line_active = 0usize;
    for n in 1..=2usize {
        for (g, _) in array_corpus(n) {
            match t_clean_check(&g, 3, budget) {
                CleanVerdict::Clean => {}
                CleanVerdict::Obstruction { kind, .. } => {
                    return (false, format!("{n}-array misjudged: found {kind}"));
                }
                CleanVerdict::Inconclusive { spent } => {
                    return (false, format!("{n}-array inconclusive after {spent} expansions"));
                }
            }
            if g.vertex_count() >= wall_min {
                wall_active += 1;
            }
            if g.vertex_count() >= line_min {
                line_active += 1;
            }
        }
    }
    if wall_active == 0 || line_active == 0 {
        return (
            false,
            format!(
                "catalog checks never applied non-vacuously (wall {wall_active}, line {line_active})"
            ),
        );
    }

    let planted: Vec<(Graph, ObstructionKind, &str)> = vec![
        (complete(5).unwrap(), ObstructionKind::Complete, "K5"),
        (
            {
                let k33 = complete_bipartite(3, 3).unwrap();
                let mut edges = k33.edges();
                edges.push((5, 6));
                Graph::from_edges(7, &edges).unwrap()
            },
            ObstructionKind::CompleteBipartite,
            "K33+pendant",
        ),
        (
            wall3.disjoint_union(&Graph::empty(1)),
            ObstructionKind::WallSubdivision,
            "wall3+K1",
        ),
        (
            wall3
                .subdivide_uniform(1)
                .line_graph()
                .0
                .disjoint_union(&Graph::empty(1)),
            ObstructionKind::LineOfWallSubdivision,
            "L(subdiv wall3)+K1",
        ),
    ];
    for (g, want, label) in &planted {
        match t_clean_check(g, 3, budget) {
            CleanVerdict::Obstruction {
                kind,
                pattern,
                embedding,
            } => {
                if kind != *want {
                    return (false, format!("{label}: got {kind}, wanted {want}"));
                }
                if !embedding.verify(&pattern, g) {
                    return (false, format!("{label}: embedding failed revalidation"));
                }
            }
            CleanVerdict::Clean => {
                return (false, format!("{label}: expected {want}, judged clean"));
            }
            CleanVerdict::Inconclusive { spent } => {
                return (false, format!("{label}: inconclusive after {spent} expansions"));
            }
        }
    }
    (
        true,
        format!(
            "40 clean arrays (wall search live on {wall_active}, line on {line_active}); \
             4 planted kinds correct"
        ),
    )
}

// --- criterion 5 ----------------------------------------------------------

fn c05_array_construction() -> (bool, String) {
    let mut rng = SplitMix64::new(500);
    let mut solver_checked = 0usize;
    for i in 0..10usize {
        let d = 3 + i % 3;
        // Random 3-padded strand pattern of length 7..=10.
        let len = 7 + rng.next_below(4) as usize;
        let mut bits = vec![false; len];
        for b in bits.iter_mut().take(len - 3).skip(3) {
            *b = rng.next_bool(1, 2);
        }
        bits[len / 2] = true;
        let pattern = BitString::new(bits);
        let strand = strand_from_pattern(&pattern).unwrap();
        let t = build_tassel(&strand, d).unwrap();
        if !is_c_tassel(&t, 3) {
            return (false, format!("instance {i}: generator broke the 3-tassel shape"));
        }
        let (g, w) = match array_from_tassel(&t) {
            Ok(out) => out,
            Err(e) => return (false, format!("instance {i}: construction failed: {e}")),
        };
        if !is_n_array(&g, &w, d) {
            return (false, format!("instance {i}: output fails is_n_array({d})"));
        }
        // The smallest d = 3 array here has 3(3*7 + 1) = 66 vertices, far
        // beyond the 22-vertex exact-solver limit, so the solver subclause
        // is vacuous; the sound lower bound is exercised instead.
        if d == 3 && g.vertex_count() <= 22 {
            let (tw, _) = treewidth_exact(&g, None).unwrap();
            if tw < 3 {
                return (false, format!("instance {i}: treewidth {tw} < 3"));
            }
            solver_checked += 1;
        }
        if treewidth_lowerbound(&g) < 2 {
            return (false, format!("instance {i}: implausibly low bound"));
        }
    }
    (
        true,
        format!(
            "10 constructions pass is_n_array; exact-solver subclause vacuous \
             (smallest d=3 array has 66 > 22 vertices; {solver_checked} solved)"
        ),
    )
}

// --- criterion 6 ----------------------------------------------------------

pub const NINE_STRINGS: [&str; 9] = [
    "00011", "0001000", "1010", "010010", "111", "110011", "11011", "110010011",
    "00010011001000",
];

fn c06_nine_strings() -> (bool, String) {
    let t0 = Instant::now();
    let p = PatternSet::parse(&NINE_STRINGS).unwrap();
    let v = unavoidable(&p, 3);
    if !v.is_unavoidable() {
        return (false, format!("automaton found a witness: {v:?}"));
    }
    let brute = match brute_force_unavoidable(&p, 3, Some(14), 200_000_000) {
        Ok(b) => b,
        Err(e) => return (false, format!("oracle budget did not admit: {e}")),
    };
    if !brute.is_unavoidable() {
        return (false, format!("oracle disagrees: {brute:?}"));
    }
    if t0.elapsed().as_secs() > 60 {
        return (false, "exceeded 60 s".into());
    }
    (true, "3-unavoidable by automaton, confirmed by the bounded oracle".into())
}

// --- criterion 7 ----------------------------------------------------------

fn c07_h_ab() -> (bool, String) {
    let mut details = Vec::new();
    for (a, b) in [(1usize, 1usize), (2, 2)] {
        let fam = h_ab_family(a, b);
        let fp = match preprocess_family(&fam) {
            Ok(fp) => fp,
            Err(e) => return (false, format!("H_{a},{b}: {e}")),
        };
        let TasselledSearch::Tasselled { c_min } = tasselled_search(&fp) else {
            return (false, format!("H_{a},{b} not recognized as tasselled"));
        };
        if c_min > a.max(b) {
            return (false, format!("H_{a},{b}: c_min {c_min} exceeds max(a, b)"));
        }
        match tassel_oracle(&fam, c_min, 8) {
            Ok(OracleOutcome::AllCovered) => {}
            Ok(OracleOutcome::Counterexample { pattern, .. }) => {
                return (false, format!("H_{a},{b}: oracle counterexample {pattern}"));
            }
            Err(e) => return (false, format!("H_{a},{b}: oracle error {e}")),
        }
        details.push(format!("H_{a},{b} tasselled at c = {c_min}"));
    }
    (
        true,
        format!("{}; oracle all-covered to strand length 8", details.join("; ")),
    )
}

// --- criterion 8 ----------------------------------------------------------

fn c08_oracle_equivalence() -> (bool, String) {
    let mut rng = SplitMix64::new(0x0800);
    let mut witnesses = 0usize;
    for i in 0..300usize {
        let count = 1 + rng.next_below(3) as usize;
        let mut pats = Vec::new();
        for _ in 0..count {
            let len = 1 + rng.next_below(4) as usize;
            let bits: Vec<bool> = (0..len).map(|_| rng.next_bool(1, 2)).collect();
            pats.push(BitString::new(bits));
        }
        let p = PatternSet::new(pats).unwrap();
        let c = 1 + rng.next_below(3) as usize;
        let fast = unavoidable(&p, c);
        let slow = match brute_force_unavoidable(&p, c, None, 50_000_000) {
            Ok(v) => v,
            Err(e) => return (false, format!("set {i}: oracle error {e}")),
        };
        if fast.is_unavoidable() != slow.is_unavoidable() {
            return (false, format!("set {i} disagrees: {fast:?} vs {slow:?}"));
        }
        for v in [&fast, &slow] {
            if let AvoidVerdict::Witness(w) = v {
                witnesses += 1;
                let sound =
                    w.is_c_padded(c) && p.patterns().iter().all(|q| !w.contains_up_to_reversal(q));
                if !sound {
                    return (false, format!("set {i}: unsound witness {w}"));
                }
            }
        }
    }
    (
        true,
        format!("300 sets agree; {witnesses} witnesses verified by naive scan"),
    )
}

// --- criterion 9 ----------------------------------------------------------

fn c09_spike_family() -> (bool, String) {
    // 01^k0 for k = 1..=4.
    let pats: Vec<BitString> = (1..=4)
        .map(|k| {
            let mut bits = vec![false];
            bits.extend(vec![true; k]);
            bits.push(false);
            BitString::new(bits)
        })
        .collect();
    let p = PatternSet::new(pats).unwrap();
    let run5 = BitString::parse("11111").unwrap();
    for c in 1..=5usize {
        match unavoidable(&p, c) {
            AvoidVerdict::Witness(w) => {
                if !w.contains_substring(&run5) {
                    return (false, format!("c = {c}: witness {w} lacks the run 11111"));
                }
            }
            AvoidVerdict::Unavoidable => {
                return (false, format!("c = {c}: family misjudged unavoidable"));
            }
        }
    }
    // Exhaustive bounded check: every 1-padded string of length <= 14
    // contains 01^k0 for some k <= 12.
    for len in 3..=14usize {
        for combo in 0u64..(1 << (len - 2)) {
            let mut bits = vec![false; len];
            for i in 0..len - 2 {
                bits[1 + i] = combo >> i & 1 == 1;
            }
            let s = BitString::new(bits);
            if !s.is_c_padded(1) {
                continue;
            }
            let hit = (1..=12usize).any(|k| {
                let mut pat = vec![false];
                pat.extend(vec![true; k]);
                pat.push(false);
                s.contains_substring(&BitString::new(pat))
            });
            if !hit {
                return (false, format!("string {s} avoids every spike"));
            }
        }
    }
    (
        true,
        "witnesses carry the 1^5 run for c <= 5; all 1-padded strings to length 14 hit a spike"
            .into(),
    )
}

// --- criterion 10 ---------------------------------------------------------

fn c10_menger() -> (bool, String) {
    let mut rng = SplitMix64::new(0x1000);
    let mut pairs = 0usize;
    for i in 0..100usize {
        let n = 4 + rng.next_below(6) as usize; // 4..=9
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_bool(2, 5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        for x in 0..n {
            for y in x + 1..n {
                let flow = disjoint_paths_count(&g, x, y).unwrap();
                let brute = disjoint_paths_brute(&g, x, y).unwrap();
                if flow != brute {
                    return (false, format!("graph {i} pair ({x}, {y}): {flow} vs {brute}"));
                }
                pairs += 1;
            }
        }
    }
    let k4 = complete(4).unwrap();
    let c5 = crate::graph::cycle(5);
    let block_ok = probes::is_k_block(&k4, &[0, 1, 2, 3], 3).unwrap()
        && probes::is_k_block(&c5, &[0, 1, 2, 3, 4], 2).unwrap()
        && !probes::is_k_block(&c5, &[0, 1, 2, 3, 4], 3).unwrap();
    if !block_ok {
        return (false, "block verdicts on K4/C5 inconsistent".into());
    }
    (
        true,
        format!("{pairs} pairs agree across 100 graphs; K4/C5 block verdicts consistent"),
    )
}

// --- criterion 11 ---------------------------------------------------------

/// Synthetic d-meager (2cd, 2c²d)-cluster: disjoint anticomplete paths with
/// one apex neighbor per path in a seeded position shuffle, so every path
/// vertex meets at most one apex. Note d = 1 admits no valid instance at
/// all: strictly fewer than one neighbor in S contradicts the cluster's
/// neighbor requirement, so the battery drives d = 2 with c in {1, 2}.
pub fn synthetic_cluster(c: usize, d: usize, seed: u64) -> (Graph, Vec<usize>, Vec<Vec<usize>>) {
    let apex_count = 2 * c * d;
    let path_count = 2 * c * c * d;
    let len = apex_count + 2 * c + 2;
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for p in 0..path_count {
        let off = p * len;
        for i in 1..len {
            edges.push((off + i - 1, off + i));
        }
        paths.push((off..off + len).collect::<Vec<_>>());
    }
    let base = path_count * len;
    let apexes: Vec<usize> = (base..base + apex_count).collect();
    for p in 0..path_count {
        // A seeded shuffle of distinct positions, one per apex.
        let mut slots: Vec<usize> = (0..len).collect();
        for i in (1..slots.len()).rev() {
            let j = rng.next_below(i as u64 + 1) as usize;
            slots.swap(i, j);
        }
        for (ai, &apex) in apexes.iter().enumerate() {
            edges.push((apex, p * len + slots[ai]));
        }
    }
    let g = Graph::from_edges(base + apex_count, &edges).unwrap();
    (g, apexes, paths)
}

fn c11_cluster_extraction() -> (bool, String) {
    let mut done = 0usize;
    for (c, d, seeds) in [(1usize, 2usize, 1100u64), (2, 2, 1200)] {
        for i in 0..10u64 {
            let (g, s, paths) = synthetic_cluster(c, d, seeds + i);
            if !probes::is_d_meager(&g, &s, &paths, d) {
                return (false, format!("c={c} d={d} seed {i}: generator broke meagerness"));
            }
            let h = match hassle_from_cluster(&g, &s, &paths, c, d) {
                Ok(h) => h,
                Err(e) => return (false, format!("c={c} d={d} seed {i}: {e}")),
            };
            if !is_c_hassle(&h, c) {
                return (false, format!("c={c} d={d} seed {i}: output not a {c}-hassle"));
            }
            done += 1;
        }
    }
    // The error path names the failed clause.
    let (g, s, paths) = synthetic_cluster(1, 2, 1300);
    let err = hassle_from_cluster(&g, &s, &paths, 1, 1).unwrap_err();
    if !err.to_string().contains("precondition") {
        return (false, format!("precondition failure badly reported: {err}"));
    }
    (true, format!("{done} extractions valid; zero internal failures; violations named"))
}

// --- criterion 12 ---------------------------------------------------------

fn c12_walk_tassel() -> (bool, String) {
    let mut rng = SplitMix64::new(0x1200);
    for i in 0..50usize {
        let c = 1 + rng.next_below(3) as usize;
        let len = 2 * c + 1 + rng.next_below(6) as usize;
        let mut bits = vec![false; len];
        for b in bits.iter_mut().take(len - c).skip(c) {
            *b = rng.next_bool(1, 2);
        }
        bits[len / 2] = true;
        let pattern = BitString::new(bits);
        let host = crate::graph::path(len);
        let walk: Vec<usize> = (0..len).collect();
        let t = match tassel_from_walk(&host, &walk, &pattern, c) {
            Ok(t) => t,
            Err(e) => return (false, format!("instance {i}: {e}")),
        };
        if !is_c_tassel(&t, c) {
            return (false, format!("instance {i}: output fails is_c_tassel({c})"));
        }
        if t.paths.len() != c {
            return (false, format!("instance {i}: {} paths, wanted {c}", t.paths.len()));
        }
        for p in &t.paths {
            if walk_neck_bits(&t.graph, p, t.neck) != pattern {
                return (false, format!("instance {i}: neck bits diverge from the input"));
            }
        }
    }
    (true, "50 seeded constructions valid with exact neck bits".into())
}

// --- criterion 13 ---------------------------------------------------------

fn c13_td_verifier() -> (bool, String) {
    let mut rng = SplitMix64::new(0x1300);
    let mut mutations = 0usize;
    for i in 0..20usize {
        let n = 4 + rng.next_below(7) as usize; // 4..=10
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_bool(1, 2) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let (w, td) = treewidth_exact(&g, None).unwrap();
        // Emit through the file format and verify the parse.
        let text = io::write_td(&td, n);
        let (parsed, pn) = io::parse_td(&text).unwrap();
        if pn != n || verify_decomposition(&g, &parsed) != Ok(w) {
            return (false, format!("instance {i}: emitted decomposition failed"));
        }
        for bi in 0..td.bags.len() {
            let broke = td.bags[bi].iter().any(|&drop| {
                let mut mutated = td.clone();
                mutated.bags[bi].retain(|&v| v != drop);
                verify_decomposition(&g, &mutated).is_err()
            });
            if !broke {
                return (
                    false,
                    format!("instance {i}: bag {bi} survives every single-vertex removal"),
                );
            }
            mutations += 1;
        }
    }
    (
        true,
        format!("20 emitted decompositions verified; {mutations} bags each break under mutation"),
    )
}
