//! The tasselled decision for finite graph families, in its string form:
//! a family is tasselled at padding `c` when every c-padded string S admits
//! some member graph all of whose components have a neck whose strings (up
//! to reversal) all occur in S. Decided by emptiness of the pattern-matcher
//! product extended with a monotone seen-pattern mask; cross-validated on
//! bounded instances by a graph-level tassel oracle built on the induced
//! subgraph search.

use super::bitstring::BitString;
use super::matcher::PatternMatcher;
use super::necks::{necks_of, strings_of_neck};
use crate::embed::{contains_induced, Budget, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tassels::{build_tassel, strand_from_pattern, Tassel};
use std::collections::HashMap;

/// Seen-mask width cap; beyond this the decision is unsupported rather than
/// approximated.
pub const MASK_WIDTH_CAP: usize = 12;

/// A family compiled to pattern requirements: for each graph, for each
/// component, the neck alternatives as masks over the pattern universe.
/// A component with no neck makes its graph permanently unsatisfiable.
#[derive(Clone, Debug)]
pub struct FamilyPatterns {
    pub universe: Vec<BitString>,
    /// graphs[h][k] = masks of required patterns, one per neck of component
    /// k; empty when the component has no neck.
    pub graphs: Vec<Vec<Vec<u32>>>,
}

impl FamilyPatterns {
    pub fn max_pattern_len(&self) -> usize {
        self.universe.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Is some member graph fully satisfied by the matched-pattern mask?
    fn satisfied(&self, mask: u32) -> bool {
        self.graphs.iter().any(|comps| {
            comps.iter().all(|necks| {
                necks.iter().any(|&needed| needed & !mask == 0)
            }) && comps.iter().all(|necks| !necks.is_empty())
        })
    }

    /// Per-graph explanation of why the mask fails it.
    fn explain(&self, mask: u32) -> Vec<String> {
        let mut out = Vec::new();
        for (h, comps) in self.graphs.iter().enumerate() {
            if let Some(k) = comps.iter().position(|necks| necks.is_empty()) {
                out.push(format!(
                    "graph {h}: component {k} has no neck, so it embeds in no tassel"
                ));
                continue;
            }
            let k = comps
                .iter()
                .position(|necks| necks.iter().all(|&needed| needed & !mask != 0));
            if let Some(k) = k {
                let missing: Vec<String> = comps[k]
                    .iter()
                    .map(|&needed| {
                        let misses: Vec<String> = (0..self.universe.len())
                            .filter(|&i| needed >> i & 1 == 1 && mask >> i & 1 == 0)
                            .map(|i| self.universe[i].to_string())
                            .collect();
                        misses.join(",")
                    })
                    .collect();
                out.push(format!(
                    "graph {h}: component {k} unsatisfied; per neck missing [{}]",
                    missing.join(" | ")
                ));
            }
        }
        out
    }
}

/// Compile a family of nonempty graphs into pattern requirements.
pub fn preprocess_family(family: &[Graph]) -> Result<FamilyPatterns> {
    let mut universe: Vec<BitString> = Vec::new();
    let mut graphs = Vec::with_capacity(family.len());
    for h in family {
        if h.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut comps = Vec::new();
        for comp in h.components() {
            let (k, _) = h.induced_subgraph(&comp).expect("component");
            let mut neck_masks = Vec::new();
            for v in necks_of(&k) {
                let mut mask = 0u32;
                for s in strings_of_neck(&k, v).expect("neck") {
                    let idx = match universe.iter().position(|u| *u == s) {
                        Some(i) => i,
                        None => {
                            universe.push(s);
                            universe.len() - 1
                        }
                    };
                    mask |= 1 << idx;
                }
                neck_masks.push(mask);
            }
            comps.push(neck_masks);
        }
        graphs.push(comps);
    }
    if universe.len() > MASK_WIDTH_CAP {
        return Err(Error::Invalid(format!(
            "unsupported: {} distinct neck strings exceed the mask width {MASK_WIDTH_CAP}",
            universe.len()
        )));
    }
    Ok(FamilyPatterns { universe, graphs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TasselledVerdict {
    TasselledAt,
    Witness {
        string: BitString,
        explanation: Vec<String>,
    },
}

impl TasselledVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TasselledVerdict::TasselledAt)
    }
}

/// Independent restatement of the bad-string predicate by naive scanning:
/// c-padded and satisfying no member graph.
pub fn is_bad_string(fp: &FamilyPatterns, s: &BitString, c: usize) -> bool {
    if !s.is_c_padded(c) {
        return false;
    }
    let mut mask = 0u32;
    for (i, p) in fp.universe.iter().enumerate() {
        if s.contains_up_to_reversal(p) {
            mask |= 1 << i;
        }
    }
    !fp.satisfied(mask)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Phase {
    Lead(usize),
    Trail(usize),
}

/// Decide the string condition at padding `c`: breadth-first emptiness over
/// (matcher state, seen mask, padding phase), 0 expanded before 1, so a
/// returned witness is shortest and lexicographically least.
pub fn tasselled_decide(fp: &FamilyPatterns, c: usize) -> TasselledVerdict {
    assert!(c >= 1);
    let entries: Vec<(BitString, usize)> = fp
        .universe
        .iter()
        .enumerate()
        .flat_map(|(i, p)| [(p.clone(), i), (p.reversed(), i)])
        .collect();
    let m = PatternMatcher::build(&entries);
    let start = (0usize, 0u32, Phase::Lead(0));
    let mut seen: HashMap<(usize, u32, Phase), ()> = HashMap::new();
    seen.insert(start, ());
    let mut states = vec![start];
    let mut parents: Vec<(usize, bool)> = vec![(usize::MAX, false)];
    let mut head = 0;
    while head < states.len() {
        let (ac, mask, phase) = states[head];
        for bit in [false, true] {
            let nac = m.step(ac, bit);
            let nmask = mask | m.match_mask(nac);
            let nphase = match (phase, bit) {
                (Phase::Lead(k), false) => Phase::Lead((k + 1).min(c)),
                (Phase::Lead(k), true) => {
                    if k < c {
                        continue;
                    }
                    Phase::Trail(0)
                }
                (Phase::Trail(_), true) => Phase::Trail(0),
                (Phase::Trail(r), false) => Phase::Trail((r + 1).min(c)),
            };
            let key = (nac, nmask, nphase);
            if seen.insert(key, ()).is_some() {
                continue;
            }
            states.push(key);
            parents.push((head, bit));
            if nphase == Phase::Trail(c) && !fp.satisfied(nmask) {
                let mut bits = Vec::new();
                let mut at = states.len() - 1;
                while at != 0 {
                    let (prev, b) = parents[at];
                    bits.push(b);
                    at = prev;
                }
                bits.reverse();
                let w = BitString::new(bits);
                debug_assert!(is_bad_string(fp, &w, c));
                let explanation = fp.explain(nmask);
                return TasselledVerdict::Witness {
                    string: w,
                    explanation,
                };
            }
        }
        head += 1;
    }
    TasselledVerdict::TasselledAt
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TasselledSearch {
    Tasselled { c_min: usize },
    /// Exact: the reduction argument makes failure at the bound final, not
    /// a timeout.
    NotTasselled { bound: usize },
}

/// Search for the least working padding. Every neck string contains a 1
/// (necks are adjacent to every component of their remainder), so appending
/// zeroes to an s-padded bad string keeps it bad: failure at s = the longest
/// string length settles every larger padding, and smaller paddings only
/// admit more strings.
pub fn tasselled_search(fp: &FamilyPatterns) -> TasselledSearch {
    let s = fp.max_pattern_len().max(1);
    if !tasselled_decide(fp, s).holds() {
        return TasselledSearch::NotTasselled { bound: s };
    }
    let mut c = 1;
    while !tasselled_decide(fp, c).holds() {
        c += 1;
    }
    TasselledSearch::Tasselled { c_min: c }
}

// ---------------------------------------------------------------------------
// Graph-level oracle
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum OracleOutcome {
    AllCovered,
    Counterexample { pattern: BitString, tassel: Tassel },
}

pub const ORACLE_LEN_CAP: usize = 12;

/// Enumerate the c-tassels up to a strand length (one per canonical
/// c-padded pattern) and test, by honest induced-subgraph search, whether
/// some family member has every component contained. The tassels carry
/// `max(c, max |V(H)|)` paths: component containment never needs more paths
/// than the component count, which that bound dominates, so adding paths
/// beyond it cannot change any verdict.
pub fn tassel_oracle(
    family: &[Graph],
    c: usize,
    strand_len_max: usize,
) -> Result<OracleOutcome> {
    assert!(c >= 1);
    if strand_len_max > ORACLE_LEN_CAP {
        return Err(Error::Invalid(format!(
            "strand length {strand_len_max} exceeds the oracle cap {ORACLE_LEN_CAP}"
        )));
    }
    let path_count = family
        .iter()
        .map(|h| h.vertex_count())
        .max()
        .unwrap_or(1)
        .max(c);
    let components: Vec<Vec<Graph>> = family
        .iter()
        .map(|h| {
            h.components()
                .into_iter()
                .map(|comp| h.induced_subgraph(&comp).expect("component").0)
                .collect()
        })
        .collect();
    for pattern in padded_patterns(c, strand_len_max) {
        let tassel = build_tassel(&strand_from_pattern(&pattern)?, path_count)?;
        let covered = components.iter().any(|comps| {
            comps
                .iter()
                .all(|k| contains_induced(k, &tassel.graph))
        });
        if !covered {
            return Ok(OracleOutcome::Counterexample { pattern, tassel });
        }
    }
    Ok(OracleOutcome::AllCovered)
}

/// Whether a single pattern's tassel (with the oracle's path count) covers
/// the family; exposed for the graph/string bridge checks.
pub fn tassel_covered(family: &[Graph], pattern: &BitString, c: usize) -> Result<bool> {
    let path_count = family
        .iter()
        .map(|h| h.vertex_count())
        .max()
        .unwrap_or(1)
        .max(c);
    let tassel = build_tassel(&strand_from_pattern(pattern)?, path_count)?;
    Ok(family.iter().any(|h| {
        h.components().into_iter().all(|comp| {
            let (k, _) = h.induced_subgraph(&comp).expect("component");
            matches!(
                crate::embed::find_induced(&k, &tassel.graph, &mut Budget::unlimited()),
                SearchOutcome::Found(_)
            )
        })
    }))
}

/// All canonical c-padded patterns of length at most `len_max`, ordered by
/// length then interior bits.
pub fn padded_patterns(c: usize, len_max: usize) -> Vec<BitString> {
    let mut out = Vec::new();
    if len_max < 2 * c + 1 {
        return out;
    }
    for len in (2 * c + 1)..=len_max {
        let interior = len - 2 * c;
        for combo in 1u64..(1 << interior) {
            let mut bits = vec![false; len];
            for i in 0..interior {
                bits[c + i] = combo >> i & 1 == 1;
            }
            let b = BitString::new(bits);
            if b.reversed().to_string() < b.to_string() {
                continue;
            }
            out.push(b);
        }
    }
    out
}

/// The family of strands whose path reads `0^a 1 β` over all suffixes β of
/// length b (the neck adjacent to position a+1, free beyond).
pub fn h_ab_family(a: usize, b: usize) -> Vec<Graph> {
    assert!(a >= 1);
    let mut out = Vec::new();
    for combo in 0u64..(1 << b) {
        let mut bits = vec![false; a + b + 1];
        bits[a] = true;
        for i in 0..b {
            bits[a + 1 + i] = combo >> i & 1 == 1;
        }
        let strand = strand_from_pattern(&BitString::new(bits)).expect("has a one");
        out.push(strand.graph);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        BitString::parse(s).unwrap()
    }

    fn strand_graph(pat: &str) -> Graph {
        strand_from_pattern(&bs(pat)).unwrap().graph
    }

    #[test]
    fn h11_is_tasselled_at_one() {
        let fam = h_ab_family(1, 1);
        assert_eq!(fam.len(), 2);
        let fp = preprocess_family(&fam).unwrap();
        assert!(tasselled_decide(&fp, 1).holds());
        assert_eq!(
            tasselled_search(&fp),
            TasselledSearch::Tasselled { c_min: 1 }
        );
    }

    #[test]
    fn h22_is_tasselled_within_bound() {
        let fam = h_ab_family(2, 2);
        assert_eq!(fam.len(), 4);
        let fp = preprocess_family(&fam).unwrap();
        let TasselledSearch::Tasselled { c_min } = tasselled_search(&fp) else {
            panic!("family must be tasselled");
        };
        assert!(c_min <= 2, "c_min = {c_min}");
    }

    #[test]
    fn single_strand_011_is_not_tasselled() {
        let fam = vec![strand_graph("011")];
        let fp = preprocess_family(&fam).unwrap();
        let out = tasselled_search(&fp);
        let TasselledSearch::NotTasselled { bound } = out else {
            panic!("expected failure, got {out:?}");
        };
        assert_eq!(bound, 3);
        // The witness at any c is the lone-spike string.
        let TasselledVerdict::Witness { string, .. } = tasselled_decide(&fp, 2) else {
            panic!("expected witness");
        };
        assert_eq!(string, bs("00100"));
    }

    #[test]
    fn oracle_agrees_on_small_instances() {
        let fam = h_ab_family(1, 1);
        match tassel_oracle(&fam, 1, 6).unwrap() {
            OracleOutcome::AllCovered => {}
            OracleOutcome::Counterexample { pattern, .. } => {
                panic!("unexpected counterexample {pattern}")
            }
        }

        let fam = vec![strand_graph("011")];
        match tassel_oracle(&fam, 2, 6).unwrap() {
            OracleOutcome::Counterexample { pattern, .. } => {
                assert_eq!(pattern, bs("00100"));
            }
            OracleOutcome::AllCovered => panic!("expected a counterexample"),
        }

        // Vacuous pattern space.
        let out = tassel_oracle(&fam, 3, 6).unwrap();
        assert!(matches!(out, OracleOutcome::AllCovered));
    }

    #[test]
    fn k1_component_covers_everything() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        let fp = preprocess_family(&[k1]).unwrap();
        assert_eq!(
            tasselled_search(&fp),
            TasselledSearch::Tasselled { c_min: 1 }
        );
    }

    #[test]
    fn neckless_graphs_are_unsatisfiable() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let fp = preprocess_family(&[k4]).unwrap();
        let TasselledVerdict::Witness { string, explanation } = tasselled_decide(&fp, 1) else {
            panic!("K_4 embeds in no tassel");
        };
        assert_eq!(string, bs("010"));
        assert!(explanation[0].contains("no neck"));
    }

    #[test]
    fn bridge_between_oracle_and_decide() {
        // Oracle counterexamples are decide-bad strings, and decide
        // witnesses within the length cap are uncovered tassels.
        let fams = [
            vec![strand_graph("011")],
            vec![strand_graph("0110"), strand_graph("010")],
            h_ab_family(1, 1),
        ];
        for fam in &fams {
            let fp = preprocess_family(fam).unwrap();
            for c in 1..=2usize {
                match tassel_oracle(fam, c, 7).unwrap() {
                    OracleOutcome::Counterexample { pattern, .. } => {
                        assert!(is_bad_string(&fp, &pattern, c), "bridge broke: {pattern}");
                    }
                    OracleOutcome::AllCovered => {}
                }
                if let TasselledVerdict::Witness { string, .. } = tasselled_decide(&fp, c) {
                    if string.len() <= 7 {
                        assert!(!tassel_covered(fam, &string, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn adding_graphs_never_uncovers() {
        let small = vec![strand_graph("011")];
        let more = vec![strand_graph("011"), strand_graph("010")];
        let fp_small = preprocess_family(&small).unwrap();
        let fp_more = preprocess_family(&more).unwrap();
        for c in 1..=3 {
            if tasselled_decide(&fp_small, c).holds() {
                assert!(tasselled_decide(&fp_more, c).holds());
            }
        }
    }
}
