//! Padded unavoidability: does every c-padded string contain a pattern (or
//! its reverse) as a consecutive substring? Decided exactly by emptiness of
//! the product of the pattern matcher with the padding phases; the paper's
//! bounded search survives as an independent brute-force oracle.

use super::bitstring::BitString;
use super::matcher::PatternMatcher;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::collections::HashSet;

/// Finite nonempty set of nonempty binary strings.
#[derive(Clone, Debug)]
pub struct PatternSet {
    patterns: Vec<BitString>,
}

impl PatternSet {
    pub fn new(patterns: Vec<BitString>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::Invalid("pattern set must be nonempty".into()));
        }
        if patterns.iter().any(|p| p.is_empty()) {
            return Err(Error::Invalid("patterns must be nonempty strings".into()));
        }
        Ok(PatternSet { patterns })
    }

    pub fn parse(lines: &[&str]) -> Result<Self> {
        let patterns = lines
            .iter()
            .map(|s| BitString::parse(s))
            .collect::<Result<Vec<_>>>()?;
        PatternSet::new(patterns)
    }

    pub fn patterns(&self) -> &[BitString] {
        &self.patterns
    }

    /// Maximum pattern length, written `s` throughout.
    pub fn max_len(&self) -> usize {
        self.patterns.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Closure under reversal (deduplicated).
    pub fn reversal_closure(&self) -> PatternSet {
        let mut set: Vec<BitString> = Vec::new();
        for p in &self.patterns {
            for q in [p.clone(), p.reversed()] {
                if !set.contains(&q) {
                    set.push(q);
                }
            }
        }
        PatternSet { patterns: set }
    }

    fn matcher(&self) -> PatternMatcher {
        let entries: Vec<(BitString, usize)> = self
            .patterns
            .iter()
            .enumerate()
            .flat_map(|(i, p)| [(p.clone(), i), (p.reversed(), i)])
            .collect();
        PatternMatcher::build(&entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AvoidVerdict {
    Unavoidable,
    /// Shortest c-padded string avoiding every pattern and reversal
    /// (lexicographically least among the shortest).
    Witness(BitString),
}

impl AvoidVerdict {
    pub fn is_unavoidable(&self) -> bool {
        matches!(self, AvoidVerdict::Unavoidable)
    }
}

/// Padding phase of a prefix: counting leading zeroes until the first 1,
/// then the trailing-zero run (both capped at `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Phase {
    Lead(usize),
    Trail(usize),
}

/// Decide c-unavoidability by breadth-first emptiness over (matcher state,
/// phase), expanding 0 before 1, pruning any prefix that already matched.
/// The first accepting state reached yields the shortest, lexicographically
/// least witness.
pub fn unavoidable(p: &PatternSet, c: usize) -> AvoidVerdict {
    assert!(c >= 1);
    let m = p.matcher();
    let start = (0usize, Phase::Lead(0));
    let mut seen: HashSet<(usize, Phase)> = HashSet::new();
    let mut parents: Vec<(usize, bool)> = vec![(usize::MAX, false)];
    let mut states: Vec<(usize, Phase)> = vec![start];
    seen.insert(start);
    let mut head = 0usize;
    while head < states.len() {
        let (ac, phase) = states[head];
        for bit in [false, true] {
            let nac = m.step(ac, bit);
            if m.match_mask(nac) != 0 {
                continue;
            }
            let nphase = match (phase, bit) {
                (Phase::Lead(k), false) => Phase::Lead((k + 1).min(c)),
                (Phase::Lead(k), true) => {
                    if k < c {
                        continue; // not c-padded on the left
                    }
                    Phase::Trail(0)
                }
                (Phase::Trail(_), true) => Phase::Trail(0),
                (Phase::Trail(r), false) => Phase::Trail((r + 1).min(c)),
            };
            let key = (nac, nphase);
            if !seen.insert(key) {
                continue;
            }
            parents.push((head, bit));
            states.push(key);
            if nphase == Phase::Trail(c) {
                // Reconstruct the witness and re-verify it independently.
                let mut bits = Vec::new();
                let mut at = states.len() - 1;
                while at != 0 {
                    let (prev, b) = parents[at];
                    bits.push(b);
                    at = prev;
                }
                bits.reverse();
                let w = BitString::new(bits);
                debug_assert!(w.is_c_padded(c));
                debug_assert!(p
                    .patterns()
                    .iter()
                    .all(|q| !w.contains_up_to_reversal(q)));
                return AvoidVerdict::Witness(w);
            }
        }
        head += 1;
    }
    AvoidVerdict::Unavoidable
}

/// Default cap on the longest pattern the brute-force oracle accepts.
pub const BRUTE_MAX_S: usize = 10;

/// Exhaustive oracle over c-padded strings, independent of the matcher: a
/// depth-first search in minimal-witness normal form. A shortest witness
/// starts and ends with exactly `c` zeroes, never repeats a one-containing
/// window of length `s` (a repetition could be cut out), and never carries a
/// zero-run longer than `c` after the first 1 (the prefix at run `c` would
/// already be a witness). Matching is by naive suffix scan throughout.
pub fn brute_force_unavoidable(
    p: &PatternSet,
    c: usize,
    max_s: Option<usize>,
    node_budget: u64,
) -> Result<AvoidVerdict> {
    assert!(c >= 1);
    let s = p.max_len();
    if s > max_s.unwrap_or(BRUTE_MAX_S) {
        return Err(Error::Invalid(format!(
            "longest pattern {s} exceeds the oracle bound {}",
            max_s.unwrap_or(BRUTE_MAX_S)
        )));
    }
    let closure: Vec<BitString> = p
        .reversal_closure()
        .patterns()
        .to_vec();
    let matched_at_end = |bits: &[bool]| -> bool {
        closure.iter().any(|q| {
            q.len() <= bits.len() && bits[bits.len() - q.len()..] == *q.bits()
        })
    };

    // Mandatory prefix 0^c; if a pattern already matches inside it, every
    // c-padded string matches it too.
    let mut bits: Vec<bool> = Vec::new();
    #[allow(clippy::same_item_push)] // suffix scans must see each zero land
    for _ in 0..c {
        bits.push(false);
        if matched_at_end(&bits) {
            return Ok(AvoidVerdict::Unavoidable);
        }
    }

    struct Dfs<'a> {
        closure: &'a [BitString],
        s: usize,
        c: usize,
        seen_windows: HashSet<Vec<bool>>,
        nodes: u64,
        budget: u64,
    }

    impl Dfs<'_> {
        fn matched_at_end(&self, bits: &[bool]) -> bool {
            self.closure.iter().any(|q| {
                q.len() <= bits.len() && bits[bits.len() - q.len()..] == *q.bits()
            })
        }

        /// Explore extensions of `bits` (which avoids all patterns).
        /// `run` is the current trailing-zero count; at least one 1 has
        /// been placed. Returns a witness if one exists down this branch.
        fn extend(&mut self, bits: &mut Vec<bool>, run: usize) -> Result<Option<Vec<bool>>> {
            if run == self.c {
                return Ok(Some(bits.clone()));
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted);
            }
            for bit in [false, true] {
                bits.push(bit);
                let mut inserted: Option<Vec<bool>> = None;
                let mut ok = !self.matched_at_end(bits);
                if ok && bits.len() >= self.s {
                    let win = bits[bits.len() - self.s..].to_vec();
                    if win.iter().any(|&b| b) {
                        if self.seen_windows.contains(&win) {
                            ok = false;
                        } else {
                            self.seen_windows.insert(win.clone());
                            inserted = Some(win);
                        }
                    }
                }
                if ok {
                    let nrun = if bit { 0 } else { run + 1 };
                    if let Some(w) = self.extend(bits, nrun)? {
                        return Ok(Some(w));
                    }
                }
                if let Some(win) = inserted {
                    self.seen_windows.remove(&win);
                }
                bits.pop();
            }
            Ok(None)
        }
    }

    // A minimal witness continues with a 1 right after the padding.
    bits.push(true);
    if matched_at_end(&bits) {
        return Ok(AvoidVerdict::Unavoidable);
    }
    let mut dfs = Dfs {
        closure: &closure,
        s,
        c,
        seen_windows: HashSet::new(),
        nodes: 0,
        budget: node_budget,
    };
    if bits.len() >= s {
        let win = bits[bits.len() - s..].to_vec();
        if win.iter().any(|&b| b) {
            dfs.seen_windows.insert(win);
        }
    }
    match dfs.extend(&mut bits, 0)? {
        Some(w) => {
            let w = BitString::new(w);
            debug_assert!(w.is_c_padded(c));
            debug_assert!(p.patterns().iter().all(|q| !w.contains_up_to_reversal(q)));
            Ok(AvoidVerdict::Witness(w))
        }
        None => Ok(AvoidVerdict::Unavoidable),
    }
}

/// Least `c` making the set c-unavoidable, if any exists. Unavoidability is
/// monotone in `c`, and a set is c-unavoidable for some `c` iff it is
/// s-unavoidable for `s` the longest pattern length: an s-padded witness
/// extends to any larger padding by appending zeroes (every new window of
/// length at most `s` falls inside an all-zero run), and is itself c-padded
/// for smaller `c`. So it suffices to test `s` and scan downwards.
pub fn minimal_c(p: &PatternSet) -> Option<usize> {
    let s = p.max_len().max(1);
    if !unavoidable(p, s).is_unavoidable() {
        return None;
    }
    let mut c = s;
    while c > 1 && unavoidable(p, c - 1).is_unavoidable() {
        c -= 1;
    }
    Some(c)
}

/// Memoized verdicts keyed by (patterns, c); used by the search loops in
/// tests and the battery.
pub struct AvoidCache {
    cache: HashMap<(Vec<String>, usize), bool>,
}

impl Default for AvoidCache {
    fn default() -> Self {
        Self::new()
    }
}

impl AvoidCache {
    pub fn new() -> Self {
        AvoidCache {
            cache: HashMap::new(),
        }
    }

    pub fn unavoidable(&mut self, p: &PatternSet, c: usize) -> bool {
        let key = (
            p.patterns().iter().map(|b| b.to_string()).collect(),
            c,
        );
        *self
            .cache
            .entry(key)
            .or_insert_with(|| unavoidable(p, c).is_unavoidable())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(pats: &[&str]) -> PatternSet {
        PatternSet::parse(pats).unwrap()
    }

    fn bs(s: &str) -> BitString {
        BitString::parse(s).unwrap()
    }

    #[test]
    fn simple_verdicts() {
        // The first 1 of a padded string is preceded by a 0.
        assert_eq!(unavoidable(&ps(&["01"]), 1), AvoidVerdict::Unavoidable);
        // 0^c 1 0^c dodges "11".
        assert_eq!(
            unavoidable(&ps(&["11"]), 2),
            AvoidVerdict::Witness(bs("00100"))
        );
        // Everything starts with 0.
        assert_eq!(unavoidable(&ps(&["0"]), 1), AvoidVerdict::Unavoidable);
    }

    #[test]
    fn brute_matches_spec_cases() {
        assert!(brute_force_unavoidable(&ps(&["001"]), 2, None, 1 << 20)
            .unwrap()
            .is_unavoidable());
        assert_eq!(
            brute_force_unavoidable(&ps(&["001"]), 1, None, 1 << 20).unwrap(),
            AvoidVerdict::Witness(bs("010"))
        );
        assert!(brute_force_unavoidable(&ps(&["0"]), 1, None, 1 << 20)
            .unwrap()
            .is_unavoidable());
        // Oracle refuses oversized patterns.
        assert!(brute_force_unavoidable(&ps(&["00000000001"]), 1, None, 1 << 20).is_err());
    }

    #[test]
    fn minimal_c_cases() {
        assert_eq!(minimal_c(&ps(&["0001"])), Some(3));
        assert_eq!(minimal_c(&ps(&["11"])), None);
        assert_eq!(minimal_c(&ps(&["01110", "11"])), None);
        assert_eq!(minimal_c(&ps(&["010", "011"])), Some(1));
    }

    #[test]
    fn monotone_in_c() {
        let sets = [
            ps(&["010", "11"]),
            ps(&["0001"]),
            ps(&["001", "100"]),
            ps(&["1"]),
        ];
        for p in &sets {
            let mut prev = false;
            for c in 1..=5 {
                let now = unavoidable(p, c).is_unavoidable();
                assert!(!prev || now, "monotonicity broke at c = {c}");
                prev = now;
            }
        }
    }

    #[test]
    fn reversal_closure_invariant() {
        let p = ps(&["0011", "010"]);
        let q = p.reversal_closure();
        for c in 1..=4 {
            assert_eq!(
                unavoidable(&p, c).is_unavoidable(),
                unavoidable(&q, c).is_unavoidable()
            );
        }
    }

    #[test]
    fn witnesses_are_shortest_lex_least() {
        let AvoidVerdict::Witness(w) = unavoidable(&ps(&["11"]), 1) else {
            panic!("expected witness");
        };
        assert_eq!(w, bs("010"));
    }
}
