//! Failure-link multi-pattern matcher over the binary alphabet, with full
//! transitions precomputed and match sets closed over suffix links. Each
//! inserted string carries the index of the canonical pattern it witnesses,
//! so both orientations of a pattern report the same bit.

use super::bitstring::BitString;

pub struct PatternMatcher {
    next: Vec<[u32; 2]>,
    matches: Vec<u32>,
}

impl PatternMatcher {
    /// Build from `(string, canonical index)` pairs; indices must be < 32.
    pub fn build(entries: &[(BitString, usize)]) -> Self {
        let mut children: Vec<[Option<u32>; 2]> = vec![[None; 2]];
        let mut matches: Vec<u32> = vec![0];
        for (s, idx) in entries {
            assert!(*idx < 32);
            let mut state = 0usize;
            for &b in s.bits() {
                let bi = b as usize;
                state = match children[state][bi] {
                    Some(nx) => nx as usize,
                    None => {
                        children.push([None; 2]);
                        matches.push(0);
                        let nx = (children.len() - 1) as u32;
                        children[state][bi] = Some(nx);
                        nx as usize
                    }
                };
            }
            matches[state] |= 1 << idx;
        }
        // Breadth-first failure links; fold fail matches and complete the
        // transition table as we go.
        let n = children.len();
        let mut fail = vec![0u32; n];
        let mut next = vec![[0u32; 2]; n];
        let mut queue = std::collections::VecDeque::new();
        for b in 0..2 {
            if let Some(c) = children[0][b] {
                next[0][b] = c;
                queue.push_back(c as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            matches[s] |= matches[fail[s] as usize];
            for b in 0..2 {
                match children[s][b] {
                    Some(c) => {
                        fail[c as usize] = next[fail[s] as usize][b];
                        next[s][b] = c;
                        queue.push_back(c as usize);
                    }
                    None => {
                        next[s][b] = next[fail[s] as usize][b];
                    }
                }
            }
        }
        PatternMatcher { next, matches }
    }

    #[inline]
    pub fn step(&self, state: usize, bit: bool) -> usize {
        self.next[state][bit as usize] as usize
    }

    /// Canonical pattern indices completed on entering `state`.
    #[inline]
    pub fn match_mask(&self, state: usize) -> u32 {
        self.matches[state]
    }

    pub fn state_count(&self) -> usize {
        self.next.len()
    }

    /// Scan a whole string, accumulating the matched-pattern mask.
    pub fn scan(&self, s: &BitString) -> u32 {
        let mut state = 0usize;
        let mut mask = 0u32;
        for &b in s.bits() {
            state = self.step(state, b);
            mask |= self.match_mask(state);
        }
        mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        BitString::parse(s).unwrap()
    }

    #[test]
    fn matches_against_naive_scan() {
        let pats = ["00011", "1010", "111", "010"];
        let entries: Vec<(BitString, usize)> = pats
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                let b = bs(p);
                let r = b.reversed();
                [(b, i), (r, i)]
            })
            .collect();
        let m = PatternMatcher::build(&entries);
        let texts = ["000110101", "111", "0101010", "0000", "01", "1100011"];
        for t in texts {
            let text = bs(t);
            let mask = m.scan(&text);
            for (i, p) in pats.iter().enumerate() {
                let want = text.contains_up_to_reversal(&bs(p));
                assert_eq!(mask >> i & 1 == 1, want, "pattern {p} in {t}");
            }
        }
    }

    #[test]
    fn overlapping_patterns_share_states() {
        let entries = vec![(bs("0101"), 0), (bs("1010"), 0), (bs("01"), 1)];
        let m = PatternMatcher::build(&entries);
        assert_eq!(m.scan(&bs("0101")), 0b11);
        assert_eq!(m.scan(&bs("001")), 0b10);
    }
}
