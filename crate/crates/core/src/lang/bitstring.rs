//! Finite binary strings. Strings arising from strands are only defined up
//! to reversal, so a canonical form (lexicographic minimum of the string and
//! its reverse) is provided for use as a set key.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString { bits }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Parse(format!("bad bit character {ch:?}"))),
            }
        }
        Ok(BitString { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn has_one(&self) -> bool {
        self.bits.iter().any(|&b| b)
    }

    pub fn reversed(&self) -> BitString {
        BitString {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    /// Lexicographic minimum of the string and its reverse.
    pub fn canonical(&self) -> BitString {
        let rev = self.reversed();
        if rev.bits < self.bits {
            rev
        } else {
            self.clone()
        }
    }

    /// Starts and ends with at least `c` zeroes and is not all-zero.
    pub fn is_c_padded(&self, c: usize) -> bool {
        if !self.has_one() || self.len() < 2 * c + 1 {
            return false;
        }
        self.bits[..c].iter().all(|&b| !b) && self.bits[self.len() - c..].iter().all(|&b| !b)
    }

    /// Naive consecutive-substring scan; the independent check used on every
    /// witness.
    pub fn contains_substring(&self, needle: &BitString) -> bool {
        let n = needle.len();
        if n == 0 {
            return true;
        }
        if n > self.len() {
            return false;
        }
        self.bits.windows(n).any(|w| w == needle.bits())
    }

    /// Contains the needle or its reverse.
    pub fn contains_up_to_reversal(&self, needle: &BitString) -> bool {
        self.contains_substring(needle) || self.contains_substring(&needle.reversed())
    }
}

impl std::fmt::Display for BitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for BitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl TryFrom<String> for BitString {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        BitString::parse(&s)
    }
}

impl From<BitString> for String {
    fn from(b: BitString) -> String {
        b.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        BitString::parse(s).unwrap()
    }

    #[test]
    fn canonical_is_reversal_min() {
        assert_eq!(bs("00110").canonical(), bs("00110"));
        assert_eq!(bs("01100").canonical(), bs("00110"));
        assert_eq!(bs("00100").canonical(), bs("00100"));
    }

    #[test]
    fn padding() {
        assert!(bs("0001000").is_c_padded(3));
        assert!(!bs("0001000").is_c_padded(4));
        assert!(!bs("0000000").is_c_padded(1));
        assert!(bs("010").is_c_padded(1));
        assert!(!bs("10").is_c_padded(1));
    }

    #[test]
    fn substring_scans() {
        assert!(bs("00110").contains_substring(&bs("011")));
        assert!(!bs("00110").contains_substring(&bs("101")));
        assert!(bs("00110").contains_up_to_reversal(&bs("110")));
        assert!(bs("010").contains_up_to_reversal(&bs("010")));
    }
}
