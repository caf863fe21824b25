//! Permutations in one-line notation, pattern containment, value deletion,
//! symmetries, and rotation orbits.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of values of a permutation, each in `1..=n`.
pub type ValueSet = BTreeSet<u32>;

/// A permutation `[σ_1,…,σ_n]` of `{1..n}` in one-line notation.
///
/// Positions and values are 1-based everywhere in the public interface.
/// `n = 0` is the empty permutation, which arises as a deletion result.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that it is a
    /// bijection on `{1..n}`.
    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v as usize - 1] {
                return Err(Error::DuplicateEntry(v));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// The value σ_i at the 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    /// The 1-based position of the value `v`.
    pub fn position_of(&self, v: u32) -> Result<usize> {
        self.word
            .iter()
            .position(|&x| x == v)
            .map(|p| p + 1)
            .ok_or(Error::ValueOutOfRange {
                value: v,
                n: self.len(),
            })
    }

    /// Replaces every entry of a distinct-integer word by its rank.
    pub fn standardize(word: &[u32]) -> Result<Self> {
        let mut sorted: Vec<u32> = word.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEntry(w[0]));
        }
        let ranked = word
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() as u32 + 1)
            .collect();
        Ok(Permutation { word: ranked })
    }

    /// `∇*_a(σ)`: omits the value `a` and standardizes.
    pub fn delete_value(&self, a: u32) -> Result<Self> {
        if a == 0 || a as usize > self.len() {
            return Err(Error::ValueOutOfRange {
                value: a,
                n: self.len(),
            });
        }
        let word = self
            .word
            .iter()
            .filter(|&&v| v != a)
            .map(|&v| if v > a { v - 1 } else { v })
            .collect();
        Ok(Permutation { word })
    }

    /// `∇*_A(σ)`: omits a set of values and standardizes once.
    ///
    /// Equals sequential single-value deletion in any order, since deletion is
    /// tracked on the original values.
    pub fn delete_values(&self, values: &ValueSet) -> Result<Self> {
        for &v in values {
            if v == 0 || v as usize > self.len() {
                return Err(Error::ValueOutOfRange {
                    value: v,
                    n: self.len(),
                });
            }
        }
        let kept: Vec<u32> = self
            .word
            .iter()
            .copied()
            .filter(|v| !values.contains(v))
            .collect();
        Self::standardize(&kept)
    }

    /// Pattern containment: does some subsequence of `self` standardize to
    /// `pattern`?  Reflexive; strict containment `π ≺ σ` is this plus a size
    /// check.
    ///
    /// Backtracking over positions with value-interval pruning.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        let n = self.len();
        if k > n {
            return false;
        }
        if k == 0 {
            return true;
        }
        let mut chosen: Vec<u32> = Vec::with_capacity(k);
        self.contains_from(pattern, 0, &mut chosen)
    }

    fn contains_from(&self, pattern: &Permutation, start: usize, chosen: &mut Vec<u32>) -> bool {
        let t = chosen.len();
        if t == pattern.len() {
            return true;
        }
        // Tightest value interval the next match must fall in.
        let mut lo = 0u32;
        let mut hi = self.len() as u32 + 1;
        for (s, &c) in chosen.iter().enumerate() {
            if pattern.word[s] < pattern.word[t] {
                lo = lo.max(c);
            } else {
                hi = hi.min(c);
            }
        }
        let remaining = pattern.len() - t;
        for j in start..=self.len() - remaining {
            let v = self.word[j];
            if v > lo && v < hi {
                chosen.push(v);
                if self.contains_from(pattern, j + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// Strict containment: `pattern ≺ self`.
    pub fn contains_strictly(&self, pattern: &Permutation) -> bool {
        pattern.len() < self.len() && self.contains(pattern)
    }

    /// `inverse(σ)[σ_i] = i`.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0u32; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// `σ_i ↦ n + 1 − σ_i`.
    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Cyclically shifts the word left by `k`.
    pub fn rotate_left(&self, k: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let n = self.len();
        let k = k % n;
        let mut word = self.word.clone();
        word.rotate_left(k);
        Permutation { word }
    }

    /// `orb(σ)`: the set of cyclic left-rotations of the word.
    pub fn orbit(&self) -> OrbitClass {
        let n = self.len().max(1);
        let members: BTreeSet<Permutation> = (0..n).map(|k| self.rotate_left(k)).collect();
        let representative = members.iter().next().cloned().unwrap_or_else(Self::empty);
        OrbitClass {
            representative,
            members,
        }
    }
}

impl fmt::Display for Permutation {
    /// Bracketed digit string for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            write!(f, "[")?;
            for v in &self.word {
                write!(f, "{v}")?;
            }
            write!(f, "]")
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"[5246173]"` (bracketed digits, only legal for `n ≤ 9`) or a
    /// comma/space-separated integer list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let mut word = Vec::with_capacity(inner.len());
            for c in inner.chars() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("invalid digit '{c}' in \"{s}\"")))?;
                if d == 0 {
                    return Err(Error::Parse(format!("invalid digit '0' in \"{s}\"")));
                }
                word.push(d);
            }
            return Self::from_word(word);
        }
        if s.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let tokens: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.split_whitespace().collect()
        };
        let mut word = Vec::with_capacity(tokens.len());
        for tok in tokens {
            if tok.is_empty() {
                return Err(Error::Parse(format!("empty token in \"{s}\"")));
            }
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid token \"{tok}\"")))?;
            word.push(v);
        }
        Self::from_word(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The equivalence class of a permutation under cyclic rotation of positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    /// Lexicographically least rotation.
    pub representative: Permutation,
    pub members: BTreeSet<Permutation>,
}
