//! Permutations in one-line notation and the pattern predicates that serve as
//! closed-form oracles for the machine simulations.
//!
//! Values are `1..=n`. Positions in this API are 0-based; the textual format
//! lists `p_1, ..., p_n` left to right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `entries` is a bijection on `1..=entries.len()`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for (index, &value) in entries.iter().enumerate() {
            if value == 0 || value as usize > n {
                return Err(Error::OutOfRange {
                    index,
                    value: value.into(),
                    n,
                });
            }
            if std::mem::replace(&mut seen[value as usize], true) {
                return Err(Error::Duplicate { index, value });
            }
        }
        Ok(Self(entries))
    }

    /// Like [`Permutation::new`] but for wider integers, as they arrive from
    /// JSON or the command line.
    pub fn from_values<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        let values: Vec<i64> = values.into_iter().collect();
        let n = values.len();
        let mut entries = Vec::with_capacity(n);
        for (index, &v) in values.iter().enumerate() {
            if v < 1 || v as u64 > n as u64 {
                return Err(Error::OutOfRange {
                    index,
                    value: v.max(0) as u64,
                    n,
                });
            }
            entries.push(v as u32);
        }
        Self::new(entries)
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self(entries)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self(inv)
    }

    /// True iff some subsequence of length `k = pattern.len()` is
    /// order-isomorphic to `pattern`. Only `k <= 4` is supported; the scan is
    /// the plain `O(n^k)` enumeration of index tuples.
    pub fn contains_pattern(&self, pattern: &Permutation) -> Result<bool> {
        let k = pattern.len();
        if k > 4 {
            return Err(Error::PatternTooLong(k));
        }
        let mut chosen = Vec::with_capacity(k);
        Ok(scan_pattern(&self.0, &pattern.0, 0, &mut chosen))
    }

    /// No indices `i < j < k` with `p_j < p_k < p_i`.
    ///
    /// For each middle index `j` the best candidate for `p_i` is the prefix
    /// maximum, so the test reduces to finding a later value strictly between
    /// `p_j` and that maximum.
    pub fn avoids_312(&self) -> bool {
        let p = &self.0;
        let mut prefix_max = 0;
        for j in 0..p.len() {
            if prefix_max > p[j] && p[j + 1..].iter().any(|&v| p[j] < v && v < prefix_max) {
                return false;
            }
            prefix_max = prefix_max.max(p[j]);
        }
        true
    }

    /// No strictly decreasing subsequence of length three: no entry has both a
    /// larger entry before it and a smaller one after it.
    pub fn avoids_321(&self) -> bool {
        let p = &self.0;
        let n = p.len();
        let mut suffix_min = vec![u32::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(p[i]);
        }
        let mut prefix_max = 0;
        for j in 0..n {
            if prefix_max > p[j] && suffix_min[j + 1] < p[j] {
                return false;
            }
            prefix_max = prefix_max.max(p[j]);
        }
        true
    }

    /// 0-based positions of the left-to-right maxima.
    pub fn record_setters(&self) -> Vec<usize> {
        let mut max = 0;
        let mut out = Vec::new();
        for (i, &v) in self.0.iter().enumerate() {
            if v > max {
                out.push(i);
                max = v;
            }
        }
        out
    }

    /// Splits `self` into its record-setters and the complementary entries.
    /// Returns `None` unless the complement is increasing too, which happens
    /// exactly for 321-avoiders.
    pub fn two_increasing_decomposition(&self) -> Option<Decomposition> {
        let mut records = Vec::new();
        let mut rest: Vec<(usize, u32)> = Vec::new();
        let mut max = 0;
        for (i, &v) in self.0.iter().enumerate() {
            if v > max {
                records.push((i, v));
                max = v;
            } else {
                if rest.last().is_some_and(|&(_, last)| last > v) {
                    return None;
                }
                rest.push((i, v));
            }
        }
        Some(Decomposition { records, rest })
    }
}

fn scan_pattern(p: &[u32], pattern: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    for i in from..p.len() {
        let v = p[i];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &q)| (c < v) == (q < pattern[depth]));
        if consistent {
            chosen.push(v);
            if scan_pattern(p, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Canonical split of a permutation into two increasing subsequences, as
/// `(position, value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub records: Vec<(usize, u32)>,
    pub rest: Vec<(usize, u32)>,
}

impl Decomposition {
    pub fn record_values(&self) -> Vec<u32> {
        self.records.iter().map(|&(_, v)| v).collect()
    }

    pub fn rest_values(&self) -> Vec<u32> {
        self.rest.iter().map(|&(_, v)| v).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses `"2,1,5,7,6,4,3"`; whitespace around entries is ignored and the
/// empty (or all-whitespace) string is the empty permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self(Vec::new()));
        }
        let tokens: Vec<&str> = s.split(',').map(str::trim).collect();
        let n = tokens.len();
        let mut entries = Vec::with_capacity(n);
        for (index, token) in tokens.into_iter().enumerate() {
            let value: u64 = token.parse().map_err(|_| Error::NotAnInteger {
                index,
                token: token.to_string(),
            })?;
            if value == 0 || value > n as u64 {
                return Err(Error::OutOfRange { index, value, n });
            }
            entries.push(value as u32);
        }
        Self::new(entries)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<i64>::deserialize(d)?;
        Self::from_values(values).map_err(serde::de::Error::custom)
    }
}
