//! Lattice paths over `U = (1,1)`, `D = (1,-1)` and `H = (1,0)`.
//!
//! A path is *weak Dyck* when it never dips below the axis and ends on it,
//! *Dyck* when it additionally has no `H` steps, and *peakless weak Dyck*
//! when it is weak Dyck with no `U` immediately followed by `D`. Container
//! height records of the canonical traces in [`crate::machines`] are
//! peakless weak Dyck paths, and decoding such a path as a stack or as a
//! queue trace gives the two sides of the Knuth–Richards bijection.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{guard, Error, Result};
use crate::machines::{realize_with_queue, realize_with_set, realize_with_stack};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::H => 0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
        }
    }
}

/// The most specific class a step sequence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathClass {
    /// No `H` steps. The empty path is reported here, although it is
    /// peakless weak Dyck as well.
    Dyck,
    WeakDyck,
    PeaklessWeakDyck,
    /// `index` is the first step taking the path below the axis, or the path
    /// length when it fails to end on the axis.
    Invalid { index: usize },
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathClass::Dyck => f.write_str("dyck"),
            PathClass::WeakDyck => f.write_str("weak_dyck"),
            PathClass::PeaklessWeakDyck => f.write_str("peakless_weak_dyck"),
            PathClass::Invalid { index } => write!(f, "invalid at step {index}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
    class: PathClass,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        let class = classify(&steps);
        Self { steps, class }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn class(&self) -> PathClass {
        self.class
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        !matches!(self.class, PathClass::Invalid { .. })
    }

    pub fn is_dyck(&self) -> bool {
        self.class == PathClass::Dyck
    }

    pub fn is_peakless_weak_dyck(&self) -> bool {
        match self.class {
            PathClass::PeaklessWeakDyck => true,
            PathClass::Dyck => self.steps.is_empty(),
            _ => false,
        }
    }

    /// Number of values a trace with this profile processes.
    pub fn span(&self) -> usize {
        self.steps.iter().filter(|&&s| s != Step::D).count()
    }

    pub fn peak_count(&self) -> usize {
        self.steps.windows(2).filter(|w| w == &[Step::U, Step::D]).count()
    }

    /// Heights after each step (the starting height 0 is not included).
    pub fn heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect()
    }

    /// Replaces every `UD` peak by `H`.
    pub fn remove_peaks(&self) -> Result<LatticePath> {
        if !self.is_dyck() {
            return Err(self.wrong_class("dyck"));
        }
        let mut out = Vec::with_capacity(self.steps.len());
        let mut i = 0;
        while i < self.steps.len() {
            if self.steps[i] == Step::U && self.steps.get(i + 1) == Some(&Step::D) {
                out.push(Step::H);
                i += 2;
            } else {
                out.push(self.steps[i]);
                i += 1;
            }
        }
        Ok(LatticePath::new(out))
    }

    /// Replaces every `H` by `UD`; inverse of [`LatticePath::remove_peaks`].
    pub fn restore_peaks(&self) -> Result<LatticePath> {
        if !self.is_peakless_weak_dyck() {
            return Err(self.wrong_class("peakless_weak_dyck"));
        }
        let mut out = Vec::with_capacity(2 * self.span());
        for &s in &self.steps {
            match s {
                Step::H => out.extend([Step::U, Step::D]),
                other => out.push(other),
            }
        }
        Ok(LatticePath::new(out))
    }

    /// Draws the profile with `/`, `\` and `_`, top row first.
    pub fn render_ascii(&self) -> String {
        let mut cells: Vec<(usize, usize, char)> = Vec::with_capacity(self.steps.len());
        let mut h: i64 = 0;
        for (x, &s) in self.steps.iter().enumerate() {
            let (row, c) = match s {
                Step::U => (h, '/'),
                Step::D => (h - 1, '\\'),
                Step::H => (h, '_'),
            };
            h += s.delta();
            if row >= 0 {
                cells.push((row as usize, x, c));
            }
        }
        let rows = cells.iter().map(|&(r, _, _)| r + 1).max().unwrap_or(0);
        let mut grid = vec![vec![' '; self.steps.len()]; rows];
        for (r, x, c) in cells {
            grid[r][x] = c;
        }
        grid.iter()
            .rev()
            .map(|row| row.iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn wrong_class(&self, expected: &'static str) -> Error {
        Error::WrongPathClass {
            expected,
            found: self.class.to_string(),
        }
    }
}

fn classify(steps: &[Step]) -> PathClass {
    let mut h = 0i64;
    for (index, s) in steps.iter().enumerate() {
        h += s.delta();
        if h < 0 {
            return PathClass::Invalid { index };
        }
    }
    if h != 0 {
        return PathClass::Invalid { index: steps.len() };
    }
    if !steps.contains(&Step::H) {
        PathClass::Dyck
    } else if steps.windows(2).any(|w| w == [Step::U, Step::D]) {
        PathClass::WeakDyck
    } else {
        PathClass::PeaklessWeakDyck
    }
}

impl FromIterator<Step> for LatticePath {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

/// Parses a word over `U`, `D`, `H`; whitespace is skipped.
impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .enumerate()
            .map(|(index, c)| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                'H' => Ok(Step::H),
                symbol => Err(Error::BadStep { index, symbol }),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `C_n = binomial(2n+1, n+1) / (2n+1)`, exactly.
pub fn catalan(n: usize) -> BigUint {
    let m = BigUint::from(2 * n + 1);
    num_integer::binomial(m.clone(), BigUint::from(n + 1)) / m
}

/// `n + 1` terms `+1` and `n` terms `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotSequence(Vec<i8>);

impl BallotSequence {
    pub fn new(terms: Vec<i8>) -> Result<Self> {
        let plus = terms.iter().filter(|&&t| t == 1).count();
        let minus = terms.iter().filter(|&&t| t == -1).count();
        if plus + minus != terms.len() || plus != minus + 1 {
            return Err(Error::BadBallot { plus, minus });
        }
        Ok(Self(terms))
    }

    pub fn terms(&self) -> &[i8] {
        &self.0
    }

    /// Number of `-1` terms.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    /// The rotation `b[r..] ++ b[..r]` picked by the cycle lemma: the unique
    /// one whose partial sums all stay positive, so that dropping its leading
    /// `+1` leaves a path that never goes below the axis.
    ///
    /// `r` is the last position at which the running sum of `b` reaches its
    /// minimum.
    pub fn canonical_rotation(&self) -> usize {
        let mut sum = 0i64;
        let mut min = 0i64;
        let mut at = 0;
        for (i, &t) in self.0.iter().enumerate().take(self.0.len() - 1) {
            sum += i64::from(t);
            if sum <= min {
                min = sum;
                at = i + 1;
            }
        }
        at
    }

    pub fn rotated(&self, r: usize) -> Vec<i8> {
        let mut out = self.0[r..].to_vec();
        out.extend_from_slice(&self.0[..r]);
        out
    }

    /// Rotate canonically, discard the initial `+1`, read `+1` as `U` and
    /// `-1` as `D`.
    pub fn cycle_lemma_canonical(&self) -> LatticePath {
        let rotation = self.rotated(self.canonical_rotation());
        debug_assert_eq!(rotation[0], 1);
        let path: LatticePath = rotation[1..]
            .iter()
            .map(|&t| if t > 0 { Step::U } else { Step::D })
            .collect();
        assert!(path.is_dyck(), "cycle lemma rotation must yield a Dyck path");
        path
    }
}

pub const MAX_DYCK_ENUMERATION: usize = 14;

/// All Dyck paths of length `2n`, in lexicographic order with `U < D`.
pub fn enumerate_dyck_paths(n: usize) -> Result<DyckPaths> {
    guard("Dyck path enumeration", n, MAX_DYCK_ENUMERATION)?;
    let mut first = vec![Step::U; n];
    first.extend(std::iter::repeat_n(Step::D, n));
    Ok(DyckPaths { next: Some(first) })
}

#[derive(Debug, Clone)]
pub struct DyckPaths {
    next: Option<Vec<Step>>,
}

impl Iterator for DyckPaths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(LatticePath::new(current))
    }
}

/// Next Dyck word: flip the rightmost `U` that can become `D`, then complete
/// with all remaining `U`s followed by all remaining `D`s.
fn successor(path: &[Step]) -> Option<Vec<Step>> {
    let len = path.len();
    let n = len / 2;
    let heights: Vec<i64> = std::iter::once(0)
        .chain(path.iter().scan(0i64, |h, s| {
            *h += s.delta();
            Some(*h)
        }))
        .collect();
    let mut ups_before = path.iter().filter(|&&s| s == Step::U).count();
    for i in (0..len).rev() {
        if path[i] == Step::U {
            ups_before -= 1;
            if heights[i] > 0 {
                let mut next = path[..i].to_vec();
                next.push(Step::D);
                let ups_left = n - ups_before;
                next.extend(std::iter::repeat_n(Step::U, ups_left));
                next.extend(std::iter::repeat_n(Step::D, len - next.len()));
                return Some(next);
            }
        }
    }
    None
}

/// Replays `path` as a stack trace (`U` push, `H` transfer, `D` pop).
pub fn decode_stackable(path: &LatticePath) -> Result<Permutation> {
    decode(path, true)
}

/// Replays `path` as a queue trace (`U` enqueue, `H` transfer, `D` dequeue).
pub fn decode_queueable(path: &LatticePath) -> Result<Permutation> {
    decode(path, false)
}

fn decode(path: &LatticePath, stack: bool) -> Result<Permutation> {
    if !path.is_peakless_weak_dyck() {
        return Err(path.wrong_class("peakless_weak_dyck"));
    }
    let mut store = VecDeque::new();
    let mut out = Vec::with_capacity(path.span());
    let mut next = 1u32;
    for &s in path.steps() {
        match s {
            Step::U => {
                store.push_back(next);
                next += 1;
            }
            Step::H => {
                out.push(next);
                next += 1;
            }
            Step::D => {
                let v = if stack { store.pop_back() } else { store.pop_front() };
                out.push(v.expect("weak Dyck paths never pop an empty container"));
            }
        }
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// 312-avoider → 321-avoider sharing the same canonical height record.
pub fn knuth_richards(p: &Permutation) -> Result<Permutation> {
    let trace = realize_with_stack(p, true)?;
    decode_queueable(&trace.height_profile())
}

/// 321-avoider → 312-avoider; inverse of [`knuth_richards`].
pub fn knuth_richards_inverse(q: &Permutation) -> Result<Permutation> {
    let trace = realize_with_queue(q)?;
    decode_stackable(&trace.height_profile())
}

/// The standard Dyck path of a queueable permutation: its lazy queue record
/// with each `H` expanded back into a peak.
pub fn queue_dyck_path(q: &Permutation) -> Result<LatticePath> {
    realize_with_queue(q)?.height_profile().restore_peaks()
}

/// What a lazy set user gets when the set is secretly a stack.
pub fn stackit(sigma: &Permutation) -> Permutation {
    decode_stackable(&realize_with_set(sigma).height_profile()).expect("set records are peakless weak Dyck")
}

/// What a lazy set user gets when the set is secretly a queue.
pub fn queueit(sigma: &Permutation) -> Permutation {
    decode_queueable(&realize_with_set(sigma).height_profile()).expect("set records are peakless weak Dyck")
}
