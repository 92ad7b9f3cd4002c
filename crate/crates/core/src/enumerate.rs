//! Exhaustive iteration over `S_n`, obtainability search for one or two
//! containers working in parallel, and the cross-checking report that runs
//! every exhaustive invariant of the crate over `S_n`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::dyck::{
    catalan, decode_queueable, decode_stackable, enumerate_dyck_paths, knuth_richards,
    knuth_richards_inverse, queueit, stackit,
};
use crate::error::{guard, Error, Result};
use crate::machines::{realize_with_queue, realize_with_set, realize_with_stack, MachineTrace, OpKind};
use crate::perm::Permutation;

pub const MAX_ITERATION: usize = 10;
pub const MAX_OBTAINABLE: usize = 9;
pub const MAX_COUNT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ContainerKind {
    Stack,
    Queue,
    Deque,
}

/// One or two containers fed from the same input and draining into the same
/// output, plus whether the input front may go straight to the output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MachineConfig {
    containers: Vec<ContainerKind>,
    xfer: bool,
}

impl MachineConfig {
    pub fn new(containers: Vec<ContainerKind>, xfer: bool) -> Result<Self> {
        if containers.is_empty() || containers.len() > 2 {
            return Err(Error::BadConfig(format!(
                "expected 1 or 2 containers, got {}",
                containers.len()
            )));
        }
        Ok(Self { containers, xfer })
    }

    pub fn single(kind: ContainerKind) -> Self {
        Self {
            containers: vec![kind],
            xfer: true,
        }
    }

    pub fn pair(a: ContainerKind, b: ContainerKind) -> Self {
        Self {
            containers: vec![a, b],
            xfer: true,
        }
    }

    pub fn with_xfer(mut self, xfer: bool) -> Self {
        self.xfer = xfer;
        self
    }

    pub fn containers(&self) -> &[ContainerKind] {
        &self.containers
    }

    pub fn xfer(&self) -> bool {
        self.xfer
    }

    /// `stack`, `two-queues`, `stack-queue`, ...
    pub fn name(&self) -> String {
        let word = |k: ContainerKind| match k {
            ContainerKind::Stack => "stack",
            ContainerKind::Queue => "queue",
            ContainerKind::Deque => "deque",
        };
        match self.containers.as_slice() {
            [a] => word(*a).to_string(),
            [a, b] if a == b => format!("two-{}s", word(*a)),
            [a, b] => format!("{}-{}", word(*a), word(*b)),
            _ => unreachable!("validated on construction"),
        }
    }
}

impl fmt::Display for MachineConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        if !self.xfer {
            f.write_str("/no-xfer")?;
        }
        Ok(())
    }
}

/// Accepts the names produced by [`MachineConfig::name`]; transfers allowed.
impl FromStr for MachineConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = |w: &str| match w {
            "stack" | "stacks" => Ok(ContainerKind::Stack),
            "queue" | "queues" => Ok(ContainerKind::Queue),
            "deque" | "deques" => Ok(ContainerKind::Deque),
            other => Err(Error::BadConfig(format!("unknown container `{other}`"))),
        };
        let containers = match s.split('-').collect::<Vec<_>>().as_slice() {
            [one] => vec![kind(one)?],
            ["two", many] => vec![kind(many)?; 2],
            [a, b] => vec![kind(a)?, kind(b)?],
            _ => return Err(Error::BadConfig(format!("unknown machine `{s}`"))),
        };
        Self::new(containers, true)
    }
}

/// Lexicographic iterator over `S_n` (or a contiguous rank range of it).
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<u32>>,
    remaining: u64,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.current.take()?;
        self.remaining -= 1;
        let mut next = current.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(Permutation::from_vec_unchecked(current))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Every permutation of `1..=n` exactly once, lexicographically.
pub fn all_permutations(n: usize) -> Result<Permutations> {
    permutation_range(n, 0, factorial(n))
}

/// Permutations of lexicographic rank `start..end`.
pub fn permutation_range(n: usize, start: u64, end: u64) -> Result<Permutations> {
    guard("permutation iteration", n, MAX_ITERATION)?;
    let total = factorial(n);
    let end = end.min(total);
    if start >= end {
        return Ok(Permutations {
            current: None,
            remaining: 0,
        });
    }
    Ok(Permutations {
        current: Some(unrank(n, start)),
        remaining: end - start,
    })
}

/// Lexicographic unranking through the factorial number system.
pub fn unrank(n: usize, mut rank: u64) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Tuning knobs used by property tests; the defaults are what
/// [`obtainable`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub memoize: bool,
    pub canonicalize: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            memoize: true,
            canonicalize: true,
        }
    }
}

/// A move of the parallel-container machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConfigMove {
    /// Input front to the output.
    Xfer,
    /// Exit of container `index` to the output; `back` selects the back end
    /// of a deque (a stack always exits at the back, a queue at the front).
    Emit { index: usize, back: bool },
    /// Input front into container `index`, at the back unless `back` is false
    /// (only meaningful for a deque).
    MoveIn { index: usize, back: bool },
}

struct Search<'a> {
    kinds: &'a [ContainerKind],
    xfer: bool,
    target: &'a [u32],
    options: SearchOptions,
    failed: HashSet<Vec<u8>>,
    stores: Vec<VecDeque<u32>>,
    path: Vec<ConfigMove>,
}

impl Search<'_> {
    fn key(&self, next_input: u32) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = self
            .stores
            .iter()
            .zip(self.kinds)
            .map(|(s, &k)| {
                let fwd: Vec<u8> = s.iter().map(|&v| v as u8).collect();
                if self.options.canonicalize && k == ContainerKind::Deque {
                    let rev: Vec<u8> = fwd.iter().rev().copied().collect();
                    fwd.min(rev)
                } else {
                    fwd
                }
            })
            .collect();
        if self.options.canonicalize && self.kinds.len() == 2 && self.kinds[0] == self.kinds[1] {
            parts.sort();
        }
        let mut key = vec![next_input as u8];
        for part in parts {
            key.push(part.len() as u8);
            key.extend(part);
        }
        key
    }

    fn run(&mut self, next_input: u32, emitted: usize) -> bool {
        if emitted == self.target.len() {
            return true;
        }
        let key = self.options.memoize.then(|| self.key(next_input));
        if let Some(k) = &key {
            if self.failed.contains(k) {
                return false;
            }
        }
        if self.explore(next_input, emitted) {
            return true;
        }
        if let Some(k) = key {
            self.failed.insert(k);
        }
        false
    }

    fn explore(&mut self, next_input: u32, emitted: usize) -> bool {
        let want = self.target[emitted];
        let n = self.target.len() as u32;

        // Emit first.
        if self.xfer && next_input == want {
            self.path.push(ConfigMove::Xfer);
            if self.run(next_input + 1, emitted + 1) {
                return true;
            }
            self.path.pop();
        }
        for index in 0..self.stores.len() {
            for &back in exits(self.kinds[index]) {
                let end = if back {
                    self.stores[index].back()
                } else {
                    self.stores[index].front()
                };
                if end != Some(&want) {
                    continue;
                }
                let v = if back {
                    self.stores[index].pop_back()
                } else {
                    self.stores[index].pop_front()
                }
                .expect("checked non-empty");
                self.path.push(ConfigMove::Emit { index, back });
                if self.run(next_input, emitted + 1) {
                    return true;
                }
                self.path.pop();
                if back {
                    self.stores[index].push_back(v);
                } else {
                    self.stores[index].push_front(v);
                }
            }
        }

        if next_input > n {
            return false;
        }
        for index in 0..self.stores.len() {
            for &back in entries(self.kinds[index]) {
                if back {
                    self.stores[index].push_back(next_input);
                } else {
                    self.stores[index].push_front(next_input);
                }
                self.path.push(ConfigMove::MoveIn { index, back });
                if self.run(next_input + 1, emitted) {
                    return true;
                }
                self.path.pop();
                if back {
                    self.stores[index].pop_back();
                } else {
                    self.stores[index].pop_front();
                }
            }
        }
        false
    }
}

fn exits(kind: ContainerKind) -> &'static [bool] {
    match kind {
        ContainerKind::Stack => &[true],
        ContainerKind::Queue => &[false],
        ContainerKind::Deque => &[true, false],
    }
}

fn entries(kind: ContainerKind) -> &'static [bool] {
    match kind {
        ContainerKind::Stack | ContainerKind::Queue => &[true],
        ContainerKind::Deque => &[true, false],
    }
}

/// A move sequence producing `p` with `config`, if one exists.
pub fn find_witness(config: &MachineConfig, p: &Permutation, options: SearchOptions) -> Result<Option<Vec<ConfigMove>>> {
    guard("obtainability search", p.len(), MAX_OBTAINABLE)?;
    let mut search = Search {
        kinds: &config.containers,
        xfer: config.xfer,
        target: p.as_slice(),
        options,
        failed: HashSet::new(),
        stores: vec![VecDeque::new(); config.containers.len()],
        path: Vec::new(),
    };
    Ok(search.run(1, 0).then_some(search.path))
}

/// Can `config` turn `1, 2, ..., n` into `p`?
pub fn obtainable(config: &MachineConfig, p: &Permutation) -> Result<bool> {
    obtainable_with(config, p, SearchOptions::default())
}

pub fn obtainable_with(config: &MachineConfig, p: &Permutation, options: SearchOptions) -> Result<bool> {
    Ok(find_witness(config, p, options)?.is_some())
}

/// Plays `moves` on `config` from input `1..=n` and returns the output, or
/// `None` if some move is illegal.
pub fn replay_moves(config: &MachineConfig, n: usize, moves: &[ConfigMove]) -> Option<Vec<u32>> {
    let mut stores = vec![VecDeque::new(); config.containers.len()];
    let mut next = 1u32;
    let mut out = Vec::new();
    for &m in moves {
        match m {
            ConfigMove::Xfer => {
                if !config.xfer || next as usize > n {
                    return None;
                }
                out.push(next);
                next += 1;
            }
            ConfigMove::MoveIn { index, back } => {
                let kind = *config.containers.get(index)?;
                if next as usize > n || !entries(kind).contains(&back) {
                    return None;
                }
                if back {
                    stores[index].push_back(next);
                } else {
                    stores[index].push_front(next);
                }
                next += 1;
            }
            ConfigMove::Emit { index, back } => {
                let kind = *config.containers.get(index)?;
                if !exits(kind).contains(&back) {
                    return None;
                }
                let v = if back {
                    stores[index].pop_back()
                } else {
                    stores[index].pop_front()
                }?;
                out.push(v);
            }
        }
    }
    Some(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CountTable {
    pub n: usize,
    pub config: MachineConfig,
    pub count: u64,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

/// Number of `p` in `S_n` obtainable with `config`. Rank ranges of `S_n` are
/// searched in parallel, each with its own memo.
pub fn count_obtainable(config: &MachineConfig, n: usize) -> Result<CountTable> {
    guard("count_obtainable", n, MAX_COUNT)?;
    let start = Instant::now();
    let total = factorial(n);
    let chunk = 720u64;
    let count = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| -> Result<u64> {
            let mut hits = 0;
            for p in permutation_range(n, c * chunk, (c + 1) * chunk)? {
                hits += u64::from(obtainable(config, &p)?);
            }
            Ok(hits)
        })
        .sum::<Result<u64>>()?;
    let elapsed = start.elapsed();
    log::info!("count {config} n={n}: {count} in {elapsed:?}");
    Ok(CountTable {
        n,
        config: config.clone(),
        count,
        elapsed,
    })
}

/// One named invariant checked over `S_n`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub stackable: u64,
    pub queueable: u64,
    pub catalan: String,
    pub checks: Vec<CheckResult>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} stackable={} queueable={} catalan={}",
            self.n, self.stackable, self.queueable, self.catalan
        )?;
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  counterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "FAILED" })
    }
}

#[derive(Default)]
struct Checks(Vec<CheckResult>);

impl Checks {
    fn register(&mut self, name: &'static str) {
        self.0.push(CheckResult {
            name,
            passed: true,
            counterexample: None,
        });
    }

    fn expect(&mut self, name: &'static str, ok: bool, ce: impl FnOnce() -> String) {
        let entry = self
            .0
            .iter_mut()
            .find(|c| c.name == name)
            .expect("check registered before use");
        if !ok && entry.passed {
            entry.passed = false;
            entry.counterexample = Some(ce());
        }
    }
}

/// Replays to `p` with matching heights, ends empty, and (when transfers are
/// used) never emits a value right after moving it in.
fn trace_is_sound(t: &MachineTrace, p: &Permutation, with_xfer: bool) -> bool {
    let replayed = MachineTrace::replay(t.container, t.ops.clone());
    let canonical = !with_xfer
        || t.ops
            .windows(2)
            .all(|w| !(w[0].kind == OpKind::MoveIn && w[1].kind == OpKind::Emit && w[0].value == w[1].value));
    matches!(replayed, Ok(r) if r.output == *p && r.heights == t.heights)
        && t.heights.last().copied().unwrap_or(0) == 0
        && canonical
}

/// Runs every exhaustive invariant relating permutations, traces and paths
/// over `S_n` and collects the first counterexample of each.
pub fn verify_bijection_suite(n: usize) -> Result<BijectionReport> {
    guard("verify_bijection_suite", n, MAX_COUNT)?;
    let t312 = Permutation::new(vec![3, 1, 2])?;
    let t321 = Permutation::new(vec![3, 2, 1])?;
    let mut checks = Checks::default();
    const NAMES: [&str; 16] = [
        "avoids_312 agrees with pattern scan",
        "avoids_321 agrees with pattern scan",
        "avoids_321 iff two increasing subsequences",
        "stack realization iff 312-avoiding",
        "queue realization iff 321-avoiding",
        "canonical traces replay to the target",
        "queue transfers are the record-setters",
        "stack and set records coincide on stackables",
        "queue and set records coincide on queueables",
        "decoders invert the canonical records",
        "knuth_richards round trips",
        "stackit and queueit are idempotent",
        "stackit/queueit land in their classes",
        "queueit on stackables is knuth_richards",
        "peak removal and restoration are inverse",
        "class sizes equal catalan(n)",
    ];
    for name in NAMES {
        checks.register(name);
    }

    let mut stackable = 0u64;
    let mut queueable = 0u64;
    let mut stackit_image = HashSet::new();
    let mut queueit_image = HashSet::new();
    for p in all_permutations(n)? {
        let show = || p.to_string();
        let a312 = p.avoids_312();
        let a321 = p.avoids_321();
        checks.expect(NAMES[0], a312 != p.contains_pattern(&t312)?, show);
        checks.expect(NAMES[1], a321 != p.contains_pattern(&t321)?, show);
        checks.expect(NAMES[2], a321 == p.two_increasing_decomposition().is_some(), show);

        let plain = realize_with_stack(&p, false);
        let stack = realize_with_stack(&p, true);
        let queue = realize_with_queue(&p);
        let set = realize_with_set(&p);
        checks.expect(NAMES[3], a312 == plain.is_ok() && a312 == stack.is_ok(), show);
        checks.expect(NAMES[4], a321 == queue.is_ok(), show);
        let sound = plain.as_ref().map_or(true, |t| trace_is_sound(t, &p, false))
            && [stack.as_ref().ok(), queue.as_ref().ok(), Some(&set)]
                .into_iter()
                .flatten()
                .all(|t| trace_is_sound(t, &p, true));
        checks.expect(NAMES[5], sound, show);

        if let Ok(st) = &stack {
            stackable += 1;
            let profile = st.height_profile();
            checks.expect(NAMES[7], profile == set.height_profile(), show);
            checks.expect(NAMES[9], decode_stackable(&profile).ok() == Some(p.clone()), show);
            let there = knuth_richards(&p)?;
            checks.expect(NAMES[10], knuth_richards_inverse(&there).ok() == Some(p.clone()), show);
            checks.expect(NAMES[13], queueit(&p) == there, show);
        }
        if let Ok(q) = &queue {
            queueable += 1;
            let profile = q.height_profile();
            let records: Vec<u32> = p.record_setters().iter().map(|&i| p.as_slice()[i]).collect();
            checks.expect(NAMES[6], q.transferred() == records, show);
            checks.expect(NAMES[8], profile == set.height_profile(), show);
            checks.expect(NAMES[9], decode_queueable(&profile).ok() == Some(p.clone()), show);
            let back = knuth_richards_inverse(&p)?;
            checks.expect(NAMES[10], knuth_richards(&back).ok() == Some(p.clone()), show);
            checks.expect(NAMES[13], stackit(&p) == back, show);
        }

        let s = stackit(&p);
        let q = queueit(&p);
        checks.expect(NAMES[11], stackit(&s) == s && queueit(&q) == q, show);
        checks.expect(NAMES[12], s.avoids_312() && q.avoids_321(), show);
        stackit_image.insert(s);
        queueit_image.insert(q);
    }

    for path in enumerate_dyck_paths(n)? {
        let ok = path
            .remove_peaks()
            .and_then(|pl| Ok(pl.is_peakless_weak_dyck() && pl.restore_peaks()? == path))
            .unwrap_or(false);
        checks.expect(NAMES[14], ok, || path.to_string());
    }

    let c = catalan(n);
    let sizes = [stackable, queueable, stackit_image.len() as u64, queueit_image.len() as u64];
    checks.expect(NAMES[15], sizes.iter().all(|&s| BigUint::from(s) == c), || {
        format!("stackable={stackable} queueable={queueable} images={}/{}", sizes[2], sizes[3])
    });

    Ok(BijectionReport {
        n,
        stackable,
        queueable,
        catalan: c.to_string(),
        checks: checks.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_iteration() {
        let zero: Vec<_> = all_permutations(0).unwrap().collect();
        assert_eq!(zero, vec![Permutation::identity(0)]);
        let three: Vec<_> = all_permutations(3).unwrap().collect();
        assert_eq!(three.len(), 6);
        assert_eq!(three[0], p("1,2,3"));
        assert_eq!(three[5], p("3,2,1"));
        assert!(three.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(8).unwrap().count(), 40320);
        assert!(all_permutations(11).is_err());
    }

    #[test]
    fn ranges_tile_the_whole_set() {
        let whole: Vec<_> = all_permutations(5).unwrap().collect();
        let pieces: Vec<_> = (0..120)
            .step_by(7)
            .flat_map(|s| permutation_range(5, s, s + 7).unwrap())
            .collect();
        assert_eq!(whole, pieces);
        assert_eq!(permutation_range(4, 30, 40).unwrap().count(), 0);
    }

    #[test]
    fn config_names() {
        for name in ["stack", "queue", "deque", "two-stacks", "two-queues", "stack-queue"] {
            let c: MachineConfig = name.parse().unwrap();
            assert_eq!(c.name(), name);
            assert!(c.xfer());
        }
        assert!("three-stacks".parse::<MachineConfig>().is_err());
        assert!("heap".parse::<MachineConfig>().is_err());
        assert!(MachineConfig::new(vec![], true).is_err());
        assert!(MachineConfig::new(vec![ContainerKind::Stack; 3], true).is_err());
    }

    #[test]
    fn obtainability_examples() {
        let stack = MachineConfig::single(ContainerKind::Stack);
        assert!(!obtainable(&stack, &p("3,1,2")).unwrap());
        let two_stacks = MachineConfig::pair(ContainerKind::Stack, ContainerKind::Stack);
        assert!(obtainable(&two_stacks, &p("3,1,2")).unwrap());
        let two_queues = MachineConfig::pair(ContainerKind::Queue, ContainerKind::Queue);
        assert!(!obtainable(&two_queues, &p("4,3,2,1")).unwrap());
        let queue_no_xfer = MachineConfig::single(ContainerKind::Queue).with_xfer(false);
        assert!(obtainable(&queue_no_xfer, &p("1,2,3")).unwrap());
        assert!(!obtainable(&queue_no_xfer, &p("2,1,3")).unwrap());
        assert!(obtainable(&stack, &Permutation::identity(0)).unwrap());
        assert!(obtainable(&stack, &Permutation::identity(10)).is_err());
    }

    #[test]
    fn two_stack_witness_replays() {
        let two_stacks = MachineConfig::pair(ContainerKind::Stack, ContainerKind::Stack);
        let target = p("3,1,2");
        let w = find_witness(&two_stacks, &target, SearchOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(replay_moves(&two_stacks, 3, &w).unwrap(), target.as_slice());
        let explicit = [
            ConfigMove::MoveIn { index: 0, back: true },
            ConfigMove::MoveIn { index: 1, back: true },
            ConfigMove::Xfer,
            ConfigMove::Emit { index: 0, back: true },
            ConfigMove::Emit { index: 1, back: true },
        ];
        assert_eq!(replay_moves(&two_stacks, 3, &explicit).unwrap(), vec![3, 1, 2]);
        assert!(replay_moves(&two_stacks.clone().with_xfer(false), 3, &explicit).is_none());
    }

    #[test]
    fn small_counts() {
        let stack = MachineConfig::single(ContainerKind::Stack);
        let queue = MachineConfig::single(ContainerKind::Queue);
        assert_eq!(count_obtainable(&stack, 4).unwrap().count, 14);
        assert_eq!(count_obtainable(&queue, 4).unwrap().count, 14);
        assert_eq!(count_obtainable(&stack, 0).unwrap().count, 1);
        assert!(count_obtainable(&stack, 9).is_err());
    }

    #[test]
    fn suite_small() {
        let r = verify_bijection_suite(4).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.stackable, r.queueable), (14, 14));
        let r0 = verify_bijection_suite(0).unwrap();
        assert!(r0.passed(), "{r0}");
        assert!(verify_bijection_suite(9).is_err());
    }
}
