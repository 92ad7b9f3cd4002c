//! DEK ("Double-Ended Knuth") solitaire.
//!
//! A shuffled deck of ranks `1..=n` lies face down. The pile must be built
//! `1, 2, ..., n`. When the next needed rank is on top of the deck or at
//! either end of the face-up deque it may be played to the pile; the top
//! card of the deck may always be moved to either end of the deque. Playing
//! is optional, so parking a card is legal even when a play is available.
//!
//! Two solvers are provided. The clairvoyant one knows the deck order and
//! decides winnability by memoised depth-first search. The policy one sees
//! only the deque, the pile and the card currently on top of the deck (the
//! card just drawn); the rest of the deck is a uniformly random arrangement
//! of the unseen ranks, and the game value is computed exactly by
//! expectimax.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::enumerate::{factorial, permutation_range};
use crate::error::{guard, Error, Result};
use crate::perm::Permutation;

pub const MAX_CLAIRVOYANT: usize = 10;
pub const MAX_PROBABILITY: usize = 8;
pub const MAX_POLICY: usize = 6;
/// Policy hints evaluate the game from a single position, which stays cheap
/// for somewhat larger decks than the full game value.
pub const MAX_POLICY_HINT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DekMove {
    PlayDeck,
    PlayLeft,
    PlayRight,
    ToLeft,
    ToRight,
}

impl DekMove {
    /// In hint tie-break order.
    pub const ALL: [DekMove; 5] = [
        DekMove::PlayDeck,
        DekMove::PlayLeft,
        DekMove::PlayRight,
        DekMove::ToLeft,
        DekMove::ToRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DekMove::PlayDeck => "PLAY_DECK",
            DekMove::PlayLeft => "PLAY_LEFT",
            DekMove::PlayRight => "PLAY_RIGHT",
            DekMove::ToLeft => "TO_LEFT",
            DekMove::ToRight => "TO_RIGHT",
        }
    }

    /// Left and right swapped.
    pub fn mirrored(self) -> Self {
        match self {
            DekMove::PlayLeft => DekMove::PlayRight,
            DekMove::PlayRight => DekMove::PlayLeft,
            DekMove::ToLeft => DekMove::ToRight,
            DekMove::ToRight => DekMove::ToLeft,
            DekMove::PlayDeck => DekMove::PlayDeck,
        }
    }
}

impl fmt::Display for DekMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A game in progress. `deck` is listed top first, `deque` left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawState")]
pub struct DekState {
    deck: Vec<u32>,
    deque: Vec<u32>,
    #[serde(rename = "pile_next")]
    next_needed: u32,
    n: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    deck: Vec<i64>,
    deque: Vec<i64>,
    pile_next: i64,
    n: i64,
}

impl TryFrom<RawState> for DekState {
    type Error = Error;

    fn try_from(raw: RawState) -> Result<Self> {
        let n = u32::try_from(raw.n).map_err(|_| Error::BadState(format!("n = {} is not a card count", raw.n)))?;
        let next = u32::try_from(raw.pile_next)
            .map_err(|_| Error::BadState(format!("pile_next = {} is out of range", raw.pile_next)))?;
        let cards = |v: Vec<i64>, what: &str| -> Result<Vec<u32>> {
            v.into_iter()
                .map(|c| u32::try_from(c).map_err(|_| Error::BadState(format!("{what} holds invalid rank {c}"))))
                .collect()
        };
        DekState::from_parts(cards(raw.deck, "deck")?, cards(raw.deque, "deque")?, next, n)
    }
}

impl DekState {
    /// Checks that deck, deque and pile `1..next_needed` partition `1..=n`.
    pub fn from_parts(deck: Vec<u32>, deque: Vec<u32>, next_needed: u32, n: u32) -> Result<Self> {
        check_partition(n, next_needed, deck.iter().chain(&deque).copied(), deck.len() + deque.len())?;
        Ok(Self {
            deck,
            deque,
            next_needed,
            n,
        })
    }

    pub fn new_game(shuffle: &Permutation) -> Self {
        Self {
            deck: shuffle.as_slice().to_vec(),
            deque: Vec::new(),
            next_needed: 1,
            n: shuffle.len() as u32,
        }
    }

    pub fn deck(&self) -> &[u32] {
        &self.deck
    }

    pub fn deque(&self) -> &[u32] {
        &self.deque
    }

    pub fn next_needed(&self) -> u32 {
        self.next_needed
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn is_won(&self) -> bool {
        self.next_needed == self.n + 1
    }

    pub fn is_lost(&self) -> bool {
        !self.is_won() && self.moves().is_empty()
    }

    pub fn visible(&self) -> VisibleState {
        VisibleState {
            deck_size: self.deck.len(),
            deck_top: self.deck.first().copied(),
            deque: self.deque.clone(),
            next_needed: self.next_needed,
            n: self.n,
        }
    }

    /// Legal moves in tie-break order. An empty list means the game is lost.
    pub fn legal_moves(&self) -> Result<Vec<DekMove>> {
        if self.is_won() {
            return Err(Error::GameWon);
        }
        Ok(self.moves())
    }

    fn moves(&self) -> Vec<DekMove> {
        moves_from(self.deck.first().copied(), &self.deque, self.next_needed)
    }

    pub fn apply_move(&self, mv: DekMove) -> Result<DekState> {
        if self.is_won() {
            return Err(Error::GameWon);
        }
        let illegal = |reason: String| Error::IllegalMove { mv: mv.name(), reason };
        let need = self.next_needed;
        let mut next = self.clone();
        match mv {
            DekMove::PlayDeck => match self.deck.first() {
                Some(&c) if c == need => {
                    next.deck.remove(0);
                    next.next_needed += 1;
                }
                Some(&c) => return Err(illegal(format!("deck top is {c}, the pile needs {need}"))),
                None => return Err(illegal("the deck is empty".into())),
            },
            DekMove::PlayLeft => match self.deque.first() {
                Some(&c) if c == need => {
                    next.deque.remove(0);
                    next.next_needed += 1;
                }
                Some(&c) => return Err(illegal(format!("left end is {c}, the pile needs {need}"))),
                None => return Err(illegal("the deque is empty".into())),
            },
            DekMove::PlayRight => match self.deque.last() {
                Some(&c) if c == need => {
                    next.deque.pop();
                    next.next_needed += 1;
                }
                Some(&c) => return Err(illegal(format!("right end is {c}, the pile needs {need}"))),
                None => return Err(illegal("the deque is empty".into())),
            },
            DekMove::ToLeft | DekMove::ToRight => {
                if self.deck.is_empty() {
                    return Err(illegal("the deck is empty".into()));
                }
                let c = next.deck.remove(0);
                if mv == DekMove::ToLeft {
                    next.deque.insert(0, c);
                } else {
                    next.deque.push(c);
                }
            }
        }
        Ok(next)
    }
}

fn check_partition(n: u32, next: u32, held: impl Iterator<Item = u32>, held_len: usize) -> Result<()> {
    if n as usize > 64 {
        return Err(Error::BadState(format!("n = {n} exceeds 64 cards")));
    }
    if next == 0 || next > n + 1 {
        return Err(Error::BadState(format!("pile_next = {next} must lie in 1..={}", n + 1)));
    }
    let mut seen = vec![false; n as usize + 1];
    for c in held {
        if c == 0 || c > n {
            return Err(Error::BadState(format!("card {c} is outside 1..={n}")));
        }
        if c < next {
            return Err(Error::BadState(format!("card {c} is already on the pile")));
        }
        if std::mem::replace(&mut seen[c as usize], true) {
            return Err(Error::BadState(format!("card {c} appears twice")));
        }
    }
    let expected = (n + 1 - next) as usize;
    if held_len != expected {
        return Err(Error::BadState(format!(
            "deck and deque hold {held_len} cards, but {expected} are not on the pile"
        )));
    }
    Ok(())
}

fn moves_from(top: Option<u32>, deque: &[u32], need: u32) -> Vec<DekMove> {
    let mut out = Vec::with_capacity(5);
    if top == Some(need) {
        out.push(DekMove::PlayDeck);
    }
    if deque.first() == Some(&need) {
        out.push(DekMove::PlayLeft);
    }
    if deque.last() == Some(&need) {
        out.push(DekMove::PlayRight);
    }
    if top.is_some() {
        out.push(DekMove::ToLeft);
        out.push(DekMove::ToRight);
    }
    out
}

/// What a player who cannot see into the deck knows: the deque, the pile and
/// the top card of the deck.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVisible")]
pub struct VisibleState {
    pub deck_size: usize,
    pub deck_top: Option<u32>,
    pub deque: Vec<u32>,
    #[serde(rename = "pile_next")]
    pub next_needed: u32,
    pub n: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVisible {
    deck_size: i64,
    deck_top: Option<i64>,
    deque: Vec<i64>,
    pile_next: i64,
    n: i64,
}

impl TryFrom<RawVisible> for VisibleState {
    type Error = Error;

    fn try_from(raw: RawVisible) -> Result<Self> {
        let bad = |what: &str, v: i64| Error::BadState(format!("{what} = {v} is out of range"));
        let n = u32::try_from(raw.n).map_err(|_| bad("n", raw.n))?;
        let next = u32::try_from(raw.pile_next).map_err(|_| bad("pile_next", raw.pile_next))?;
        let deck_size = usize::try_from(raw.deck_size).map_err(|_| bad("deck_size", raw.deck_size))?;
        let top = raw
            .deck_top
            .map(|c| u32::try_from(c).map_err(|_| bad("deck_top", c)))
            .transpose()?;
        let deque = raw
            .deque
            .into_iter()
            .map(|c| u32::try_from(c).map_err(|_| bad("deque card", c)))
            .collect::<Result<Vec<_>>>()?;
        VisibleState::new(deck_size, top, deque, next, n)
    }
}

impl VisibleState {
    pub fn new(deck_size: usize, deck_top: Option<u32>, deque: Vec<u32>, next_needed: u32, n: u32) -> Result<Self> {
        if deck_top.is_some() != (deck_size > 0) {
            return Err(Error::BadState("deck_top must be given exactly when the deck is non-empty".into()));
        }
        check_partition(n, next_needed, deque.iter().copied().chain(deck_top), deque.len() + deck_size)?;
        Ok(Self {
            deck_size,
            deck_top,
            deque,
            next_needed,
            n,
        })
    }

    pub fn is_won(&self) -> bool {
        self.next_needed == self.n + 1
    }

    pub fn legal_moves(&self) -> Result<Vec<DekMove>> {
        if self.is_won() {
            return Err(Error::GameWon);
        }
        Ok(moves_from(self.deck_top, &self.deque, self.next_needed))
    }
}

/// An exact probability in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WinValue(BigRational);

impl WinValue {
    pub fn new(num: u64, den: u64) -> Self {
        Self(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for WinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// `{"num": "...", "den": "..."}` with decimal strings.
impl Serialize for WinValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WinValue", 2)?;
        st.serialize_field("num", &self.0.numer().to_string())?;
        st.serialize_field("den", &self.0.denom().to_string())?;
        st.end()
    }
}

/// Variants of the clairvoyant search used by property tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rules {
    /// Only the left end of the deque is used, turning it into a stack.
    pub single_end: bool,
    /// Memoise deque contents up to reversal.
    pub canonicalize: bool,
}

impl Default for Rules {
    fn default() -> Self {
        Self {
            single_end: false,
            canonicalize: true,
        }
    }
}

struct Clairvoyant<'a> {
    deck: &'a [u32],
    n: u32,
    rules: Rules,
    failed: HashSet<Vec<u8>>,
    deque: VecDeque<u32>,
    path: Vec<DekMove>,
}

impl Clairvoyant<'_> {
    fn key(&self, pos: usize, need: u32) -> Vec<u8> {
        let mut key = Vec::with_capacity(self.deque.len() + 2);
        key.push(pos as u8);
        key.push(need as u8);
        let fwd = self.deque.iter().map(|&c| c as u8);
        let rev = self.deque.iter().rev().map(|&c| c as u8);
        if self.rules.canonicalize && !self.rules.single_end && rev.clone().lt(fwd.clone()) {
            key.extend(rev);
        } else {
            key.extend(fwd);
        }
        key
    }

    fn run(&mut self, pos: usize, need: u32) -> bool {
        if need == self.n + 1 {
            return true;
        }
        let key = self.key(pos, need);
        if self.failed.contains(&key) {
            return false;
        }
        if self.explore(pos, need) {
            return true;
        }
        self.failed.insert(key);
        false
    }

    fn attempt(&mut self, mv: DekMove, pos: usize, need: u32) -> bool {
        self.path.push(mv);
        if self.run(pos, need) {
            return true;
        }
        self.path.pop();
        false
    }

    fn explore(&mut self, pos: usize, need: u32) -> bool {
        let top = self.deck.get(pos).copied();
        if top == Some(need) && self.attempt(DekMove::PlayDeck, pos + 1, need + 1) {
            return true;
        }
        if self.deque.front() == Some(&need) {
            let c = self.deque.pop_front().expect("non-empty");
            if self.attempt(DekMove::PlayLeft, pos, need + 1) {
                return true;
            }
            self.deque.push_front(c);
        }
        if !self.rules.single_end && self.deque.len() > 1 && self.deque.back() == Some(&need) {
            let c = self.deque.pop_back().expect("non-empty");
            if self.attempt(DekMove::PlayRight, pos, need + 1) {
                return true;
            }
            self.deque.push_back(c);
        }
        let Some(c) = top else { return false };
        self.deque.push_front(c);
        if self.attempt(DekMove::ToLeft, pos + 1, need) {
            return true;
        }
        self.deque.pop_front();
        if !self.rules.single_end && !self.deque.is_empty() {
            self.deque.push_back(c);
            if self.attempt(DekMove::ToRight, pos + 1, need) {
                return true;
            }
            self.deque.pop_back();
        }
        false
    }
}

/// A winning move sequence from `state`, if the full deck order is known.
pub fn clairvoyant_solve(state: &DekState, rules: Rules) -> Result<Option<Vec<DekMove>>> {
    guard("clairvoyant DEK search", state.n(), MAX_CLAIRVOYANT)?;
    let mut solver = Clairvoyant {
        deck: &state.deck,
        n: state.n,
        rules,
        failed: HashSet::new(),
        deque: state.deque.iter().copied().collect(),
        path: Vec::new(),
    };
    Ok(solver.run(0, state.next_needed).then_some(solver.path))
}

/// Whether the shuffle can be won with full knowledge of the deck, and a
/// winning move sequence when it can.
pub fn clairvoyant_winnable(shuffle: &Permutation) -> Result<(bool, Option<Vec<DekMove>>)> {
    clairvoyant_winnable_with(shuffle, Rules::default())
}

pub fn clairvoyant_winnable_with(shuffle: &Permutation, rules: Rules) -> Result<(bool, Option<Vec<DekMove>>)> {
    let witness = clairvoyant_solve(&DekState::new_game(shuffle), rules)?;
    Ok((witness.is_some(), witness))
}

/// Number of winnable shuffles of `1..=n`, searched in parallel.
pub fn count_winnable(n: usize, rules: Rules) -> Result<u64> {
    guard("DEK shuffle enumeration", n, MAX_PROBABILITY)?;
    let chunk = 720u64;
    (0..factorial(n).div_ceil(chunk))
        .into_par_iter()
        .map(|c| -> Result<u64> {
            let mut wins = 0;
            for shuffle in permutation_range(n, c * chunk, (c + 1) * chunk)? {
                wins += u64::from(clairvoyant_winnable_with(&shuffle, rules)?.0);
            }
            Ok(wins)
        })
        .sum()
}

/// Fraction of shuffles of `1..=n` a clairvoyant player can win.
pub fn win_probability_clairvoyant(n: usize) -> Result<WinValue> {
    guard("win_probability_clairvoyant", n, MAX_PROBABILITY)?;
    Ok(WinValue::new(count_winnable(n, Rules::default())?, factorial(n)))
}

/// Expectimax over what a non-peeking player can see.
struct Policy {
    n: u32,
    memo: HashMap<(Vec<u8>, u32, u32), BigRational>,
}

impl Policy {
    fn new(n: u32) -> Self {
        Self {
            n,
            memo: HashMap::new(),
        }
    }

    fn unseen(&self, deque: &[u32], need: u32, top: Option<u32>) -> Vec<u32> {
        (need..=self.n)
            .filter(|c| !deque.contains(c) && Some(*c) != top)
            .collect()
    }

    /// Value once the top card is known (`None`: the deck is empty).
    fn value(&mut self, deque: &[u32], need: u32, top: Option<u32>) -> BigRational {
        if need == self.n + 1 {
            return BigRational::one();
        }
        let fwd: Vec<u8> = deque.iter().map(|&c| c as u8).collect();
        let rev: Vec<u8> = fwd.iter().rev().copied().collect();
        let key = (fwd.min(rev), need, top.unwrap_or(0));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let best = moves_from(top, deque, need)
            .into_iter()
            .map(|m| self.move_value(deque, need, top, m))
            .max()
            .unwrap_or_else(BigRational::zero);
        self.memo.insert(key, best.clone());
        best
    }

    fn move_value(&mut self, deque: &[u32], need: u32, top: Option<u32>, mv: DekMove) -> BigRational {
        let mut d = deque.to_vec();
        match mv {
            DekMove::PlayDeck => self.draw(deque, need + 1),
            DekMove::PlayLeft => {
                d.remove(0);
                self.value(&d, need + 1, top)
            }
            DekMove::PlayRight => {
                d.pop();
                self.value(&d, need + 1, top)
            }
            DekMove::ToLeft | DekMove::ToRight => {
                let c = top.expect("parking needs a deck card");
                if mv == DekMove::ToLeft {
                    d.insert(0, c);
                } else {
                    d.push(c);
                }
                self.draw(&d, need)
            }
        }
    }

    /// The old top card has left the deck; the next one is uniform over the
    /// unseen ranks.
    fn draw(&mut self, deque: &[u32], need: u32) -> BigRational {
        let unseen = self.unseen(deque, need, None);
        if unseen.is_empty() {
            return self.value(deque, need, None);
        }
        let total: BigRational = unseen
            .iter()
            .map(|&c| self.value(deque, need, Some(c)))
            .fold(BigRational::zero(), |a, b| a + b);
        total / BigRational::from_integer(BigInt::from(unseen.len()))
    }
}

/// Exact value of the best strategy that never looks below the top card.
pub fn optimal_policy_value(n: usize) -> Result<WinValue> {
    guard("optimal_policy_value", n, MAX_POLICY)?;
    let mut policy = Policy::new(n as u32);
    Ok(WinValue(policy.draw(&[], 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HintMode {
    Clairvoyant,
    Policy,
}

/// The best legal move and its value under `mode`. Ties go to the earliest
/// move in [`DekMove::ALL`].
pub fn hint(state: &DekState, mode: HintMode) -> Result<(DekMove, WinValue)> {
    let moves = state.legal_moves()?;
    if moves.is_empty() {
        return Err(Error::GameLost);
    }
    match mode {
        HintMode::Policy => hint_visible(&state.visible()),
        HintMode::Clairvoyant => {
            guard("clairvoyant hint", state.n(), MAX_CLAIRVOYANT)?;
            let mut best: Option<(DekMove, bool)> = None;
            for mv in moves {
                let next = state.apply_move(mv)?;
                let wins = next.is_won() || clairvoyant_solve(&next, Rules::default())?.is_some();
                if best.is_none_or(|(_, w)| wins && !w) {
                    best = Some((mv, wins));
                }
                if wins {
                    break;
                }
            }
            let (mv, wins) = best.expect("at least one legal move");
            Ok((mv, if wins { WinValue::one() } else { WinValue::zero() }))
        }
    }
}

/// Policy hint from the visible part of the state alone.
pub fn hint_visible(state: &VisibleState) -> Result<(DekMove, WinValue)> {
    let moves = state.legal_moves()?;
    if moves.is_empty() {
        return Err(Error::GameLost);
    }
    guard("policy hint", state.n as usize, MAX_POLICY_HINT)?;
    let mut policy = Policy::new(state.n);
    let mut best: Option<(DekMove, BigRational)> = None;
    for mv in moves {
        let v = policy.move_value(&state.deque, state.next_needed, state.deck_top, mv);
        if best.as_ref().is_none_or(|(_, b)| v > *b) {
            best = Some((mv, v));
        }
    }
    let (mv, v) = best.expect("at least one legal move");
    Ok((mv, WinValue(v)))
}
