//! Permutations obtainable with stacks, queues and sets, the lattice paths
//! that record how those containers fill and drain, and the DEK solitaire
//! game played with a deque.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: permutations in one-line notation, pattern containment and the
//!   312/321 avoidance predicates used as closed-form oracles everywhere else.
//! - [`machines`]: greedy/lazy realization of a target permutation with a
//!   single stack, queue or set, producing canonical operation traces.
//! - [`dyck`]: Dyck, weak Dyck and peakless weak Dyck paths, peak removal,
//!   cycle-lemma counting, path decoders and the Knuth–Richards bijection
//!   together with the `stackit`/`queueit` projections.
//! - [`enumerate`]: exhaustive iteration over `S_n` and a memoised search
//!   deciding obtainability with one or two parallel containers.
//! - [`dek`]: rules engine and exact solvers for the DEK solitaire game.
//!
//! Sizes are deliberately desk scale; every exhaustive routine carries an
//! explicit guard on `n` and reports [`Error::Guard`] when it is exceeded.

pub mod dek;
pub mod dyck;
pub mod enumerate;
mod error;
pub mod machines;
pub mod perm;

pub use dek::{DekMove, DekState, HintMode, VisibleState, WinValue};
pub use dyck::{BallotSequence, LatticePath, PathClass, Step};
pub use enumerate::{ContainerKind, CountTable, MachineConfig};
pub use error::{Error, Result};
pub use machines::{MachineOp, MachineTrace, OpKind, Unrealizable};
pub use perm::{Decomposition, Permutation};
