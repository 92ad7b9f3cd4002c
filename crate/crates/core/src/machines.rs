//! Single-container machines: the input stream `1, 2, ..., n` is routed
//! through a stack, a queue or a set (or straight across) to produce a target
//! output permutation.
//!
//! Every realization here follows the same lazy policy. Values are taken
//! from the input only when the next wanted output is still in the input;
//! then everything in front of it goes into the container and the wanted
//! value itself is transferred directly (or, for pure push/pop stacks,
//! pushed and popped). A wanted value that is already stored must be at the
//! container's exit. The resulting trace is canonical: it never emits a
//! value right after moving it in.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::dyck::{LatticePath, Step};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OpKind {
    /// Input front into the container.
    MoveIn,
    /// Container exit to the output.
    Emit,
    /// Input front straight to the output.
    Xfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MachineOp {
    pub kind: OpKind,
    pub value: u32,
}

impl MachineOp {
    pub fn new(kind: OpKind, value: u32) -> Self {
        Self { kind, value }
    }
}

/// The storage used by a single-container trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Container {
    Stack,
    Queue,
    /// Any stored value can be retrieved.
    Set,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MachineTrace {
    pub ops: Vec<MachineOp>,
    pub container: Container,
    pub output: Permutation,
    /// Container size after each op.
    pub heights: Vec<usize>,
}

/// Why a permutation cannot be produced: three output values, in output
/// order, forming the forbidden pattern (312 for a stack, 321 for a queue).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Unrealizable {
    pub container: Container,
    pub witness: [u32; 3],
}

impl fmt::Display for Unrealizable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.witness;
        match self.container {
            Container::Stack => write!(
                f,
                "not stackable: {a} is output first, then {b} is blocked by {c} on the stack"
            ),
            Container::Queue => write!(
                f,
                "not queueable: {a} was needed first, then {b} is stuck behind {c} in the queue"
            ),
            Container::Set => write!(f, "a set realizes every permutation"),
        }
    }
}

impl std::error::Error for Unrealizable {}

impl From<Unrealizable> for Error {
    fn from(u: Unrealizable) -> Self {
        let class = match u.container {
            Container::Stack => "312-avoiding",
            Container::Queue => "321-avoiding",
            Container::Set => "realizable",
        };
        Error::NotInClass {
            class,
            witness: u.witness,
        }
    }
}

/// Greedy stack realization. With `allow_xfer` the wanted value is passed
/// straight across instead of being pushed and immediately popped.
pub fn realize_with_stack(p: &Permutation, allow_xfer: bool) -> std::result::Result<MachineTrace, Unrealizable> {
    realize(p, Container::Stack, allow_xfer)
}

/// Lazy queue realization (direct transfers always allowed). The transferred
/// values are exactly the record-setters of `p`.
pub fn realize_with_queue(p: &Permutation) -> std::result::Result<MachineTrace, Unrealizable> {
    realize(p, Container::Queue, true)
}

/// Lazy set realization; succeeds for every permutation.
pub fn realize_with_set(p: &Permutation) -> MachineTrace {
    realize(p, Container::Set, true).expect("a set can produce any permutation")
}

fn realize(p: &Permutation, container: Container, allow_xfer: bool) -> std::result::Result<MachineTrace, Unrealizable> {
    let n = p.len();
    let mut ops = Vec::with_capacity(2 * n);
    let mut heights = Vec::with_capacity(2 * n);
    // Stored values in entry order; the exit is the back for a stack and the
    // front for a queue.
    let mut store: VecDeque<u32> = VecDeque::with_capacity(n);
    // The output value whose retrieval forced each stored value in.
    let mut moved_for = vec![0u32; n + 1];
    let mut next_input = 1u32;

    for &want in p.as_slice() {
        if want >= next_input {
            for v in next_input..want {
                store.push_back(v);
                moved_for[v as usize] = want;
                ops.push(MachineOp::new(OpKind::MoveIn, v));
                heights.push(store.len());
            }
            if allow_xfer {
                ops.push(MachineOp::new(OpKind::Xfer, want));
                heights.push(store.len());
            } else {
                ops.push(MachineOp::new(OpKind::MoveIn, want));
                heights.push(store.len() + 1);
                ops.push(MachineOp::new(OpKind::Emit, want));
                heights.push(store.len());
            }
            next_input = want + 1;
            continue;
        }
        match container {
            Container::Stack => {
                let top = *store.back().expect("wanted value is stored");
                if top != want {
                    return Err(Unrealizable {
                        container,
                        witness: [moved_for[top as usize], want, top],
                    });
                }
                store.pop_back();
            }
            Container::Queue => {
                let head = *store.front().expect("wanted value is stored");
                if head != want {
                    return Err(Unrealizable {
                        container,
                        witness: [moved_for[want as usize], want, head],
                    });
                }
                store.pop_front();
            }
            Container::Set => {
                let at = store.iter().position(|&v| v == want).expect("wanted value is stored");
                store.remove(at);
            }
        }
        ops.push(MachineOp::new(OpKind::Emit, want));
        heights.push(store.len());
    }

    Ok(MachineTrace {
        ops,
        container,
        output: p.clone(),
        heights,
    })
}

impl MachineTrace {
    /// Replays `ops` against `container` with input `1, 2, ..., n`, checking
    /// legality at every step, and rebuilds the trace. For a set, an emit may
    /// take any stored value.
    pub fn replay(container: Container, ops: Vec<MachineOp>) -> Result<MachineTrace> {
        let n = ops.iter().filter(|op| op.kind != OpKind::Emit).count();
        let bad = |step: usize, reason: String| Error::InvalidTrace { step, reason };
        let mut store: VecDeque<u32> = VecDeque::new();
        let mut output = Vec::with_capacity(n);
        let mut heights = Vec::with_capacity(ops.len());
        let mut next_input = 1u32;
        for (step, op) in ops.iter().enumerate() {
            match op.kind {
                OpKind::MoveIn | OpKind::Xfer => {
                    if op.value != next_input {
                        return Err(bad(step, format!("input front is {next_input}, not {}", op.value)));
                    }
                    next_input += 1;
                    if op.kind == OpKind::MoveIn {
                        store.push_back(op.value);
                    } else {
                        output.push(op.value);
                    }
                }
                OpKind::Emit => {
                    let exit = match container {
                        Container::Stack => store.back().copied(),
                        Container::Queue => store.front().copied(),
                        Container::Set => store.contains(&op.value).then_some(op.value),
                    };
                    if exit != Some(op.value) {
                        return Err(bad(step, format!("{} cannot leave the {container:?}", op.value)));
                    }
                    match container {
                        Container::Stack => {
                            store.pop_back();
                        }
                        Container::Queue => {
                            store.pop_front();
                        }
                        Container::Set => store.retain(|&v| v != op.value),
                    }
                    output.push(op.value);
                }
            }
            heights.push(store.len());
        }
        if !store.is_empty() {
            return Err(bad(ops.len(), format!("{} values left in the container", store.len())));
        }
        let output = Permutation::new(output).map_err(|e| bad(ops.len(), e.to_string()))?;
        Ok(MachineTrace {
            ops,
            container,
            output,
            heights,
        })
    }

    /// MOVE_IN → U, EMIT → D, XFER → H.
    pub fn height_profile(&self) -> LatticePath {
        self.ops
            .iter()
            .map(|op| match op.kind {
                OpKind::MoveIn => Step::U,
                OpKind::Emit => Step::D,
                OpKind::Xfer => Step::H,
            })
            .collect()
    }

    /// Total number of ops each value spends in the container.
    pub fn storage_cost(&self) -> usize {
        let n = self.output.len();
        let mut entered = vec![0usize; n + 1];
        let mut cost = 0;
        for (t, op) in self.ops.iter().enumerate() {
            match op.kind {
                OpKind::MoveIn => entered[op.value as usize] = t,
                OpKind::Emit => cost += t - entered[op.value as usize],
                OpKind::Xfer => {}
            }
        }
        cost
    }

    /// Values passed straight from input to output.
    pub fn transferred(&self) -> Vec<u32> {
        self.ops
            .iter()
            .filter(|op| op.kind == OpKind::Xfer)
            .map(|op| op.value)
            .collect()
    }
}

/// `IN v` / `OUT v` / `XFER v`, one per line, then the heights.
impl fmt::Display for MachineTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            let tag = match op.kind {
                OpKind::MoveIn => "IN",
                OpKind::Emit => "OUT",
                OpKind::Xfer => "XFER",
            };
            writeln!(f, "{tag} {}", op.value)?;
        }
        let heights: Vec<String> = self.heights.iter().map(usize::to_string).collect();
        write!(f, "{}", heights.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use OpKind::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ops(list: &[(OpKind, u32)]) -> Vec<MachineOp> {
        list.iter().map(|&(k, v)| MachineOp::new(k, v)).collect()
    }

    #[test]
    fn stack_push_pop_table() {
        let t = realize_with_stack(&p("2,1,5,7,6,4,3"), false).unwrap();
        let expected = ops(&[
            (MoveIn, 1),
            (MoveIn, 2),
            (Emit, 2),
            (Emit, 1),
            (MoveIn, 3),
            (MoveIn, 4),
            (MoveIn, 5),
            (Emit, 5),
            (MoveIn, 6),
            (MoveIn, 7),
            (Emit, 7),
            (Emit, 6),
            (Emit, 4),
            (Emit, 3),
        ]);
        assert_eq!(t.ops, expected);
        assert_eq!(t.heights.last(), Some(&0));
        assert_eq!(t.height_profile().to_string(), "UUDDUUUDUUDDDD");
    }

    #[test]
    fn stack_with_transfers() {
        let t = realize_with_stack(&p("2,1,5,7,6,4,3"), true).unwrap();
        let expected = ops(&[
            (MoveIn, 1),
            (Xfer, 2),
            (Emit, 1),
            (MoveIn, 3),
            (MoveIn, 4),
            (Xfer, 5),
            (MoveIn, 6),
            (Xfer, 7),
            (Emit, 6),
            (Emit, 4),
            (Emit, 3),
        ]);
        assert_eq!(t.ops, expected);
        assert_eq!(t.heights, vec![1, 1, 0, 1, 2, 2, 3, 3, 2, 1, 0]);
        assert_eq!(t.height_profile().to_string(), "UHDUUHUHDDD");
    }

    #[test]
    fn stack_failure_reports_312_witness() {
        for xfer in [false, true] {
            let err = realize_with_stack(&p("3,1,2"), xfer).unwrap_err();
            assert_eq!(err.witness, [3, 1, 2]);
        }
        let err = realize_with_stack(&p("4,1,3,2,5"), true).unwrap_err();
        let w = err.witness;
        assert!(w[1] < w[2] && w[2] < w[0], "{w:?}");
    }

    #[test]
    fn queue_table() {
        let t = realize_with_queue(&p("2,1,5,7,3,4,6")).unwrap();
        let expected = ops(&[
            (MoveIn, 1),
            (Xfer, 2),
            (Emit, 1),
            (MoveIn, 3),
            (MoveIn, 4),
            (Xfer, 5),
            (MoveIn, 6),
            (Xfer, 7),
            (Emit, 3),
            (Emit, 4),
            (Emit, 6),
        ]);
        assert_eq!(t.ops, expected);
        assert_eq!(t.heights, vec![1, 1, 0, 1, 2, 2, 3, 3, 2, 1, 0]);
        assert_eq!(t.transferred(), vec![2, 5, 7]);
    }

    #[test]
    fn queue_failure_reports_321_witness() {
        let err = realize_with_queue(&p("3,2,1")).unwrap_err();
        assert_eq!(err.witness, [3, 2, 1]);
        assert_eq!(err.container, Container::Queue);
    }

    #[test]
    fn identity_is_all_transfers() {
        let id = Permutation::identity(5);
        let t = realize_with_queue(&id).unwrap();
        assert!(t.ops.iter().all(|op| op.kind == Xfer));
        assert!(t.heights.iter().all(|&h| h == 0));
        assert_eq!(t.height_profile().to_string(), "HHHHH");
        assert_eq!(t.storage_cost(), 0);
    }

    #[test]
    fn set_realization() {
        let t = realize_with_set(&p("3,1,2"));
        assert_eq!(
            t.ops,
            ops(&[(MoveIn, 1), (MoveIn, 2), (Xfer, 3), (Emit, 1), (Emit, 2)])
        );
        assert_eq!(t.heights, vec![1, 2, 2, 1, 0]);
        assert_eq!(t.storage_cost(), 6);

        let id = realize_with_set(&p("1,2,3"));
        assert_eq!(id.heights, vec![0, 0, 0]);
        assert_eq!(id.transferred(), vec![1, 2, 3]);

        let s = realize_with_set(&p("2,1,5,7,6,4,3"));
        let k = realize_with_stack(&p("2,1,5,7,6,4,3"), true).unwrap();
        assert_eq!(s.height_profile(), k.height_profile());
        assert_eq!(s.heights, k.heights);
    }

    #[test]
    fn empty_permutation() {
        let e = Permutation::identity(0);
        assert!(realize_with_stack(&e, false).unwrap().ops.is_empty());
        assert!(realize_with_queue(&e).unwrap().ops.is_empty());
        assert!(realize_with_set(&e).heights.is_empty());
    }

    #[test]
    fn replay_rejects_illegal_traces() {
        assert!(matches!(
            MachineTrace::replay(Container::Stack, ops(&[(MoveIn, 2)])),
            Err(Error::InvalidTrace { step: 0, .. })
        ));
        let fifo_violation = ops(&[(MoveIn, 1), (MoveIn, 2), (Emit, 2), (Emit, 1)]);
        assert!(MachineTrace::replay(Container::Queue, fifo_violation.clone()).is_err());
        assert_eq!(
            MachineTrace::replay(Container::Stack, fifo_violation).unwrap().output,
            p("2,1")
        );
        assert!(MachineTrace::replay(Container::Set, ops(&[(MoveIn, 1)])).is_err());
    }

    #[test]
    fn rendering() {
        let t = realize_with_set(&p("2,1"));
        assert_eq!(t.to_string(), "IN 1\nXFER 2\nOUT 1\n1,1,0");
    }
}
