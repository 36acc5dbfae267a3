use std::fmt::Debug;

use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;

/// A message body together with its declared size in bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Payload<M> {
    pub msg: M,
    pub bits: u32,
}

impl<M> Payload<M> {
    pub fn new(msg: M, bits: u32) -> Self {
        Payload { msg, bits }
    }
}

/// What a node sends in one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outbox<M> {
    Silent,
    /// The same payload to all `n − 1` other nodes.
    Broadcast(Payload<M>),
    /// At most one payload per destination; never to the sender itself.
    Unicast(Vec<(VertexId, Payload<M>)>),
}

/// The result of one `step`: an outbox and whether the node halts after
/// sending it. A halted node is never stepped again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<M> {
    pub out: Outbox<M>,
    pub halt: bool,
}

impl<M> Step<M> {
    pub fn silent() -> Self {
        Step {
            out: Outbox::Silent,
            halt: false,
        }
    }

    pub fn halt() -> Self {
        Step {
            out: Outbox::Silent,
            halt: true,
        }
    }

    pub fn broadcast(msg: M, bits: u32) -> Self {
        Step {
            out: Outbox::Broadcast(Payload::new(msg, bits)),
            halt: false,
        }
    }

    pub fn unicast(msgs: Vec<(VertexId, Payload<M>)>) -> Self {
        let out = if msgs.is_empty() {
            Outbox::Silent
        } else {
            Outbox::Unicast(msgs)
        };
        Step { out, halt: false }
    }

    pub fn and_halt(mut self) -> Self {
        self.halt = true;
        self
    }

    pub fn halt_if(mut self, cond: bool) -> Self {
        self.halt |= cond;
        self
    }
}

/// A delivered message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope<M> {
    pub src: VertexId,
    pub payload: Payload<M>,
}

/// Messages delivered to one node at the start of a round: everything
/// broadcast by other nodes plus everything unicast to it in the previous
/// round. Both parts are ordered by sender id.
pub struct Inbox<'a, M> {
    pub(crate) me: VertexId,
    pub(crate) broadcast: &'a [Envelope<M>],
    pub(crate) direct: &'a [Envelope<M>],
}

impl<'a, M> Inbox<'a, M> {
    /// A standalone inbox, mainly for unit-testing programs.
    pub fn new(me: VertexId, broadcast: &'a [Envelope<M>], direct: &'a [Envelope<M>]) -> Self {
        Inbox {
            me,
            broadcast,
            direct,
        }
    }

    /// Broadcasts from other nodes, by sender.
    pub fn broadcasts(&self) -> impl Iterator<Item = (VertexId, &'a M)> + '_ {
        let me = self.me;
        self.broadcast
            .iter()
            .filter(move |e| e.src != me)
            .map(|e| (e.src, &e.payload.msg))
    }

    /// Unicasts addressed to this node, by sender.
    pub fn direct(&self) -> impl Iterator<Item = (VertexId, &'a M)> + '_ {
        self.direct.iter().map(|e| (e.src, &e.payload.msg))
    }

    /// All delivered envelopes: broadcasts first, then unicasts.
    pub fn iter(&self) -> impl Iterator<Item = &'a Envelope<M>> + '_ {
        let me = self.me;
        self.broadcast
            .iter()
            .filter(move |e| e.src != me)
            .chain(self.direct.iter())
    }

    pub fn len(&self) -> usize {
        let own = self
            .broadcast
            .binary_search_by(|e| e.src.cmp(&self.me))
            .is_ok() as usize;
        self.broadcast.len() - own + self.direct.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// What a node knows when it starts.
#[derive(Debug, Clone, Copy)]
pub struct NodeInit<'a> {
    pub id: VertexId,
    pub n: usize,
    /// Incident input-graph edges, sorted by neighbor.
    pub edges: &'a [Incident],
}

/// A per-vertex round-synchronous program.
///
/// The engine calls `init` once per node, then `step` once per round until
/// the node halts, and finally `output`. Randomness passed to `init` and
/// `step` is derived from `(seed, node, round)` only.
pub trait NodeProgram {
    type State;
    type Msg: Clone;
    type Output: Clone + PartialEq + Debug;

    fn init(&self, node: NodeInit<'_>, rng: &mut SimRng) -> Self::State;

    fn step(
        &self,
        state: &mut Self::State,
        round: usize,
        inbox: &Inbox<'_, Self::Msg>,
        rng: &mut SimRng,
    ) -> Step<Self::Msg>;

    fn output(&self, state: &Self::State) -> Self::Output;

    /// Round budget used when the caller does not supply one.
    fn round_budget(&self, n: usize) -> usize {
        4 * n + 64
    }
}
