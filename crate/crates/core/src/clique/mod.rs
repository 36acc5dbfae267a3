//! The clique model: every vertex of the input graph runs the same
//! round-synchronous program and may address any other vertex.
//!
//! Round `r` outboxes are computed from the messages sent in round `r − 1`.
//! Every message is recorded in a [`CliqueTrace`], which is later priced in
//! k-machine rounds by [`crate::kmachine`].

mod engine;
mod program;
mod trace;

pub use engine::{payload_cap, run_clique, CliqueError, CliqueRun, PAYLOAD_FACTOR};
pub use program::{Envelope, Inbox, NodeInit, NodeProgram, Outbox, Payload, Step};
pub use trace::{CliqueMetrics, CliqueTrace, Dest, TraceMessage};
