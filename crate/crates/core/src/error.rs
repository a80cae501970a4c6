use thiserror::Error;

use crate::quiver::{ArrowId, VertexId};

/// Errors raised by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown arrow {0}")]
    UnknownArrow(ArrowId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("empty arrow sequence is not a cycle")]
    EmptyCycle,
    #[error("arrows {first} and {second} do not chain (target of the first is not the source of the second)")]
    NotChaining { first: ArrowId, second: ArrowId },
    #[error("walk step {position} does not start where the previous step ended")]
    BrokenWalk { position: usize },
    #[error("quiver is not connected ({components} components)")]
    Disconnected { components: usize },
    #[error("{0} is not a cut")]
    NotACut(String),
    #[error("vertex {0} is not a strict source of the cut")]
    NotStrictSource(VertexId),
    #[error("vertex {0} is not a strict sink of the cut")]
    NotStrictSink(VertexId),
    #[error("invalid Dynkin data: {0}")]
    Dynkin(String),
    #[error("quiver with cycles was not produced by the tensor construction")]
    NotATensor,
    #[error("inconsistent split counts among doubly-extended vertices: {0} and {1}")]
    InconsistentSplit(u32, u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
