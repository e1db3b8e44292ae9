use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("coloring does not match the edge set: {0}")]
    ColoringDomain(String),
    #[error("invalid tooth function: {0}")]
    InvalidToothFn(String),
    #[error("tooth index must be at least 1, got {0}")]
    ToothIndex(u64),
    #[error("comb is a ray (every tooth has order 1)")]
    CombIsRay,
    #[error("translation by {shift} fails at n = {n}: tooth {left} > {right}")]
    TranslationViolated {
        shift: u64,
        n: u64,
        left: u64,
        right: u64,
    },
    #[error("invalid symbolic graph: {0}")]
    InvalidSymbolic(String),
    #[error("hub graphs are truncated with hub_truncate")]
    HubTruncation,
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    #[error("invalid hub graph: {0}")]
    InvalidHubGraph(String),
    #[error("hub graph is not a member of its family: {0}")]
    NotFamilyMember(String),
    #[error("too many hubs: {hubs} >= {n}")]
    TooManyHubs { hubs: usize, n: usize },
    #[error("blue {} found", matching_name(.0.len()))]
    BlueMatching(Vec<Edge>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("embedding check failed: {0}")]
    InvalidEmbedding(String),
    #[error("parse error: {0}")]
    Parse(String),
}

fn matching_name(n: usize) -> String {
    format!("{n}K2")
}
