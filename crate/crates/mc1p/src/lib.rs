//! Covering assembly hypergraphs by linear and circular walks.
//!
//! An assembly hypergraph couples a hypergraph with per-vertex multiplicities,
//! per-edge weights, and optional edge orders. An assembly is a set of linear
//! and/or circular vertex walks; it is valid when every edge appears as a
//! contiguous window of some walk and no vertex is used more often than its
//! multiplicity allows. This crate provides:
//!
//! - the data model and an independent compatibility checker ([`model`]),
//! - decision engines: consecutive-ones recognition for repeat-free inputs
//!   ([`c1p`]), degree conditions with walk extraction for adjacency graphs
//!   ([`adjacency`]), neighbor-choice enumeration for the general
//!   fixed-parameter case ([`fpt`]), and rewriting of ordered repeat-spanning
//!   intervals ([`spanning`]),
//! - edge-deletion optimizers: a capacitated max-weight subgraph solver
//!   ([`adjacency`]) and the triple contraction pipeline ([`triples`]),
//! - an exhaustive oracle that enumerates every canonical assembly at small
//!   scale and certifies all of the above ([`oracle`]),
//! - text formats and the marker-extremity encoding used by the CLI
//!   ([`formats`], [`extremities`]).

pub mod adjacency;
pub mod c1p;
pub mod extremities;
pub mod fixtures;
pub mod formats;
pub mod fpt;
pub mod generate;
pub mod model;
pub mod oracle;
pub mod spanning;
pub mod triples;
mod walks;

pub use model::{
    is_compatible, Assembly, AssemblyHypergraph, CompatibilityReport, Edge, HypergraphBuilder,
    Model, ModelError, Sequence, SequenceKind, Stats, Verdict, VertexId,
};

use thiserror::Error;

/// Errors shared by the decision and optimization engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("{engine}: precondition violated: {reason}")]
    PreconditionViolated { engine: &'static str, reason: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl EngineError {
    pub(crate) fn precondition(engine: &'static str, reason: impl Into<String>) -> Self {
        EngineError::PreconditionViolated {
            engine,
            reason: reason.into(),
        }
    }
}
