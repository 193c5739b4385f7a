//! Temporal graph data model.
//!
//! A [`TemporalGraph`] is an immutable set of timestamped directed edges over
//! compacted node ids `1..=n` and timestamp indices `1..=T`, built from
//! whitespace-separated edge-list text. It offers cumulative snapshot views
//! for static statistics and windowed temporal neighborhood queries.

mod error;
mod graph;
mod neighborhood;
mod parse;
pub mod rng;
mod snapshot;

pub use error::GraphError;
pub use graph::{NodeId, TemporalEdge, TemporalGraph, TemporalNode, TimestampId};
pub use neighborhood::NeighborhoodParams;
pub use snapshot::StaticSnapshot;
