//! Spectral sufficient conditions for spanning trees with few leaves or
//! small maximum degree.
//!
//! The crate bundles the graph primitives these conditions are phrased
//! in (complements, joins, vertex connectivity, graph6), certified
//! spectral radii, degree-sum closures, exact spanning-tree oracles, the
//! extremal families, theorem evaluators, and an exhaustive/randomised
//! verification harness.

pub mod closure;
pub mod conditions;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;

/// Serialise a [`Graph`] as its graph6 string.
pub mod serde_graph6 {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::{decode_graph6, encode_graph6, Graph};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        decode_graph6(&text).map_err(serde::de::Error::custom)
    }
}
