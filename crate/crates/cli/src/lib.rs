//! Rendering and serialization for the `powergen` binary, split out as a
//! library so integration tests can parse the emitted JSON with the same
//! types that produced it.

pub mod json;
pub mod render;
