//! Exact Laplacian spectra of small graphs, with binary star constructions
//! and an exhaustive verification harness.

pub mod algebra;
pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BinaryStarParams, Graph, Variant};
