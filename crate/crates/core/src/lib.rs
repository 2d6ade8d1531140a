//! Monochromatic clique decompositions of edge-coloured graphs.

pub mod cliques;
pub mod colouring;
pub mod construct;
pub mod decomposition;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod graph6;
pub mod krivelevich;
pub mod lp;
pub mod packing;
pub mod ramsey;
pub mod report;

pub use error::{Error, Result};
