//! Squares with bands: an engine for ribbon surfaces drawn as a square
//! with bands glued to its right edge, and for the diagram category they
//! span.
//!
//! The crate is layered bottom-up:
//!
//! * [`graph`] ordered graphs, contraction and degree-two classification;
//! * [`chord`] twisted chord diagrams, slides, surface types;
//! * [`swb`] frames, curve systems, juxtaposition, isotopy and handle slides;
//! * [`category`] polynomial scalars and formal linear combinations of
//!   data with composition, tensor product and duality.

pub mod acceptance;
pub mod category;
pub mod chord;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod swb;

pub use error::{Result, SwbError};
