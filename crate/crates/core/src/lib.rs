//! Weak unit interval and weak unit disk representations of graphs whose
//! edges are labeled near or far.
//!
//! A representation places every vertex at a point so that, for each edge,
//! the endpoints are within the diameter `d` exactly when the edge is near.
//! Non-adjacent pairs are unconstrained.

pub mod construct;
pub mod contraction;
pub mod cube;
pub mod density;
pub mod disk;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod io;
pub mod outerplanar;
pub mod planarity;
pub mod rational;
pub mod search;
pub mod svg;
pub mod report;
pub mod work;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeLabel, LabeledGraph};
pub use rational::Q;
