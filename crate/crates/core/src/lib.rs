//! Recognition, augmentation and exact segment drawing for linear outerplanar
//! graphs: decide whether an outerplanar graph embeds in a biconnected
//! outerpath, construct such an outerpath, draw it as axis-parallel segments
//! with exact rational coordinates, and verify everything independently,
//! including brute-force oracles for small instances.

pub mod atfree;
pub mod augment;
pub mod drawing;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod graph;
pub mod linearity;
pub mod oracle;
pub mod outerplanar;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
