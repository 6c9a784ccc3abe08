//! Generator-and-relation presentations of torus-equivariant and ordinary
//! cohomology rings of iterated flag bundles, verified against independent
//! combinatorial oracles.

pub mod error;
pub mod groebner;
pub mod rootdata;
pub mod tower;
pub mod poly;

pub use error::{Error, Result};
