//! Jones polynomials from Goeritz matrices and HOMFLY-PT polynomials of
//! bipartite links from quadruple Goeritz matrices.
//!
//! All arithmetic is exact. The [`diagrams`] module provides brute-force
//! state sums that serve as independent oracles for the matrix algorithms.

pub mod bipartite;
pub mod diagrams;
pub mod error;
pub mod families;
pub mod goeritz;
pub mod polyring;

pub use error::{Error, Result};
