//! Fractional partial colorings and full ±1 colorings for lp-to-lq vector
//! balancing, via Euclidean projection of a Gaussian sample onto the
//! intersection of a discrepancy body, a cube and an optional subspace.
//!
//! The crate is organized as:
//! - [`core`]: domain types, norm arithmetic and closed-form bound expressions
//! - [`proj`]: exact and iterative projections onto the feasible set
//! - [`coloring`]: the partial-coloring round and the full-coloring loop
//! - [`instances`]: instance generators and brute-force oracles
//! - [`measure`]: exact and Monte Carlo Gaussian-measure evaluation
//! - [`cli`]: command-line entry points, file formats and reports

pub mod cli;
pub mod coloring;
pub mod core;
pub mod error;
pub mod instances;
pub mod measure;
pub mod proj;

pub use error::{Error, Result};
