//! Synthesis and verification of variable-length constrained encoders, ordinary and
//! parity-preserving, from labeled-graph presentations of a constraint.
//!
//! All feasibility decisions use exact integer or rational arithmetic; floating point
//! only appears in reported capacities.

pub mod aev;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod io;
pub mod kraft;
pub mod spectral;
pub mod synth;
pub mod tagging;

pub use error::{Error, Result};
