//! Holonomy maps on ℝⁿ with values in small matrix Lie groups: evaluation by line
//! integrals or parallel transport, checks of the loop-space axioms, and recovery of the
//! gauge potential and connection form from a holonomy map alone.

pub mod error;
pub mod holonomy;
pub mod lie;
pub mod output;
pub mod par;
pub mod path;
pub mod presets;
pub mod reconstruction;

pub use error::{Error, Result};
