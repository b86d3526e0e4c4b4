//! Survivability of planar networks under randomly placed large-scale
//! disasters, modelled as random half-planes or strips.

pub mod error;
pub mod geometry;
pub mod network;

pub use error::{Error, Result};
pub mod cli;
pub mod generator;
pub mod montecarlo;
pub mod planner;
pub mod survivability;
