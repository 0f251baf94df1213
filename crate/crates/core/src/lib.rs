//! Word labelled oriented graph (WLOG) presentations of Bestvina–Brady and
//! Artin groups, their Schur and Bogomolov multipliers, and exact integer
//! oracles that check every rank claim.

pub mod artin;
pub mod bb;
pub mod error;
pub mod graph;
pub mod homology;
pub mod wlog;
pub mod word;

pub use error::{Error, Result};
