//! Braid-word machinery and a compiler from torus-covering-charts to
//! surface-link chart movies of twice the degree.
//!
//! The pipeline is: a [`chart::TorusCoveringChart`] (degree `m`, commuting
//! boundary braids `a`, `b`) is compiled by [`compile::compile`] into a
//! [`chart::ChartMovie`] of degree `2m`. Every isotopy step of the movie is
//! certified by the braid word-problem solver in [`braid`], and
//! [`chart`] / [`invariants`] read topological data off the result.

pub mod braid;
pub mod chart;
pub mod compile;
pub mod error;
pub mod invariants;
mod union_find;

pub use error::{Error, ParseError, Result};
