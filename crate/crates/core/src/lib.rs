//! Computational toolkit for finite skew braces.
//!
//! Groups and braces are stored as dense Cayley tables over `0..n`. On top of
//! that sit ideals and star products, weak triviality and the subdirect
//! (Goursat) picture, the left/right/strong/derived series, the primeness
//! predicates and the Yang–Baxter solution attached to a brace.

pub mod brace;
pub mod catalog;
pub mod error;
pub mod group;
pub mod groups;
pub mod ideals;
mod iso;
pub mod primeness;
pub mod properties;
pub mod radical;
pub mod report;
pub mod set;
pub mod structure;
pub mod ybe;

pub use brace::{BraceMorphism, SkewBrace};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupHom};
pub use set::ElementSet;
