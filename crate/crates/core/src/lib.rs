//! Baumslag-Solitar groups `BS(m,n) = <a, t | t a^m t^-1 = a^n>` and the
//! scale theory of their totally disconnected completions.
//!
//! - [`group`]: words, Britton reduction, normal forms, conjugacy
//!   normalization and the `|m| = 1` matrix model.
//! - [`graph`]: the lazily explored intersection graphs whose nodes are
//!   cyclic subgroups `<a^x>`.
//! - [`invariants`]: scale, modular function, flat rank, Möller sequences,
//!   orbit orders and local-structure reports.
//! - [`coset`]: brute-force oracles on finite balls of the Bass-Serre tree.

pub mod coset;
pub mod error;
pub mod graph;
pub mod group;
pub mod invariants;

pub use error::{Error, Result};
pub use group::{parse_word, GroupParams, Sign, Word};
