//! Combinatorics of Borel orbits on square-zero strictly upper-triangular
//! matrices.
//!
//! Orbits are labelled by involutions of the symmetric group, drawn as link
//! patterns: `n` points on a line, one arc per 2-cycle. Everything here is
//! phrased in those terms:
//!
//! * [`patterns`]: involutions, their crossing and nesting statistics, and
//!   the orbit dimension (two independent formulas).
//! * [`order`]: rank matrices, the closure order, cover relations and the
//!   orbit poset.
//! * [`tableaux`]: two-column standard Young tableaux and the maximal orbits
//!   they label.
//! * [`meanders`]: superpositions of two link patterns and the intersection
//!   theory of orbit closures.
//! * [`verify`]: exhaustive small-`n` consistency checks between the
//!   combinatorial rules and brute-force computations.
//!
//! Points are 1-based everywhere, including serialized output.

#![forbid(unsafe_code)]

pub mod error;
pub mod meanders;
pub mod order;
pub mod patterns;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use meanders::{IntersectionReport, Meander, MeanderClass};
pub use order::{CoverSet, MoveKind, OrbitPoset, RankMatrix};
pub use patterns::{Involution, PatternStats, ZeroOneMatrix, DEFAULT_CAP};
pub use tableaux::TwoColumnTableau;

/// Library version, used to key cached artifacts.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
