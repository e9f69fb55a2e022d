//! Slope invariants of the upper and lower tunnels of (1,1)-knots.
//!
//! A (1,1)-position of a knot is described by an element of the reduced
//! torus braid group, written as a word in `δm`, `δℓ` and `σ`
//! ([`braid::BraidWord`]). The upper tunnel of that position is produced
//! from the trivial tunnel by a unique sequence of cabling constructions,
//! and the slopes of those cablings (`[m0], m1, ..., md`, see
//! [`slopes::SlopeSequence`]) form a complete invariant of the tunnel.
//!
//! This crate converts in both directions:
//!
//! * [`slopes::upper_slopes`] / [`slopes::lower_slopes`] read the slope
//!   sequence off a braid word,
//! * [`slopes::braid_from_slopes`] builds a braid word whose upper tunnel
//!   has a prescribed slope sequence,
//!
//! and provides closed forms for the tunnels of 2-bridge knots and torus
//! knots in [`families`]. All arithmetic is exact.
//!
//! ```
//! use tunnel_slopes::{braid::BraidWord, slopes};
//!
//! let w: BraidWord = "m -1 s -1 l 1 m -1 s 3 l -1".parse().unwrap();
//! assert_eq!(slopes::upper_slopes(&w).to_string(), "[ 3/7 ], 7/2");
//! assert_eq!(slopes::lower_slopes(&w).to_string(), "[ 2/3 ], 1/3");
//! ```

pub mod arith;
pub mod braid;
pub mod cli;
mod error;
pub mod families;
pub mod slopes;
pub mod verify;

pub use error::{Error, Result};
