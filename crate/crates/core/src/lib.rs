//! Construction and certification of bent Boolean functions by
//! 4-concatenation of Maiorana-McFarland pieces.
//!
//! The crate provides bit-packed truth tables with the Walsh-Hadamard
//! and Moebius transforms ([`boolfn`]), GF(2^m) arithmetic ([`gf2m`]),
//! vectorial maps and their structural properties ([`perm`]), vanishing
//! subspace search and completed-class membership ([`subspace`]), the
//! concatenation constructions ([`construct`]), text formats
//! ([`textio`]) and a JSON-lines result catalog ([`catalog`]).
//!
//! Everything is immutable after construction and safe to share across
//! threads; all operations are pure.

pub mod boolfn;
pub mod catalog;
pub mod construct;
pub mod gf2m;
pub mod perm;
pub mod subspace;
pub mod textio;

mod error;

pub use error::{Error, Result};
