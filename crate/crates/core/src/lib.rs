//! Weierstrass semigroups of curves in positive characteristic.
//!
//! The crate works entirely at the level of integers: numerical semigroups and
//! their gap sets, closed-formula gap sequences for Artin–Schreier covers and
//! cyclic `p^n` covers of the projective line, jump detection along a
//! pole-number sequence, and consistency checks relating gaps to Hasse–Witt
//! ranks and maximal curves over finite fields.
//!
//! Everything is exact. Sizes that drive table allocations are bounded by a
//! [`SizeGuard`], and all intermediate arithmetic is checked.

pub mod arith;
pub mod boseck;
pub mod covers;
pub mod error;
pub mod filtration;
pub mod invariants;
pub mod report;
pub mod semigroup;

pub use arith::SizeGuard;
pub use boseck::{BoseckTable, CyclicCoverSpec, RamifiedPlace};
pub use covers::{ArtinSchreierCover, CyclicSemigroup, Exactness, LewittesGaps};
pub use error::{Error, Result};
pub use filtration::FiltrationReport;
pub use semigroup::{GapSet, NumericalSemigroup};
