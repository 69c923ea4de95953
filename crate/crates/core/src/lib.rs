//! Dirac cohomology of unitary modules of the graded affine Hecke algebra of `gl(n)`.
//!
//! The crate has two halves that are checked against each other:
//!
//! * closed forms: [`partition`], [`symfunc`], [`spin`], [`unitary`] and
//!   [`cohomology`] classify unitary modules and predict their Dirac
//!   cohomology as a representation of the pin cover `S̃_n`;
//! * [`oracle`]: explicit exact matrices over `Q(ζ₈)` for Clifford modules,
//!   Hecke algebra modules and the Dirac operator, whose kernel is computed
//!   directly and identified by character pairings.
//!
//! [`cli`] drives both from the command line.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod spin;
pub mod symfunc;
pub mod unitary;

pub use error::{Error, Result};
pub use partition::{CharacterVector, Composition, DistinctPartition, Partition};
pub use rational::Rational;
