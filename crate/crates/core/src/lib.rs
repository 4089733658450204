//! Shifted Littlewood-Richardson coefficients and the combinatorics behind them.
//!
//! The centerpiece is [`lr::coefficient`], which counts tableaux of shape
//! `lambda` constructed from a pair of strict partitions `mu < nu` by a
//! backtracking enumerator over Serrano-Pieri strips. Three independent
//! implementations of the same number live in [`oracles`] (monomial expansion
//! of P-Schur products, rectification counting, insertion completion) so that
//! every answer can be cross-checked.
//!
//! Supporting layers:
//! - [`partition`], [`shape`]: strict partitions, shifted and skew diagrams;
//! - [`letter`], [`word`]: the doubled alphabet `1' < 1 < 2' < 2 < ...` and
//!   plain words/biwords;
//! - [`tableau`]: shifted semistandard tableaux, validation, enumeration, and
//!   the text codec;
//! - [`insertion`]: mixed insertion and Sagan-Worley insertion with recording
//!   tableaux, reading words, rectification;
//! - [`analysis`]: word classifiers (Yamanouchi, shifted lattice, interlacing,
//!   barely Yamanouchi), shrinking decompositions, hook-subword lengths.
//!
//! The crate is `no_std` + `alloc`; everything is an immutable value that can
//! be shared freely between threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod insertion;
pub mod letter;
pub mod lr;
pub mod oracles;
pub mod partition;
pub mod shape;
pub mod tableau;
pub mod word;

pub use letter::Letter;
pub use partition::StrictPartition;
pub use shape::{ShiftedShape, SkewShape};
pub use tableau::{RecordingTableau, ShiftedTableau};
pub use word::{Biword, ContentVector, Word};
