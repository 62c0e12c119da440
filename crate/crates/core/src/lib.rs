//! Exact algebra for the group of bounded sequences over `Z[2^(1/n)]`.
//!
//! * [`ring`]: arithmetic in `Z[2^(1/n)]` with exact real comparisons.
//! * [`approx`]: small nonzero elements, the powers of `2^(1/n) - 1`.
//! * [`homcalc`]: additive endomorphisms of the ring, module-linearity tests
//!   and the witness finders built on small elements.
//! * [`seqgroup`]: finitely supported sequences and explicit isomorphism
//!   witnesses between direct sums of sequence and free groups.
//! * [`snf`]: Smith normal form, cokernels and the rank-parity obstruction.

pub mod approx;
pub mod error;
pub mod homcalc;
pub mod json;
pub mod matrix;
pub mod ring;
pub mod sample;
pub mod seqgroup;
pub mod snf;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use ring::{RationalBound, RingElem, RingParams, Valuation};
