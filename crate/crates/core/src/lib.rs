//! Exact evaluation of generalized hypergeometric series and machine
//! verification of very well-poised summation and transformation identities.
//!
//! The crate is `no_std` (it needs `alloc`). Modules, bottom-up:
//!
//! - [`rat`]: exact rationals, Pochhammer symbols, conjugate surd pairs
//! - [`real`], [`gamma`]: arbitrary-precision reals and gamma products
//! - [`series`]: `p+1Fp(±1)` terms, exact and truncated sums, classification
//! - [`derived`]: the auxiliary rational quantities attached to identities
//! - [`catalog`]: every identity as an executable LHS/RHS pair with a sampler
//! - [`bailey`]: the Bailey transform and its two derivation setups
#![no_std]

extern crate alloc;

pub mod bailey;
pub mod catalog;
pub mod derived;
pub mod error;
pub mod gamma;
pub mod rat;
pub mod real;
pub mod series;

pub use error::{Error, Result};
pub use rat::{Rat, SurdPairBase};
pub use real::Real;
pub use series::{Argument, Param, SeriesSpec};
