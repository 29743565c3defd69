//! Analysis of one-dimensional complete local domains `R = k[[y1, ..., yn]] ⊆ k[[t]]`
//! given by power-series parametrizations over the rationals.
//!
//! The crate is `no_std` (it needs `alloc`). It provides
//!
//! * exact truncated power series in `t` ([`series`]),
//! * numerical semigroup combinatorics ([`semigroup`]),
//! * the valuation-table engine that builds canonical bases of `R` and of its
//!   ideals modulo `t^D` ([`engine`]),
//! * ring invariants such as the value semigroup, conductor degree and the
//!   Herzog–Kunz sequence `v(m) \ v(m²)` ([`invariants`]),
//! * rewriting of parametrizations ([`transforms`]).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod engine;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod scalar;
pub mod semigroup;
pub mod series;
pub mod transforms;

pub use engine::{
    analyze_ring, AnalysisConfig, BasisKind, Parametrization, ReducedBasis, RingAnalysis,
};
pub use error::Error;
pub use invariants::{analyze, HkProfile, ReducedType, RingReport};
pub use poly::Poly;
pub use scalar::Scalar;
pub use semigroup::NumericalSemigroup;
pub use series::{Precision, Series};

pub type Result<T> = core::result::Result<T, Error>;
