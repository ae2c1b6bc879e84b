//! Exact Chern-class calculus for vector bundles on a smooth hypersurface
//! `X_r ⊂ P⁴` of degree `r`.
//!
//! Every quantity is evaluated over [`Rational`], an exact fraction of
//! arbitrary-precision integers; nothing in this crate touches floating point.
//! The crate is `no_std` and only needs `alloc`.
//!
//! The layers build on each other:
//!
//! - [`chern`]: Riemann-Roch, twisting by `O(n)`, and the genus of the
//!   dependency-locus curve.
//! - [`bounds`] and [`enumerate`]: the numerical restrictions on ACM bundles
//!   satisfying condition ★ on the quartic threefold `X₄`, and the table of
//!   admissible `(k; c1, c2, c3)` they leave.
//! - [`catalog`], [`extension`] and [`coverage`]: rank-two ACM classifications,
//!   rank-four extensions of them, and the cross-reference of admissible
//!   quadruples against known constructions.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod catalog;
pub mod chern;
pub mod coverage;
pub mod enumerate;
mod error;
pub mod extension;
mod invariants;
mod rational;

pub use error::{Error, Result};
pub use invariants::{BundleInvariants, CurveInvariants, HypersurfaceContext};
pub use num_bigint::BigInt;
pub use rational::{require_integer, Rational};
