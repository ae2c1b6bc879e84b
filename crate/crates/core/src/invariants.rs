use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// The ambient smooth hypersurface `X_r ⊂ P⁴`, identified by its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HypersurfaceContext {
    r: u32,
}

impl HypersurfaceContext {
    pub fn new(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("hypersurface degree must be at least 1"));
        }
        Ok(HypersurfaceContext { r })
    }

    /// The quartic threefold `X₄`.
    pub fn quartic() -> Self {
        HypersurfaceContext { r: 4 }
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    /// Coefficient of `H` in the canonical class, `K = (r-5)H`.
    pub fn canonical_coefficient(&self) -> i64 {
        i64::from(self.r) - 5
    }

    /// `H³ = r` points.
    pub fn hyperplane_cube(&self) -> u32 {
        self.r
    }
}

/// Numerical invariants `(k; c1, c2, c3)` of a rank-`k` bundle, with `c1` the
/// multiple of `H`, `c2` the degree of the second Chern class and `c3` the
/// number of points.
///
/// Only `k ≥ 1` is enforced; the Chern numbers are raw integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BundleInvariants {
    pub k: u32,
    pub c1: BigInt,
    pub c2: BigInt,
    pub c3: BigInt,
}

impl BundleInvariants {
    pub fn new(
        k: u32,
        c1: impl Into<BigInt>,
        c2: impl Into<BigInt>,
        c3: impl Into<BigInt>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1"));
        }
        Ok(BundleInvariants {
            k,
            c1: c1.into(),
            c2: c2.into(),
            c3: c3.into(),
        })
    }
}

impl fmt::Display for BundleInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{},{})", self.k, self.c1, self.c2, self.c3)
    }
}

/// Degree and arithmetic genus of a curve in `X_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveInvariants {
    pub degree: BigInt,
    pub genus: BigInt,
}

impl CurveInvariants {
    pub fn new(degree: impl Into<BigInt>, genus: impl Into<BigInt>) -> Result<Self> {
        let degree = degree.into();
        if degree < BigInt::one() {
            return Err(Error::InvalidArgument("curve degree must be at least 1"));
        }
        Ok(CurveInvariants {
            degree,
            genus: genus.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn context_constants() {
        let ctx = HypersurfaceContext::new(4).unwrap();
        assert_eq!(ctx.canonical_coefficient(), -1);
        assert_eq!(ctx.hyperplane_cube(), 4);
        assert_eq!(HypersurfaceContext::new(1).unwrap().canonical_coefficient(), -4);
        assert!(HypersurfaceContext::new(0).is_err());
    }

    #[test]
    fn rank_zero_rejected() {
        assert!(BundleInvariants::new(0, 1, 2, 3).is_err());
        assert_eq!(
            BundleInvariants::new(4, 6, 64, 84).unwrap().to_string(),
            "(4;6,64,84)"
        );
    }

    #[test]
    fn curve_degree_positive() {
        assert!(CurveInvariants::new(0, 1).is_err());
        assert!(CurveInvariants::new(6, 3).is_ok());
    }
}
