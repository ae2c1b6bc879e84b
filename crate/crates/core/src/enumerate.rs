//! The table of admissible invariants of ACM bundles with condition ★ on `X₄`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bounds::{c1_bounds, c2_interval_r4, c3_from_acm, genus_from_acm, C2Bounds};
use crate::{BundleInvariants, HypersurfaceContext, Result};

/// `slope·c2 + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineInC2 {
    pub slope: BigInt,
    pub intercept: BigInt,
}

impl AffineInC2 {
    pub fn eval(&self, c2: &BigInt) -> BigInt {
        &self.slope * c2 + &self.intercept
    }
}

impl fmt::Display for AffineInC2 {
    /// Renders as `c2-6`, `2c2-26`, `-c2+3`, or a bare constant when the slope vanishes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(f, "{}", self.intercept);
        }
        let mut out = String::new();
        if self.slope == BigInt::one() {
        } else if self.slope == -BigInt::one() {
            out.push('-');
        } else {
            write!(out, "{}", self.slope)?;
        }
        out.push_str("c2");
        if self.intercept.is_positive() {
            write!(out, "+{}", self.intercept)?;
        } else if self.intercept.is_negative() {
            write!(out, "{}", self.intercept)?;
        }
        f.write_str(&out)
    }
}

/// One admissible `c2` with its forced `c3` and curve genus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowEntry {
    pub c2: BigInt,
    pub c3: BigInt,
    pub genus: BigInt,
}

/// All admissible invariants for a fixed rank and first Chern class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRow {
    pub k: u32,
    pub c1: BigInt,
    pub bounds: C2Bounds,
    /// One entry per integer point of `bounds.interval`, ascending in `c2`.
    pub entries: Vec<RowEntry>,
    pub c3_form: AffineInC2,
    pub genus_form: AffineInC2,
}

impl EnumerationRow {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn quadruples(&self) -> impl Iterator<Item = BundleInvariants> + '_ {
        self.entries.iter().map(|e| BundleInvariants {
            k: self.k,
            c1: self.c1.clone(),
            c2: e.c2.clone(),
            c3: e.c3.clone(),
        })
    }
}

/// One row per `c1` in `[1, ⌊3k/2⌋]`, ascending, including rows whose
/// interval is empty.
///
/// For `k ∉ {3, 4}` rows are built from the unrefined bounds only (see
/// [`C2Bounds::refined`]) and make no completeness claim.
pub fn enumerate_acm_r4(k: u32) -> Result<Vec<EnumerationRow>> {
    let (lo, hi) = c1_bounds(&HypersurfaceContext::quartic(), k)?;
    let mut rows = Vec::new();
    let mut c1 = lo;
    while c1 <= hi {
        rows.push(build_row(k, &c1)?);
        c1 += 1;
    }
    Ok(rows)
}

fn build_row(k: u32, c1: &BigInt) -> Result<EnumerationRow> {
    let bounds = c2_interval_r4(k, c1.clone());
    let entries = bounds
        .interval
        .values()
        .map(|c2| {
            Ok(RowEntry {
                c3: c3_from_acm(k, c1.clone(), c2.clone())?,
                genus: genus_from_acm(k, c1.clone(), c2.clone())?,
                c2,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let slope: BigInt = c1 - 1;
    Ok(EnumerationRow {
        k,
        c1: c1.clone(),
        c3_form: AffineInC2 {
            slope: slope.clone(),
            intercept: c3_from_acm(k, c1.clone(), 0)?,
        },
        genus_form: AffineInC2 {
            slope,
            intercept: genus_from_acm(k, c1.clone(), 0)?,
        },
        bounds,
        entries,
    })
}
