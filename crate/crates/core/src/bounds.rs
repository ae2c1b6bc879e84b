//! Numerical restrictions on ACM bundles satisfying condition ★.
//!
//! [`c1_bounds`] and [`c2_upper_general`] hold on every `X_r`; the rest are
//! specific to the quartic threefold, where `h³E(-1) = h⁰E^∨ = 0` forces
//! `χ(E(-1)) = 0` and pins `c3` and the genus down as functions of `(k, c1, c2)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::{require_integer, CurveInvariants, Error, HypersurfaceContext, Rational, Result};

fn require_rank_two(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::RankUnsupported {
            rank: k,
            expected: "k >= 2",
        });
    }
    Ok(())
}

/// `1 ≤ c1 ≤ ⌊k(r-1)/2⌋`.
pub fn c1_bounds(ctx: &HypersurfaceContext, k: u32) -> Result<(BigInt, BigInt)> {
    require_rank_two(k)?;
    let top = BigInt::from(k) * BigInt::from(ctx.degree() - 1);
    Ok((BigInt::one(), top.div_floor(&BigInt::from(2))))
}

/// Upper bound on `c2` from the vanishing of `h⁰` on a general hyperplane
/// section, with `floored` set when the exact bound was fractional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralC2Bound {
    pub value: BigInt,
    pub floored: bool,
}

/// `c2 ≤ (r/2)c1² - (r(r-2)/2)c1 + (r(r-1)(r-2)/6)k` on any `X_r`.
pub fn c2_upper_general(
    ctx: &HypersurfaceContext,
    k: u32,
    c1: impl Into<BigInt>,
) -> Result<GeneralC2Bound> {
    require_rank_two(k)?;
    let c1 = c1.into();
    if c1 < BigInt::one() {
        return Err(Error::InvalidArgument("c1 must be at least 1"));
    }
    let r = i64::from(ctx.degree());
    // 6·bound = 3r·c1² - 3r(r-2)·c1 + r(r-1)(r-2)·k
    let numer = &c1 * &c1 * (3 * r) - &c1 * (3 * r * (r - 2)) + BigInt::from(k) * (r * (r - 1) * (r - 2));
    let exact = Rational::new(numer, 6)?;
    Ok(GeneralC2Bound {
        value: exact.floor(),
        floored: !exact.is_integer(),
    })
}

/// `c3 = -(4/3)c1³ + 2c1² - (14/3)c1 + c1c2 - c2 + 2k` on `X₄`.
pub fn c3_from_acm(k: u32, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Result<BigInt> {
    let (c1, c2) = (c1.into(), c2.into());
    let c1_sq = &c1 * &c1;
    // 3·c3 = -4c1³ + 6c1² - 14c1 + 3c1c2 - 3c2 + 6k
    let numer = &c1_sq * &c1 * (-4) + c1_sq * 6 - &c1 * 14 + &c1 * &c2 * 3 - c2 * 3
        + BigInt::from(k) * 6;
    require_integer(&Rational::new(numer, 3)?)
}

/// `g = -(2/3)c1³ + c1² - (7/3)c1 + 1 + (c1-1)c2 + k` on `X₄`.
pub fn genus_from_acm(k: u32, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Result<BigInt> {
    let (c1, c2) = (c1.into(), c2.into());
    let c1_sq = &c1 * &c1;
    // 3·g = -2c1³ + 3c1² - 7c1 + 3 + 3(c1-1)c2 + 3k
    let numer = &c1_sq * &c1 * (-2) + c1_sq * 3 - &c1 * 7 + 3 + (&c1 - 1) * c2 * 3
        + BigInt::from(k) * 3;
    require_integer(&Rational::new(numer, 3)?)
}

/// Closed integer interval `[lower, upper]`; empty when `lower > upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct C2Interval {
    pub lower: BigInt,
    pub upper: BigInt,
}

impl C2Interval {
    pub fn new(lower: impl Into<BigInt>, upper: impl Into<BigInt>) -> Self {
        C2Interval {
            lower: lower.into(),
            upper: upper.into(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lower > self.upper
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    /// Number of integer points.
    pub fn width(&self) -> BigInt {
        if self.is_empty() {
            BigInt::from(0)
        } else {
            &self.upper - &self.lower + 1
        }
    }

    /// Integer points in ascending order.
    pub fn values(&self) -> impl Iterator<Item = BigInt> + '_ {
        let mut next = self.lower.clone();
        core::iter::from_fn(move || {
            if next > self.upper {
                return None;
            }
            let current = next.clone();
            next += 1;
            Some(current)
        })
    }
}

/// The argument a `c2` bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundSource {
    /// `c2 ≥ 2c1² - 2c1 + k`: the pushforward under a general projection to
    /// `P³` splits, so `h⁰E + h³E(-2) ≤ 4k`.
    ProjectionSplitting,
    /// `c2 ≤ 2c1² - 4c1 + 4k`: `h⁰E_H(-1) = 0` on a general hyperplane section.
    HyperplaneSection,
    /// `c2 ≤ 2c1² + k`: `χ(E) = -c2 + 2c1² + 2k ≥ h⁰E ≥ k`.
    SectionCount,
    /// `c2 ≥ 2c1² - 4c1 + 8` when `c1 > 1`: the curve spans `P⁴`.
    NondegenerateCurve,
    /// `2c1² - 4c1 + 11 ≤ c2 ≤ 2c1² - 4c1 + 12` for rank three with `c1 ≥ 3`:
    /// `h⁰E^∨(1) ≤ 1`.
    RankThreeDual,
    /// `c2 = k + 2` when `c1 = 1`.
    UnitFirstClass,
}

impl BoundSource {
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::ProjectionSplitting => "projection-splitting",
            BoundSource::HyperplaneSection => "hyperplane-section",
            BoundSource::SectionCount => "section-count",
            BoundSource::NondegenerateCurve => "nondegenerate-curve",
            BoundSource::RankThreeDual => "rank-three-dual",
            BoundSource::UnitFirstClass => "unit-first-class",
        }
    }
}

/// A `c2` interval together with the clauses attaining each endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Bounds {
    pub interval: C2Interval,
    pub lower_sources: Vec<BoundSource>,
    pub upper_sources: Vec<BoundSource>,
    /// `false` when only the projection/hyperplane/section-count clauses were
    /// applied, i.e. for ranks other than 3 and 4.
    pub refined: bool,
}

fn pick(candidates: Vec<(BigInt, BoundSource)>, take_max: bool) -> (BigInt, Vec<BoundSource>) {
    let best = candidates
        .iter()
        .map(|(v, _)| v)
        .fold(None::<&BigInt>, |acc, v| match acc {
            Some(a) if (take_max && a >= v) || (!take_max && a <= v) => Some(a),
            _ => Some(v),
        })
        .cloned()
        .expect("at least one bound");
    let sources = candidates
        .iter()
        .filter(|(v, _)| *v == best)
        .map(|(_, s)| *s)
        .collect();
    (best, sources)
}

/// Admissible `c2` range on `X₄` for rank `k` and first Chern class `c1`.
///
/// Lower bounds combine by max and upper bounds by min. For `k ∈ {3, 4}` the
/// nondegeneracy bound (`c1 > 1`), the rank-three refinement (`k = 3`,
/// `c1 ≥ 3`) and the `c1 = 1` equality are applied as well; the equality
/// replaces the interval outright.
pub fn c2_interval_r4(k: u32, c1: impl Into<BigInt>) -> C2Bounds {
    use BoundSource::*;

    let c1 = c1.into();
    let kb = BigInt::from(k);
    let two_c1_sq = BigInt::from(2) * &c1 * &c1;
    let refined = k == 3 || k == 4;

    if refined && c1 == BigInt::one() {
        let c2: BigInt = &kb + 2;
        return C2Bounds {
            interval: C2Interval::new(c2.clone(), c2),
            lower_sources: alloc::vec![UnitFirstClass],
            upper_sources: alloc::vec![UnitFirstClass],
            refined,
        };
    }

    let mut lowers = alloc::vec![(&two_c1_sq - BigInt::from(2) * &c1 + &kb, ProjectionSplitting)];
    let mut uppers = alloc::vec![
        (&two_c1_sq - BigInt::from(4) * &c1 + BigInt::from(4) * &kb, HyperplaneSection),
        (&two_c1_sq + &kb, SectionCount),
    ];
    if refined && c1 > BigInt::one() {
        lowers.push((&two_c1_sq - BigInt::from(4) * &c1 + 8, NondegenerateCurve));
    }
    if k == 3 && c1 >= BigInt::from(3) {
        lowers.push((&two_c1_sq - BigInt::from(4) * &c1 + 11, RankThreeDual));
        uppers.push((&two_c1_sq - BigInt::from(4) * &c1 + 12, RankThreeDual));
    }

    let (lower, lower_sources) = pick(lowers, true);
    let (upper, upper_sources) = pick(uppers, false);
    C2Bounds {
        interval: C2Interval { lower, upper },
        lower_sources,
        upper_sources,
        refined,
    }
}

/// Whether `2g(C) - 2 < (r + c1 - 4)·deg C`, which guarantees
/// `h⁰ω_C(4 - r - c1) = 0`.
pub fn hs_sufficient_condition(
    ctx: &HypersurfaceContext,
    c1: impl Into<BigInt>,
    curve: &CurveInvariants,
) -> bool {
    let lhs = BigInt::from(2) * &curve.genus - 2;
    let rhs = (BigInt::from(ctx.degree()) + c1.into() - 4) * &curve.degree;
    lhs < rhs
}
