//! Riemann-Roch, twisting and the genus of the dependency locus on `X_r`.
//!
//! With `P` a point, `L` a line and `H` the hyperplane class, the intersection
//! numbers are `H³ = r`, `H·L = 1`, `H² = rL`, and `K = (r-5)H`.

use num_bigint::BigInt;

use crate::{require_integer, BundleInvariants, Error, HypersurfaceContext, Rational, Result};

/// `numer / denom` for a small positive constant denominator.
fn over(numer: BigInt, denom: i64) -> Rational {
    Rational::new(numer, denom).expect("nonzero constant denominator")
}

/// `(r-5)² + (10 - 5r + r²)`, the coefficient pair shared by both Riemann-Roch forms.
fn linear_coefficient(r: i64) -> i64 {
    (r - 5) * (r - 5) + (10 - 5 * r + r * r)
}

/// `r(5-r)(10-5r+r²)`, numerator of `24·χ(O_X)`.
fn constant_numerator(r: i64) -> i64 {
    r * (5 - r) * (10 - 5 * r + r * r)
}

/// `χ(O_{X_r}(a))`.
pub fn chi_line_bundle(ctx: &HypersurfaceContext, a: impl Into<BigInt>) -> Rational {
    let a = a.into();
    let r = i64::from(ctx.degree());
    let a2 = &a * &a;
    // 24·χ = 4r·a³ + 6r(5-r)·a² + 2r·L·a + r(5-r)(10-5r+r²)
    let numer = &a2 * &a * (4 * r)
        + a2 * (6 * r * (5 - r))
        + a * (2 * r * linear_coefficient(r))
        + constant_numerator(r);
    over(numer, 24)
}

/// `χ(E)` for a bundle with invariants `inv` on `X_r`.
pub fn chi_bundle(ctx: &HypersurfaceContext, inv: &BundleInvariants) -> Rational {
    let r = i64::from(ctx.degree());
    let BundleInvariants { k, c1, c2, c3 } = inv;
    let c1_sq = c1 * c1;
    // 24·χ = 4r·c1³ - 12·c1c2 + 12·c3 + 6r(5-r)·c1² - 12(5-r)·c2 + 2r·L·c1
    //        + k·r(5-r)(10-5r+r²)
    let numer = &c1_sq * c1 * (4 * r) - c1 * c2 * 12 + c3 * 12
        + c1_sq * (6 * r * (5 - r))
        - c2 * (12 * (5 - r))
        + c1 * (2 * r * linear_coefficient(r))
        + BigInt::from(*k) * constant_numerator(r);
    over(numer, 24)
}

/// Invariants of `E(n) = E ⊗ O(n)`.
///
/// The `c2` and `c3` expressions carry halves and sixths that always cancel
/// for integer input; a fractional result is reported as [`Error::NonIntegral`].
pub fn twist(
    ctx: &HypersurfaceContext,
    inv: &BundleInvariants,
    n: impl Into<BigInt>,
) -> Result<BundleInvariants> {
    let n = n.into();
    let r = BigInt::from(ctx.degree());
    let k = BigInt::from(inv.k);
    let BundleInvariants { c1, c2, c3, .. } = inv;
    let k_minus_1 = &k - 1;
    let k_minus_2 = &k - 2;

    let new_c1 = c1 + &k * &n;
    // 2·c2(E(n)) = 2c2 + r·n(k-1)(2c1 + nk)
    let twice_c2 = c2 * 2 + &r * &n * &k_minus_1 * (c1 * 2 + &n * &k);
    // 6·c3(E(n)) = 6c3 + (k-2)n(6c2 + 3(k-1)nr·c1 + r·n²k(k-1))
    let six_c3 = c3 * 6
        + &k_minus_2
            * &n
            * (c2 * 6 + &k_minus_1 * &n * &r * c1 * 3 + &r * &n * &n * &k * &k_minus_1);

    Ok(BundleInvariants {
        k: inv.k,
        c1: new_c1,
        c2: require_integer(&over(twice_c2, 2))?,
        c3: require_integer(&over(six_c3, 6))?,
    })
}

/// Arithmetic genus of the curve cut out as the dependency locus of `k-1`
/// sections of a rank-`k` bundle on `X_r` (`deg C = c2`).
pub fn genus_general(ctx: &HypersurfaceContext, inv: &BundleInvariants) -> Result<Rational> {
    if inv.k < 2 {
        return Err(Error::RankUnsupported {
            rank: inv.k,
            expected: "k >= 2",
        });
    }
    let r = i64::from(ctx.degree());
    let BundleInvariants { c1, c2, c3, .. } = inv;
    // 24·g = -60c2 + 12c1c2 + 12c3 + 50r + 12r·c2 - 35r² + 10r³ - r⁴
    let constant = 50 * r - 35 * r * r + 10 * r * r * r - r * r * r * r;
    let numer = c2 * (-60) + c1 * c2 * 12 + c3 * 12 + c2 * (12 * r) + constant;
    Ok(over(numer, 24))
}

/// The genus formula specialised to the quartic: `g = 1 + ½c1c2 - ½c2 + ½c3`.
pub fn genus_r4(inv: &BundleInvariants) -> Rational {
    let BundleInvariants { c1, c2, c3, .. } = inv;
    over(c1 * c2 - c2 + c3 + 2, 2)
}
