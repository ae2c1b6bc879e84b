//! Cross-module invariant checks run by `quartic-acm selfcheck`.
//!
//! The formulas under test are reached through [`Formulas`], so a harness can
//! swap one for a corrupted copy and confirm the suite notices.

use num_bigint::BigInt;
use quartic_acm_core::bounds::{c2_upper_general, c3_from_acm, genus_from_acm};
use quartic_acm_core::catalog::{Catalog, Pool, Rank2Class};
use quartic_acm_core::chern::{chi_bundle, chi_line_bundle, genus_general, genus_r4, twist};
use quartic_acm_core::coverage::coverage_report;
use quartic_acm_core::enumerate::enumerate_acm_r4;
use quartic_acm_core::extension::{decompose, extend_rank2, extension_quadruples};
use quartic_acm_core::{BundleInvariants, HypersurfaceContext, Rational, Result};

type Ctx = HypersurfaceContext;
type Inv = BundleInvariants;

#[derive(Clone, Copy)]
pub struct Formulas {
    pub chi_line_bundle: fn(&Ctx, BigInt) -> Rational,
    pub chi_bundle: fn(&Ctx, &Inv) -> Rational,
    pub twist: fn(&Ctx, &Inv, BigInt) -> Result<Inv>,
    pub genus_general: fn(&Ctx, &Inv) -> Result<Rational>,
    pub genus_r4: fn(&Inv) -> Rational,
    pub c3_from_acm: fn(u32, BigInt, BigInt) -> Result<BigInt>,
    pub genus_from_acm: fn(u32, BigInt, BigInt) -> Result<BigInt>,
    pub extend_rank2: fn(&Ctx, &Rank2Class, &Rank2Class) -> Inv,
}

impl Formulas {
    pub fn standard() -> Self {
        Formulas {
            chi_line_bundle: |ctx, a| chi_line_bundle(ctx, a),
            chi_bundle,
            twist: |ctx, e, n| twist(ctx, e, n),
            genus_general,
            genus_r4,
            c3_from_acm: |k, c1, c2| c3_from_acm(k, c1, c2),
            genus_from_acm: |k, c1, c2| genus_from_acm(k, c1, c2),
            extend_rank2,
        }
    }

    pub fn with_fault(fault: Fault) -> Self {
        let mut f = Self::standard();
        match fault {
            // 2c1² read as 3c1²
            Fault::C3Coefficient => {
                f.c3_from_acm = |k, c1, c2| c3_from_acm(k, c1.clone(), c2).map(|v| v + &c1 * &c1)
            }
            // drops the r·binom(k,2)·n² term
            Fault::TwistC2 => {
                f.twist = |ctx, e, n| {
                    let mut out = twist(ctx, e, n.clone())?;
                    out.c2 -= BigInt::from(ctx.degree()) * e.k * (e.k - 1) / 2 * &n * &n;
                    Ok(out)
                }
            }
            // coefficient (r+1) on c1'c1''
            Fault::WhitneyCrossTerm => {
                f.extend_rank2 = |ctx, a, b| {
                    let mut out = extend_rank2(ctx, a, b);
                    out.c2 += &a.c1 * &b.c1;
                    out
                }
            }
            // χ(O_X) constant dropped from the line-bundle formula
            Fault::ChiConstant => {
                f.chi_line_bundle = |ctx, a| {
                    let r = i64::from(ctx.degree());
                    chi_line_bundle(ctx, a)
                        - Rational::new(r * (5 - r) * (10 - 5 * r + r * r), 24).unwrap()
                }
            }
        }
        f
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    C3Coefficient,
    TwistC2,
    WhitneyCrossTerm,
    ChiConstant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&Formulas) -> std::result::Result<(), String>;

const CHECKS: &[(&str, Check)] = &[
    ("chi-line-constant-term", chi_line_constant_term),
    ("chi-line-integrality", chi_line_integrality),
    ("chi-quartic-spot-values", chi_quartic_spot_values),
    ("twist-round-trip", twist_round_trip),
    ("twist-additive", twist_additive),
    ("chi-cubic-in-twist", chi_cubic_in_twist),
    ("genus-general-matches-quartic-form", genus_forms_agree),
    ("acm-euler-vanishing", acm_euler_vanishing),
    ("acm-chi-closed-form", acm_chi_closed_form),
    ("acm-genus-composition", acm_genus_composition),
    ("classification-table", classification_table),
    ("interval-within-general-bound", interval_within_general_bound),
    ("whitney-oracle", whitney_oracle),
    ("extension-symmetry", extension_symmetry),
    ("extension-admissible", extension_admissible),
    ("extension-genus-nonnegative", extension_genus_nonnegative),
    ("chi-additive-on-extensions", chi_additive_on_extensions),
    ("decompose-exhaustive", decompose_exhaustive),
    ("sextic-not-an-extension", sextic_not_an_extension),
    ("coverage-realized-set", coverage_realized_set),
];

pub fn run(formulas: &Formulas) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, check)| {
            let result = check(formulas);
            CheckOutcome {
                name,
                passed: result.is_ok(),
                detail: result.err().unwrap_or_default(),
            }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn inv(k: u32, c1: i64, c2: i64, c3: i64) -> Inv {
    BundleInvariants::new(k, c1, c2, c3).expect("rank >= 1")
}

/// A deterministic spread of invariants covering signs and ranks 1..=6.
fn sample_invariants() -> impl Iterator<Item = Inv> {
    (1u32..=6).flat_map(|k| {
        (-4i64..=4).flat_map(move |c1| {
            [-13i64, 0, 7, 22].into_iter().flat_map(move |c2| {
                [-9i64, 0, 5, 31].into_iter().map(move |c3| inv(k, c1, c2, c3))
            })
        })
    })
}

/// `(k, c1, c2)` samples with `k ∈ [2, 8]`.
fn sample_triples() -> impl Iterator<Item = (u32, i64, i64)> {
    (2u32..=8).flat_map(|k| (-6i64..=6).flat_map(move |c1| (-40i64..=40).step_by(7).map(move |c2| (k, c1, c2))))
}

fn chi_line_constant_term(f: &Formulas) -> std::result::Result<(), String> {
    for r in 1..=10i64 {
        let ctx = Ctx::new(r as u32).unwrap();
        let expected = Rational::new(r * (5 - r) * (10 - 5 * r + r * r), 24).unwrap();
        let got = (f.chi_line_bundle)(&ctx, BigInt::from(0));
        ensure(got == expected, || format!("r={r}: chi(O)={got}, expected {expected}"))?;
    }
    Ok(())
}

fn chi_line_integrality(f: &Formulas) -> std::result::Result<(), String> {
    for r in 1..=10u32 {
        let ctx = Ctx::new(r).unwrap();
        for a in -10..=10i64 {
            let v = (f.chi_line_bundle)(&ctx, BigInt::from(a));
            ensure(v.is_integer(), || format!("r={r} a={a}: chi={v}"))?;
        }
    }
    Ok(())
}

fn chi_quartic_spot_values(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    for (a, expected) in [(0, 1), (1, 5), (-1, -1)] {
        let got = (f.chi_line_bundle)(&x4, BigInt::from(a));
        ensure(got == Rational::from(expected), || format!("chi(O({a}))={got}"))?;
    }
    let got = (f.chi_bundle)(&x4, &inv(4, 1, 6, 4));
    ensure(got == Rational::from(4), || format!("chi(4;1,6,4)={got}"))
}

fn twist_round_trip(f: &Formulas) -> std::result::Result<(), String> {
    for r in [3u32, 4, 7] {
        let ctx = Ctx::new(r).unwrap();
        for e in sample_invariants() {
            for n in [-3i64, -1, 2, 5] {
                let there = (f.twist)(&ctx, &e, BigInt::from(n)).map_err(|err| err.to_string())?;
                let back = (f.twist)(&ctx, &there, BigInt::from(-n)).map_err(|err| err.to_string())?;
                ensure(back == e, || format!("r={r} {e} twisted by {n} and back gives {back}"))?;
            }
        }
    }
    Ok(())
}

fn twist_additive(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    let tw = |e: &Inv, n: i64| (f.twist)(&x4, e, BigInt::from(n)).map_err(|err| err.to_string());
    for e in sample_invariants() {
        for (m, n) in [(1, 1), (-2, 3), (4, -1)] {
            let stepwise = tw(&tw(&e, m)?, n)?;
            let direct = tw(&e, m + n)?;
            ensure(stepwise == direct, || format!("{e}: ({m})+({n}) gives {stepwise}, direct {direct}"))?;
        }
    }
    Ok(())
}

fn chi_cubic_in_twist(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    for e in sample_invariants().step_by(7) {
        let mut values = Vec::new();
        for n in -5..=5i64 {
            let t = (f.twist)(&x4, &e, BigInt::from(n)).map_err(|err| err.to_string())?;
            values.push((f.chi_bundle)(&x4, &t));
        }
        for _ in 0..4 {
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        ensure(values.iter().all(Rational::is_zero), || {
            format!("{e}: fourth differences of chi(E(n)) do not vanish")
        })?;
    }
    Ok(())
}

fn genus_forms_agree(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    for e in sample_invariants().filter(|e| e.k >= 2) {
        let general = (f.genus_general)(&x4, &e).map_err(|err| err.to_string())?;
        let quartic = (f.genus_r4)(&e);
        ensure(general == quartic, || format!("{e}: {general} vs {quartic}"))?;
    }
    Ok(())
}

fn acm_quadruple(f: &Formulas, k: u32, c1: i64, c2: i64) -> std::result::Result<Inv, String> {
    let c3 = (f.c3_from_acm)(k, BigInt::from(c1), BigInt::from(c2)).map_err(|e| e.to_string())?;
    Ok(BundleInvariants::new(k, c1, c2, c3).unwrap())
}

fn acm_euler_vanishing(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    for (k, c1, c2) in sample_triples() {
        let e = acm_quadruple(f, k, c1, c2)?;
        let t = (f.twist)(&x4, &e, BigInt::from(-1)).map_err(|err| err.to_string())?;
        let chi = (f.chi_bundle)(&x4, &t);
        ensure(chi.is_zero(), || format!("{e}: chi(E(-1)) = {chi}"))?;
    }
    Ok(())
}

fn acm_chi_closed_form(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    for (k, c1, c2) in sample_triples() {
        let e = acm_quadruple(f, k, c1, c2)?;
        let chi = (f.chi_bundle)(&x4, &e);
        let expected = Rational::from(2 * c1 * c1 - c2 + 2 * i64::from(k));
        ensure(chi == expected, || format!("{e}: chi = {chi}, expected {expected}"))?;
    }
    Ok(())
}

fn acm_genus_composition(f: &Formulas) -> std::result::Result<(), String> {
    for (k, c1, c2) in sample_triples() {
        let e = acm_quadruple(f, k, c1, c2)?;
        let composed = (f.genus_r4)(&e);
        let direct = (f.genus_from_acm)(k, BigInt::from(c1), BigInt::from(c2)).map_err(|err| err.to_string())?;
        ensure(composed == Rational::from(direct.clone()), || {
            format!("{e}: genus via c3 is {composed}, direct {direct}")
        })?;
    }
    Ok(())
}

/// `(k, c1, c2_lo, c2_hi, (c3 slope, c3 intercept), (g slope, g intercept))`
/// for rank three and four on the quartic threefold.
type TableRow = (u32, i64, i64, i64, (i64, i64), (i64, i64));

const REFERENCE_TABLE: &[TableRow] = &[
    (3, 1, 5, 5, (0, 2), (0, 2)),
    (3, 2, 8, 11, (1, -6), (1, -2)),
    (3, 3, 17, 18, (2, -26), (2, -12)),
    (3, 4, 27, 28, (3, -66), (3, -32)),
    (4, 1, 6, 6, (0, 4), (0, 3)),
    (4, 2, 8, 12, (1, -4), (1, -1)),
    (4, 3, 16, 22, (2, -24), (2, -11)),
    (4, 4, 28, 32, (3, -64), (3, -31)),
    (4, 5, 44, 46, (4, -132), (4, -65)),
    (4, 6, 64, 64, (5, -236), (5, -117)),
];

fn classification_table(f: &Formulas) -> std::result::Result<(), String> {
    let mut rows = enumerate_acm_r4(3).map_err(|e| e.to_string())?;
    rows.extend(enumerate_acm_r4(4).map_err(|e| e.to_string())?);
    ensure(rows.len() == REFERENCE_TABLE.len(), || format!("{} rows", rows.len()))?;
    for (row, &(k, c1, lo, hi, c3_form, g_form)) in rows.iter().zip(REFERENCE_TABLE) {
        let interval = &row.bounds.interval;
        ensure(
            row.k == k && row.c1 == BigInt::from(c1) && interval.lower == BigInt::from(lo) && interval.upper == BigInt::from(hi),
            || format!("row k={} c1={} has c2 in [{},{}]", row.k, row.c1, interval.lower, interval.upper),
        )?;
        for c2 in lo..=hi {
            let c3 = (f.c3_from_acm)(k, BigInt::from(c1), BigInt::from(c2)).map_err(|e| e.to_string())?;
            let g = (f.genus_from_acm)(k, BigInt::from(c1), BigInt::from(c2)).map_err(|e| e.to_string())?;
            let (want_c3, want_g) = (c3_form.0 * c2 + c3_form.1, g_form.0 * c2 + g_form.1);
            ensure(c3 == BigInt::from(want_c3) && g == BigInt::from(want_g), || {
                format!("({k};{c1},{c2}): c3={c3} g={g}, expected c3={want_c3} g={want_g}")
            })?;
        }
    }
    Ok(())
}

fn interval_within_general_bound(_: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    for k in 2..=8u32 {
        for row in enumerate_acm_r4(k).map_err(|e| e.to_string())? {
            let general = c2_upper_general(&x4, k, row.c1.clone()).map_err(|e| e.to_string())?;
            ensure(row.bounds.interval.upper <= general.value, || {
                format!("k={k} c1={}: upper {} exceeds {}", row.c1, row.bounds.interval.upper, general.value)
            })?;
        }
    }
    Ok(())
}

/// Product in the Chow ring of `X_r` on the basis `1, H, L, P`
/// (`H² = rL`, `H·L = P`), truncated above codimension three.
fn chow_product(r: &BigInt, a: &[BigInt; 4], b: &[BigInt; 4]) -> [BigInt; 4] {
    let zero = BigInt::from(0);
    let mut out = [zero.clone(), zero.clone(), zero.clone(), zero];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let (deg, scale) = match (i.min(j), i.max(j)) {
                (0, m) => (m, BigInt::from(1)),
                (1, 1) => (2, r.clone()),
                (1, 2) => (3, BigInt::from(1)),
                _ => continue,
            };
            out[deg] += x * y * scale;
        }
    }
    out
}

fn whitney_oracle(f: &Formulas) -> std::result::Result<(), String> {
    let mut pairs: Vec<(u32, Rank2Class, Rank2Class)> = Vec::new();
    let cat = Catalog::builtin();
    for r in [3u32, 4] {
        let entries = cat.entries_for(r).unwrap();
        for a in &entries {
            for b in &entries {
                pairs.push((r, a.class.clone(), b.class.clone()));
            }
        }
    }
    for r in [1u32, 2, 5] {
        for (a1, a2, b1, b2) in [(-2, 3, 4, 9), (0, 1, 5, -7), (3, 3, 3, 3)] {
            pairs.push((r, Rank2Class::new(a1, a2), Rank2Class::new(b1, b2)));
        }
    }
    for (r, a, b) in pairs {
        let ctx = Ctx::new(r).unwrap();
        let lift = |c: &Rank2Class| [BigInt::from(1), c.c1.clone(), c.c2.clone(), BigInt::from(0)];
        let total = chow_product(&BigInt::from(r), &lift(&a), &lift(&b));
        let got = (f.extend_rank2)(&ctx, &a, &b);
        ensure(
            got.k == 4 && [&got.c1, &got.c2, &got.c3] == [&total[1], &total[2], &total[3]],
            || format!("r={r} {a}+{b}: {got}, Chern polynomial gives ({},{},{})", total[1], total[2], total[3]),
        )?;
    }
    Ok(())
}

fn extension_symmetry(f: &Formulas) -> std::result::Result<(), String> {
    let cat = Catalog::builtin();
    for r in [3u32, 4] {
        let ctx = Ctx::new(r).unwrap();
        let entries = cat.entries_for(r).unwrap();
        for a in &entries {
            for b in &entries {
                let (ab, ba) = ((f.extend_rank2)(&ctx, &a.class, &b.class), (f.extend_rank2)(&ctx, &b.class, &a.class));
                ensure(ab == ba, || format!("{} and {} extend asymmetrically", a.class, b.class))?;
            }
        }
    }
    Ok(())
}

fn star_extensions(f: &Formulas) -> std::result::Result<Vec<Inv>, String> {
    let x4 = Ctx::quartic();
    let ws = extension_quadruples(&Catalog::builtin(), 4, Pool::StarOnly).map_err(|e| e.to_string())?;
    Ok(ws.iter().map(|w| (f.extend_rank2)(&x4, &w.left.class, &w.right.class)).collect())
}

fn extension_admissible(f: &Formulas) -> std::result::Result<(), String> {
    let rows = enumerate_acm_r4(4).map_err(|e| e.to_string())?;
    for q in star_extensions(f)? {
        let inside = rows.iter().any(|row| row.quadruples().any(|a| a == q));
        ensure(inside, || format!("{q} lies outside the admissible table"))?;
    }
    Ok(())
}

fn extension_genus_nonnegative(f: &Formulas) -> std::result::Result<(), String> {
    for q in star_extensions(f)? {
        let g = (f.genus_r4)(&q);
        ensure(g.is_integer() && !g.is_negative(), || format!("{q}: genus {g}"))?;
    }
    Ok(())
}

fn chi_additive_on_extensions(f: &Formulas) -> std::result::Result<(), String> {
    let cat = Catalog::builtin();
    for r in [3u32, 4] {
        let ctx = Ctx::new(r).unwrap();
        let entries = cat.entries_for(r).unwrap();
        for a in &entries {
            for b in &entries {
                let lift = |c: &Rank2Class| BundleInvariants::new(2, c.c1.clone(), c.c2.clone(), 0).unwrap();
                let whole = (f.chi_bundle)(&ctx, &(f.extend_rank2)(&ctx, &a.class, &b.class));
                let parts = (f.chi_bundle)(&ctx, &lift(&a.class)) + (f.chi_bundle)(&ctx, &lift(&b.class));
                ensure(whole == parts, || format!("r={r} {}+{}: chi {whole} vs {parts}", a.class, b.class))?;
            }
        }
    }
    Ok(())
}

fn decompose_exhaustive(_: &Formulas) -> std::result::Result<(), String> {
    let cat = Catalog::builtin();
    for r in [3u32, 4] {
        for pool in [Pool::StarOnly, Pool::Normalized] {
            for w in extension_quadruples(&cat, r, pool).map_err(|e| e.to_string())? {
                let found = decompose(&cat, r, &w.result, pool).map_err(|e| e.to_string())?;
                ensure(found.contains(&w), || format!("decompose misses {}+{}", w.left.class, w.right.class))?;
            }
        }
    }
    Ok(())
}

fn sextic_not_an_extension(f: &Formulas) -> std::result::Result<(), String> {
    let x4 = Ctx::quartic();
    let target = inv(4, 1, 6, 4);
    let entries = Catalog::builtin();
    let entries = entries.entries_for(4).unwrap();
    let mut pairs = 0;
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i..] {
            pairs += 1;
            let q = (f.extend_rank2)(&x4, &a.class, &b.class);
            ensure(q != target, || format!("{}+{} gives {target}", a.class, b.class))?;
        }
    }
    ensure(pairs == 28, || format!("{pairs} unordered pairs searched, expected 28"))
}

fn coverage_realized_set(_: &Formulas) -> std::result::Result<(), String> {
    let expected_four: Vec<Inv> = [
        (1, 6, 4),
        (2, 10, 6),
        (2, 11, 7),
        (2, 12, 8),
        (3, 19, 14),
        (3, 20, 16),
        (4, 29, 23),
        (4, 30, 26),
        (4, 32, 32),
        (5, 46, 52),
        (6, 64, 84),
    ]
    .into_iter()
    .map(|(c1, c2, c3)| inv(4, c1, c2, c3))
    .collect();
    for (k, expected) in [(4u32, expected_four), (3, vec![inv(3, 1, 5, 2)])] {
        let report = coverage_report(&Catalog::builtin(), k).map_err(|e| e.to_string())?;
        let realized: Vec<Inv> = report.realized().map(|e| e.invariants.clone()).collect();
        ensure(realized == expected, || {
            let shown: Vec<String> = realized.iter().map(ToString::to_string).collect();
            format!("k={k}: realized {}", shown.join(" "))
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_formulas_pass_everything() {
        let outcomes = run(&Formulas::standard());
        assert!(outcomes.len() >= 12);
        for o in &outcomes {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn every_fault_is_caught() {
        for fault in [Fault::C3Coefficient, Fault::TwistC2, Fault::WhitneyCrossTerm, Fault::ChiConstant] {
            let failed: Vec<_> = run(&Formulas::with_fault(fault))
                .into_iter()
                .filter(|o| !o.passed)
                .map(|o| o.name)
                .collect();
            assert!(!failed.is_empty(), "{fault:?} went unnoticed");
        }
    }
}
