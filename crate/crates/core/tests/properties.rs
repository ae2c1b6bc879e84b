use num_bigint::BigInt;
use proptest::prelude::*;

use quartic_acm_core::bounds::{c2_interval_r4, c2_upper_general, c3_from_acm, genus_from_acm};
use quartic_acm_core::catalog::{Catalog, Pool, Rank2Class};
use quartic_acm_core::chern::{chi_bundle, chi_line_bundle, genus_general, genus_r4, twist};
use quartic_acm_core::enumerate::enumerate_acm_r4;
use quartic_acm_core::extension::{decompose, extend_rank2, extension_quadruples};
use quartic_acm_core::{BundleInvariants, HypersurfaceContext, Rational};

/// Chow ring of `X_r` in the basis `1, H, L, P` with `H² = rL`, `HL = P`,
/// `H³ = rP`; everything of codimension ≥ 4 vanishes.
fn ring_mul(r: i64, a: &[BigInt; 4], b: &[BigInt; 4]) -> [BigInt; 4] {
    // basis_product[i][j] = (codimension, coefficient) of e_i · e_j
    let product = |i: usize, j: usize| -> Option<(usize, i64)> {
        if i + j > 3 {
            return None;
        }
        Some(match (i.min(j), i.max(j)) {
            (0, m) => (m, 1),
            (1, 1) => (2, r),
            (1, 2) => (3, 1),
            _ => unreachable!(),
        })
    };
    let mut out: [BigInt; 4] = Default::default();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if let Some((deg, coeff)) = product(i, j) {
                out[deg] += x * y * coeff;
            }
        }
    }
    out
}

fn total_chern(class: &Rank2Class) -> [BigInt; 4] {
    [BigInt::from(1), class.c1.clone(), class.c2.clone(), BigInt::from(0)]
}

fn inv(k: u32, c1: i64, c2: i64, c3: i64) -> BundleInvariants {
    BundleInvariants::new(k, c1, c2, c3).unwrap()
}

fn any_invariants() -> impl Strategy<Value = BundleInvariants> {
    (1u32..=8, -30i64..=30, -200i64..=200, -500i64..=500).prop_map(|(k, a, b, c)| inv(k, a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn twist_round_trip(e in any_invariants(), r in 1u32..=8, n in -10i64..=10) {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let there = twist(&ctx, &e, n).unwrap();
        prop_assert_eq!(twist(&ctx, &there, -n).unwrap(), e);
    }

    #[test]
    fn twist_is_additive(e in any_invariants(), r in 1u32..=8, m in -10i64..=10, n in -10i64..=10) {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let stepwise = twist(&ctx, &twist(&ctx, &e, m).unwrap(), n).unwrap();
        prop_assert_eq!(stepwise, twist(&ctx, &e, m + n).unwrap());
    }

    #[test]
    fn chi_of_twists_is_cubic(e in any_invariants(), r in 1u32..=8) {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let mut values: Vec<Rational> = (-5i64..=5)
            .map(|n| chi_bundle(&ctx, &twist(&ctx, &e, n).unwrap()))
            .collect();
        for _ in 0..4 {
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        prop_assert!(values.iter().all(Rational::is_zero));
    }

    #[test]
    fn genus_formulas_agree_on_quartic(e in any_invariants().prop_filter("rank >= 2", |e| e.k >= 2)) {
        let general = genus_general(&HypersurfaceContext::quartic(), &e).unwrap();
        prop_assert_eq!(general, genus_r4(&e));
    }

    #[test]
    fn acm_relations_on_quartic(k in 2u32..=8, c1 in -20i64..=20, c2 in -300i64..=300) {
        let x4 = HypersurfaceContext::quartic();
        let c3 = c3_from_acm(k, c1, c2).unwrap();
        let e = BundleInvariants::new(k, c1, c2, c3).unwrap();
        prop_assert!(chi_bundle(&x4, &twist(&x4, &e, -1).unwrap()).is_zero());
        prop_assert_eq!(chi_bundle(&x4, &e), Rational::from(2 * c1 * c1 - c2 + 2 * i64::from(k)));
        prop_assert_eq!(genus_r4(&e), Rational::from(genus_from_acm(k, c1, c2).unwrap()));
    }

    #[test]
    fn whitney_oracle(r in 1u32..=8, a in (-20i64..=20, -200i64..=200), b in (-20i64..=20, -200i64..=200)) {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let (e1, e2) = (Rank2Class::new(a.0, a.1), Rank2Class::new(b.0, b.1));
        let total = ring_mul(i64::from(r), &total_chern(&e1), &total_chern(&e2));
        let got = extend_rank2(&ctx, &e1, &e2);
        prop_assert_eq!([got.c1.clone(), got.c2.clone(), got.c3.clone()], [total[1].clone(), total[2].clone(), total[3].clone()]);
        prop_assert_eq!(got, extend_rank2(&ctx, &e2, &e1));
    }
}

#[test]
fn chi_line_bundle_constant_term_and_integrality() {
    for r in 1..=10u32 {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let ri = i64::from(r);
        let constant = Rational::new(ri * (5 - ri) * (10 - 5 * ri + ri * ri), 24).unwrap();
        assert_eq!(chi_line_bundle(&ctx, 0), constant);
        for a in -10..=10i64 {
            assert!(chi_line_bundle(&ctx, a).is_integer(), "r={r} a={a}");
        }
    }
}

#[test]
fn whitney_oracle_on_catalog_pairs() {
    let cat = Catalog::builtin();
    for r in [3u32, 4] {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let entries = cat.entries_for(r).unwrap();
        for a in &entries {
            for b in &entries {
                let total = ring_mul(i64::from(r), &total_chern(&a.class), &total_chern(&b.class));
                let got = extend_rank2(&ctx, &a.class, &b.class);
                assert_eq!((got.c1, got.c2, got.c3), (total[1].clone(), total[2].clone(), total[3].clone()));
            }
        }
    }
}

#[test]
fn chi_is_additive_on_extensions() {
    // A rank-two bundle has c3 = 0, so both sides are plain Riemann-Roch.
    let cat = Catalog::builtin();
    for r in [3u32, 4] {
        let ctx = HypersurfaceContext::new(r).unwrap();
        for w in extension_quadruples(&cat, r, Pool::Normalized).unwrap() {
            let lift = |c: &Rank2Class| BundleInvariants::new(2, c.c1.clone(), c.c2.clone(), 0).unwrap();
            let sum = chi_bundle(&ctx, &lift(&w.left.class)) + chi_bundle(&ctx, &lift(&w.right.class));
            assert_eq!(chi_bundle(&ctx, &w.result), sum, "{w:?}");
        }
    }
}

#[test]
fn enumerated_rows_satisfy_closed_forms() {
    let x4 = HypersurfaceContext::quartic();
    for k in [3u32, 4] {
        for row in enumerate_acm_r4(k).unwrap() {
            let general = c2_upper_general(&x4, k, row.c1.clone()).unwrap();
            assert!(!general.floored);
            assert!(row.bounds.interval.upper <= general.value);
            for (e, entry) in row.quadruples().zip(&row.entries) {
                assert_eq!(genus_r4(&e), Rational::from(entry.genus.clone()));
                assert!(chi_bundle(&x4, &twist(&x4, &e, -1).unwrap()).is_zero());
                assert_eq!(row.c3_form.eval(&entry.c2), entry.c3);
                assert_eq!(row.genus_form.eval(&entry.c2), entry.genus);
            }
        }
    }
}

#[test]
fn general_upper_bound_is_always_integral() {
    // r·c1(c1-r+2)/2 and r(r-1)(r-2)/6 are integers, so the floor flag never fires.
    for r in 1..=12u32 {
        let ctx = HypersurfaceContext::new(r).unwrap();
        for k in 2..=8 {
            for c1 in 1..=20 {
                assert!(!c2_upper_general(&ctx, k, c1).unwrap().floored);
            }
        }
    }
}

#[test]
fn extensions_are_admissible_and_decomposable() {
    let cat = Catalog::builtin();
    let rows = enumerate_acm_r4(4).unwrap();
    for w in extension_quadruples(&cat, 4, Pool::StarOnly).unwrap() {
        let row = rows.iter().find(|row| row.c1 == w.result.c1).expect("c1 in range");
        assert!(row.quadruples().any(|q| q == w.result), "{} not admissible", w.result);
    }
    for pool in [Pool::StarOnly, Pool::Normalized] {
        for w in extension_quadruples(&cat, 4, pool).unwrap() {
            assert!(decompose(&cat, 4, &w.result, pool).unwrap().contains(&w));
            let g = genus_r4(&w.result);
            if pool == Pool::StarOnly {
                assert!(g.is_integer() && !g.is_negative(), "{}: genus {g}", w.result);
            }
        }
    }
}

#[test]
fn interval_endpoints_match_table() {
    let expected = [
        (3, 1, 5, 5),
        (3, 2, 8, 11),
        (3, 3, 17, 18),
        (3, 4, 27, 28),
        (4, 1, 6, 6),
        (4, 2, 8, 12),
        (4, 3, 16, 22),
        (4, 4, 28, 32),
        (4, 5, 44, 46),
        (4, 6, 64, 64),
    ];
    for (k, c1, lo, hi) in expected {
        let i = c2_interval_r4(k, c1).interval;
        assert_eq!((i.lower, i.upper), (BigInt::from(lo), BigInt::from(hi)), "k={k} c1={c1}");
    }
}
