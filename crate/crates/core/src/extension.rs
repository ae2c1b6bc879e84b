//! Rank-four bundles built as extensions `0 → E' → E → E'' → 0` of rank-two
//! ACM bundles, and the reverse search for such a presentation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::catalog::{Catalog, Pool, Rank2CatalogEntry, Rank2Class};
use crate::{BundleInvariants, Error, HypersurfaceContext, Result};

/// Invariants of an extension of two rank-two bundles, by the Whitney formula
/// `c(E) = c(E')·c(E'')` with `H² = rL`:
/// `(4; c1'+c1'', c2' + r·c1'c1'' + c2'', c2'c1'' + c1'c2'')`.
pub fn extend_rank2(ctx: &HypersurfaceContext, e1: &Rank2Class, e2: &Rank2Class) -> BundleInvariants {
    let r = BigInt::from(ctx.degree());
    BundleInvariants {
        k: 4,
        c1: &e1.c1 + &e2.c1,
        c2: &e1.c2 + r * &e1.c1 * &e2.c1 + &e2.c2,
        c3: &e1.c2 * &e2.c1 + &e1.c1 * &e2.c2,
    }
}

/// An unordered pair of catalog entries together with the invariants of
/// their extension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtensionWitness {
    pub result: BundleInvariants,
    pub left: Rank2CatalogEntry,
    pub right: Rank2CatalogEntry,
}

impl ExtensionWitness {
    /// Builds the witness with `left ≤ right`, so swapped pairs compare equal.
    pub fn new(ctx: &HypersurfaceContext, a: &Rank2CatalogEntry, b: &Rank2CatalogEntry) -> Self {
        let (left, right) = if a <= b { (a, b) } else { (b, a) };
        ExtensionWitness {
            result: extend_rank2(ctx, &left.class, &right.class),
            left: left.clone(),
            right: right.clone(),
        }
    }
}

/// Every unordered pair (with repetition) of pool entries of degree `r`,
/// sorted by resulting quadruple, then left entry.
pub fn extension_quadruples(catalog: &Catalog, r: u32, pool: Pool) -> Result<Vec<ExtensionWitness>> {
    let ctx = HypersurfaceContext::new(r)?;
    let entries: Vec<_> = catalog
        .entries_for(r)?
        .into_iter()
        .filter(|e| pool.admits(e))
        .collect();
    let mut witnesses = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i..] {
            witnesses.push(ExtensionWitness::new(&ctx, a, b));
        }
    }
    witnesses.sort();
    witnesses.dedup();
    Ok(witnesses)
}

/// Groups witnesses by the quadruple they produce.
pub fn group_by_result(witnesses: &[ExtensionWitness]) -> BTreeMap<&BundleInvariants, Vec<&ExtensionWitness>> {
    let mut groups: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for w in witnesses {
        groups.entry(&w.result).or_default().push(w);
    }
    groups
}

/// All pool pairs whose extension has exactly the invariants `target`.
///
/// Only rank `2 + 2` presentations are searched; an empty result is a
/// definitive negative over the catalog.
pub fn decompose(
    catalog: &Catalog,
    r: u32,
    target: &BundleInvariants,
    pool: Pool,
) -> Result<Vec<ExtensionWitness>> {
    if target.k != 4 {
        return Err(Error::RankUnsupported {
            rank: target.k,
            expected: "k = 4",
        });
    }
    Ok(extension_quadruples(catalog, r, pool)?
        .into_iter()
        .filter(|w| &w.result == target)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(c1: i64, c2: i64) -> Rank2Class {
        Rank2Class::new(c1, c2)
    }

    fn inv(k: u32, c1: i64, c2: i64, c3: i64) -> BundleInvariants {
        BundleInvariants::new(k, c1, c2, c3).unwrap()
    }

    #[test]
    fn extend_examples() {
        let x4 = HypersurfaceContext::quartic();
        assert_eq!(extend_rank2(&x4, &class(3, 14), &class(3, 14)), inv(4, 6, 64, 84));
        assert_eq!(extend_rank2(&x4, &class(3, 14), &class(2, 8)), inv(4, 5, 46, 52));
        assert_eq!(extend_rank2(&x4, &class(1, 3), &class(1, 4)), inv(4, 2, 11, 7));
    }

    #[test]
    fn star_pool_on_quartic() {
        let ws = extension_quadruples(&Catalog::builtin(), 4, Pool::StarOnly).unwrap();
        assert_eq!(ws.len(), 10);
        assert_eq!(group_by_result(&ws).len(), 10);
        assert!(ws.iter().any(|w| w.result == inv(4, 4, 32, 32)));
    }

    #[test]
    fn normalized_pool_is_superset() {
        let star = extension_quadruples(&Catalog::builtin(), 4, Pool::StarOnly).unwrap();
        let all = extension_quadruples(&Catalog::builtin(), 4, Pool::Normalized).unwrap();
        assert_eq!(all.len(), 28);
        assert!(star.iter().all(|w| all.contains(w)));
        assert!(all.iter().any(|w| !w.left.satisfies_star || !w.right.satisfies_star));
    }

    #[test]
    fn cubic_star_pool() {
        let ws = extension_quadruples(&Catalog::builtin(), 3, Pool::StarOnly).unwrap();
        let results: Vec<_> = ws.iter().map(|w| w.result.clone()).collect();
        assert_eq!(results, alloc::vec![inv(4, 2, 7, 4), inv(4, 3, 13, 9), inv(4, 4, 22, 20)]);
    }

    #[test]
    fn unsupported_degree() {
        assert_eq!(
            extension_quadruples(&Catalog::builtin(), 5, Pool::StarOnly),
            Err(Error::UnsupportedDegree(5))
        );
    }

    #[test]
    fn decompose_examples() {
        let cat = Catalog::builtin();
        assert!(decompose(&cat, 4, &inv(4, 1, 6, 4), Pool::Normalized).unwrap().is_empty());

        let top = decompose(&cat, 4, &inv(4, 6, 64, 84), Pool::StarOnly).unwrap();
        assert_eq!(top.len(), 1);
        assert_eq!((top[0].left.class.clone(), top[0].right.class.clone()), (class(3, 14), class(3, 14)));

        let mid = decompose(&cat, 4, &inv(4, 4, 30, 26), Pool::StarOnly).unwrap();
        assert_eq!(mid.len(), 1);
        assert_eq!((mid[0].left.class.clone(), mid[0].right.class.clone()), (class(1, 4), class(3, 14)));
    }

    #[test]
    fn decompose_gap_depends_on_pool() {
        let cat = Catalog::builtin();
        let target = inv(4, 4, 31, 29);
        assert!(decompose(&cat, 4, &target, Pool::StarOnly).unwrap().is_empty());
        // (1,5) fails ★ but still produces this quadruple.
        let all = decompose(&cat, 4, &target, Pool::Normalized).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].left.class, class(1, 5));
    }

    #[test]
    fn decompose_rejects_other_ranks() {
        assert!(matches!(
            decompose(&Catalog::builtin(), 4, &inv(3, 1, 5, 2), Pool::Normalized),
            Err(Error::RankUnsupported { rank: 3, .. })
        ));
    }

    #[test]
    fn witness_is_unordered() {
        let x4 = HypersurfaceContext::quartic();
        let cat = Catalog::builtin();
        let e = cat.entries_for(4).unwrap();
        assert_eq!(ExtensionWitness::new(&x4, e[2], e[6]), ExtensionWitness::new(&x4, e[6], e[2]));
    }
}
