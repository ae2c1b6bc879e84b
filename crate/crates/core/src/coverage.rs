//! Which admissible quadruples are known to occur.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::catalog::{Catalog, Pool};
use crate::enumerate::enumerate_acm_r4;
use crate::extension::{extension_quadruples, ExtensionWitness};
use crate::{BundleInvariants, Result};

/// A bundle obtained from a curve through the Hartshorne-Serre correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveExample {
    pub invariants: BundleInvariants,
    pub curve_degree: u32,
    pub curve_genus: u32,
    pub description: &'static str,
}

/// The two curve constructions on a general quartic threefold.
pub fn curve_examples() -> Vec<CurveExample> {
    alloc::vec![
        CurveExample {
            invariants: BundleInvariants {
                k: 4,
                c1: 1.into(),
                c2: 6.into(),
                c3: 4.into(),
            },
            curve_degree: 6,
            curve_genus: 3,
            description: "projectively normal space sextic of genus 3 on a smooth quartic surface",
        },
        CurveExample {
            invariants: BundleInvariants {
                k: 3,
                c1: 1.into(),
                c2: 5.into(),
                c3: 2.into(),
            },
            curve_degree: 5,
            curve_genus: 2,
            description: "curve of type (2,3) on a smooth quadric surface in P3",
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    Extension(ExtensionWitness),
    Curve(CurveExample),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverageStatus {
    RealizedByExtension,
    RealizedByCurve,
    Open,
}

impl CoverageStatus {
    pub fn tag(self) -> &'static str {
        match self {
            CoverageStatus::RealizedByExtension => "realized-by-extension",
            CoverageStatus::RealizedByCurve => "realized-by-curve",
            CoverageStatus::Open => "open",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageEntry {
    pub invariants: BundleInvariants,
    pub genus: BigInt,
    pub realizations: Vec<Realization>,
}

impl CoverageEntry {
    pub fn status(&self) -> CoverageStatus {
        let by_extension = self
            .realizations
            .iter()
            .any(|r| matches!(r, Realization::Extension(_)));
        if by_extension {
            CoverageStatus::RealizedByExtension
        } else if self.realizations.is_empty() {
            CoverageStatus::Open
        } else {
            CoverageStatus::RealizedByCurve
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub k: u32,
    /// Every admissible quadruple, ascending in `c1` then `c2`.
    pub entries: Vec<CoverageEntry>,
}

impl CoverageReport {
    pub fn realized(&self) -> impl Iterator<Item = &CoverageEntry> {
        self.entries.iter().filter(|e| e.status() != CoverageStatus::Open)
    }

    pub fn open(&self) -> impl Iterator<Item = &CoverageEntry> {
        self.entries.iter().filter(|e| e.status() == CoverageStatus::Open)
    }
}

/// Labels every admissible rank-`k` quadruple on `X₄` by whether a ★-pool
/// extension or a curve construction produces it.
pub fn coverage_report(catalog: &Catalog, k: u32) -> Result<CoverageReport> {
    let witnesses = extension_quadruples(catalog, 4, Pool::StarOnly)?;
    let curves = curve_examples();
    let mut entries = Vec::new();
    for row in enumerate_acm_r4(k)? {
        for (quad, entry) in row.quadruples().zip(&row.entries) {
            let mut realizations: Vec<Realization> = witnesses
                .iter()
                .filter(|w| w.result == quad)
                .cloned()
                .map(Realization::Extension)
                .collect();
            realizations.extend(
                curves
                    .iter()
                    .filter(|c| c.invariants == quad)
                    .cloned()
                    .map(Realization::Curve),
            );
            entries.push(CoverageEntry {
                invariants: quad,
                genus: entry.genus.clone(),
                realizations,
            });
        }
    }
    Ok(CoverageReport { k, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(k: u32, c1: i64, c2: i64, c3: i64) -> BundleInvariants {
        BundleInvariants::new(k, c1, c2, c3).unwrap()
    }

    #[test]
    fn rank_four_counts() {
        let report = coverage_report(&Catalog::builtin(), 4).unwrap();
        assert_eq!(report.entries.len(), 22);
        assert_eq!(report.realized().count(), 11);
        assert!(report.open().any(|e| e.invariants == inv(4, 2, 8, 4)));
    }

    #[test]
    fn rank_three_only_curve() {
        let report = coverage_report(&Catalog::builtin(), 3).unwrap();
        let realized: Vec<_> = report.realized().collect();
        assert_eq!(realized.len(), 1);
        assert_eq!(realized[0].invariants, inv(3, 1, 5, 2));
        assert_eq!(realized[0].status(), CoverageStatus::RealizedByCurve);
        assert!(report.open().any(|e| e.invariants == inv(3, 2, 8, 2)));
    }

    #[test]
    fn curve_examples_have_matching_genus() {
        for c in curve_examples() {
            let g = crate::chern::genus_r4(&c.invariants);
            assert_eq!(g, crate::Rational::from(i64::from(c.curve_genus)));
            assert_eq!(c.invariants.c2, BigInt::from(c.curve_degree));
        }
    }
}
