//! Normalized, undecomposable rank-two ACM bundles on the cubic and quartic
//! threefold, up to twist.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::{Error, Result};

/// Whether bundles in a class are generated by their global sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobalGeneration {
    Always,
    /// The general member is; nothing is claimed about every member.
    Generically,
    No,
}

impl GlobalGeneration {
    pub fn tag(self) -> &'static str {
        match self {
            GlobalGeneration::Always => "always",
            GlobalGeneration::Generically => "generic",
            GlobalGeneration::No => "no",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "always" => Some(GlobalGeneration::Always),
            "generic" => Some(GlobalGeneration::Generically),
            "no" => Some(GlobalGeneration::No),
            _ => None,
        }
    }
}

/// Chern numbers `(c1, c2)` of a rank-two bundle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank2Class {
    pub c1: BigInt,
    pub c2: BigInt,
}

impl Rank2Class {
    pub fn new(c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        Rank2Class {
            c1: c1.into(),
            c2: c2.into(),
        }
    }
}

impl fmt::Display for Rank2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank2CatalogEntry {
    pub class: Rank2Class,
    pub r: u32,
    pub satisfies_star: bool,
    pub globally_generated: GlobalGeneration,
}

impl Rank2CatalogEntry {
    pub fn new(
        r: u32,
        c1: i64,
        c2: i64,
        satisfies_star: bool,
        globally_generated: GlobalGeneration,
    ) -> Self {
        Rank2CatalogEntry {
            class: Rank2Class::new(c1, c2),
            r,
            satisfies_star,
            globally_generated,
        }
    }
}

/// Which catalog entries an extension search may draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pool {
    /// Every normalized undecomposable class.
    Normalized,
    /// Only classes whose bundles satisfy condition ★.
    StarOnly,
}

impl Pool {
    pub fn admits(self, entry: &Rank2CatalogEntry) -> bool {
        match self {
            Pool::Normalized => true,
            Pool::StarOnly => entry.satisfies_star,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Pool::Normalized => "normalized",
            Pool::StarOnly => "star",
        }
    }
}

/// A set of rank-two classes, possibly spanning several ambient degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<Rank2CatalogEntry>,
}

impl Catalog {
    /// The classifications for `r = 3` and `r = 4`.
    pub fn builtin() -> Self {
        use GlobalGeneration::*;
        let e = Rank2CatalogEntry::new;
        Catalog {
            entries: alloc::vec![
                e(3, 0, 1, false, No),
                e(3, 1, 2, true, No),
                e(3, 2, 5, true, No),
                e(4, -1, 1, false, No),
                e(4, 0, 2, false, No),
                e(4, 1, 3, true, No),
                e(4, 1, 4, true, No),
                e(4, 1, 5, false, No),
                e(4, 2, 8, true, Generically),
                e(4, 3, 14, true, Always),
            ],
        }
    }

    pub fn from_entries(entries: Vec<Rank2CatalogEntry>) -> Self {
        Catalog { entries }
    }

    pub fn entries(&self) -> &[Rank2CatalogEntry] {
        &self.entries
    }

    /// Entries for degree `r`, or [`Error::UnsupportedDegree`] if there are none.
    pub fn entries_for(&self, r: u32) -> Result<Vec<&Rank2CatalogEntry>> {
        let found: Vec<_> = self.entries.iter().filter(|e| e.r == r).collect();
        if found.is_empty() {
            return Err(Error::UnsupportedDegree(r));
        }
        Ok(found)
    }
}

/// The built-in classification for degree `r ∈ {3, 4}`.
pub fn catalog(r: u32) -> Result<Vec<Rank2CatalogEntry>> {
    Ok(Catalog::builtin()
        .entries_for(r)?
        .into_iter()
        .cloned()
        .collect())
}
