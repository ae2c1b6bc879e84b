//! Plain-text rank-two catalog files.
//!
//! One entry per line, `r c1 c2 star gg`, fields separated by whitespace:
//!
//! ```text
//! # r c1 c2 star gg
//! 4  3 14 1    always
//! 4  2  8 1    generic
//! ```
//!
//! `star` is `0` or `1`; `gg` is one of `always`, `generic`, `no`. Lines
//! starting with `#` and blank lines are ignored.

use std::path::Path;

use num_bigint::BigInt;
use quartic_acm_core::catalog::{Catalog, GlobalGeneration, Rank2CatalogEntry, Rank2Class};

#[derive(Debug, thiserror::Error)]
pub enum CatalogFileError {
    #[error("catalog line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read catalog {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn parse_line(text: &str) -> Result<Rank2CatalogEntry, String> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let [r, c1, c2, star, gg] = fields[..] else {
        return Err(format!("expected 5 fields `r c1 c2 star gg`, found {}", fields.len()));
    };
    let r: u32 = r
        .parse()
        .ok()
        .filter(|&r| r >= 1)
        .ok_or_else(|| format!("degree `{r}` is not a positive integer"))?;
    let c1: BigInt = c1.parse().map_err(|_| format!("c1 `{c1}` is not an integer"))?;
    let c2: BigInt = c2.parse().map_err(|_| format!("c2 `{c2}` is not an integer"))?;
    let satisfies_star = match star {
        "0" => false,
        "1" => true,
        other => return Err(format!("star flag `{other}` must be 0 or 1")),
    };
    let globally_generated = GlobalGeneration::from_tag(gg)
        .ok_or_else(|| format!("global generation `{gg}` must be always, generic or no"))?;
    Ok(Rank2CatalogEntry {
        class: Rank2Class { c1, c2 },
        r,
        satisfies_star,
        globally_generated,
    })
}

pub fn parse(text: &str) -> Result<Catalog, CatalogFileError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry = parse_line(line).map_err(|message| CatalogFileError::Parse {
            line: idx + 1,
            message,
        })?;
        entries.push(entry);
    }
    Ok(Catalog::from_entries(entries))
}

pub fn load(path: &Path) -> Result<Catalog, CatalogFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogFileError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

/// Writes a catalog in the same format `parse` reads.
pub fn write(catalog: &Catalog) -> String {
    let mut out = String::from("# r c1 c2 star gg\n");
    for e in catalog.entries() {
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            e.r,
            e.class.c1,
            e.class.c2,
            u8::from(e.satisfies_star),
            e.globally_generated.tag()
        ));
    }
    out
}
