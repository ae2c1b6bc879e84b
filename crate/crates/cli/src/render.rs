//! Output rendering. Tables are plain ASCII with left-aligned columns; JSON
//! goes through `serde_json::Value`, whose object keys are kept sorted, so
//! re-serializing parsed output reproduces it byte for byte.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use quartic_acm_core::catalog::{Rank2CatalogEntry, Rank2Class};
use quartic_acm_core::{BundleInvariants, Rational};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

pub fn ints<'a>(ns: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(ns.into_iter().map(int).collect())
}

pub fn rational(x: &Rational) -> Value {
    json!({
        "value": x.to_string(),
        "integral": x.is_integer(),
        "integer": if x.is_integer() { int(x.numer()) } else { Value::Null },
    })
}

pub fn quadruple(q: &BundleInvariants) -> Value {
    json!({ "k": q.k, "c1": int(&q.c1), "c2": int(&q.c2), "c3": int(&q.c3) })
}

pub fn class(c: &Rank2Class) -> Value {
    json!({ "c1": int(&c.c1), "c2": int(&c.c2) })
}

pub fn catalog_entry(e: &Rank2CatalogEntry) -> Value {
    json!({
        "r": e.r,
        "c1": int(&e.class.c1),
        "c2": int(&e.class.c2),
        "star": e.satisfies_star,
        "globally_generated": e.globally_generated.tag(),
    })
}

/// `k,c1,c2,c3`, the same syntax the CLI accepts.
pub fn quadruple_arg(q: &BundleInvariants) -> String {
    format!("{},{},{},{}", q.k, q.c1, q.c2, q.c3)
}

pub fn envelope(command: &str, inputs: Value, results: Value) -> String {
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    });
    canonical_json(&doc)
}

pub fn canonical_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("Value always serializes");
    s.push('\n');
    s
}

pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut text = String::new();
        for (cell, w) in cells.zip(&widths) {
            text.push_str(&format!("{cell:<w$}  "));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns_and_trims() {
        let rows = vec![
            vec!["3".to_string(), "[8,11]".to_string(), "c2-6".to_string()],
            vec!["3".to_string(), "5".to_string(), "2".to_string()],
        ];
        assert_eq!(
            table(&["k", "c2", "c3"], &rows),
            "k  c2      c3\n3  [8,11]  c2-6\n3  5       2\n"
        );
    }

    #[test]
    fn big_integers_become_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&big), Value::from("123456789012345678901234567890"));
        assert_eq!(int(&BigInt::from(-7)), Value::from(-7));
    }

    #[test]
    fn csv_quotes_when_needed() {
        let rows = vec![vec!["a,b".to_string(), "c".to_string()]];
        assert_eq!(csv(&["x", "y"], &rows), "x,y\n\"a,b\",c\n");
    }
}
