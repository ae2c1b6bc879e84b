//! One function per subcommand. Each returns the complete standard-output
//! text, so nothing is printed unless the command succeeds.

use num_bigint::BigInt;
use quartic_acm_core::bounds::hs_sufficient_condition;
use quartic_acm_core::catalog::{Catalog, Pool};
use quartic_acm_core::chern::{chi_bundle, chi_line_bundle, genus_general, twist};
use quartic_acm_core::coverage::{coverage_report, Realization};
use quartic_acm_core::enumerate::{enumerate_acm_r4, EnumerationRow};
use quartic_acm_core::extension::{decompose, extension_quadruples, ExtensionWitness};
use quartic_acm_core::{BundleInvariants, CurveInvariants, HypersurfaceContext};
use serde_json::{json, Value};

use crate::render::{self, Format};
use crate::selfcheck::{self, Formulas};
use crate::CliError;

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// Diagnostics for standard error.
    pub notes: Vec<String>,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output { stdout, notes: Vec::new() }
    }
}

/// Parses `k,c1,c2,c3` (no spaces, negatives allowed, `k ≥ 1`).
pub fn parse_quadruple(s: &str) -> Result<BundleInvariants, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [k, c1, c2, c3] = parts[..] else {
        return Err(format!("expected k,c1,c2,c3 but got `{s}`"));
    };
    let int = |x: &str| x.parse::<BigInt>().map_err(|_| format!("`{x}` is not an integer"));
    let k: u32 = k.parse().map_err(|_| format!("rank `{k}` is not a positive integer"))?;
    BundleInvariants::new(k, int(c1)?, int(c2)?, int(c3)?).map_err(|e| e.to_string())
}

pub enum ChiInput {
    Line(BigInt),
    Bundle(BundleInvariants),
}

fn context(r: u32) -> Result<HypersurfaceContext, CliError> {
    Ok(HypersurfaceContext::new(r)?)
}

pub fn chi(r: u32, input: &ChiInput, format: Format) -> Result<Output, CliError> {
    let ctx = context(r)?;
    let (value, inputs, label) = match input {
        ChiInput::Line(a) => (
            chi_line_bundle(&ctx, a.clone()),
            json!({ "r": r, "line": render::int(a) }),
            format!("O({a})"),
        ),
        ChiInput::Bundle(q) => (
            chi_bundle(&ctx, q),
            json!({ "r": r, "bundle": render::quadruple(q) }),
            render::quadruple_arg(q),
        ),
    };
    Ok(match format {
        Format::Table => format!("{value}\n"),
        Format::Json => render::envelope("chi", inputs, render::rational(&value)),
        Format::Csv => render::csv(&["r", "input", "chi"], &[vec![r.to_string(), label, value.to_string()]]),
    }
    .into())
}

pub fn twist_cmd(r: u32, q: &BundleInvariants, n: &BigInt, format: Format) -> Result<Output, CliError> {
    let ctx = context(r)?;
    let out = twist(&ctx, q, n.clone())?;
    Ok(match format {
        Format::Table => format!("{}\n", render::quadruple_arg(&out)),
        Format::Json => render::envelope(
            "twist",
            json!({ "r": r, "bundle": render::quadruple(q), "n": render::int(n) }),
            render::quadruple(&out),
        ),
        Format::Csv => render::csv(
            &["k", "c1", "c2", "c3"],
            &[vec![out.k.to_string(), out.c1.to_string(), out.c2.to_string(), out.c3.to_string()]],
        ),
    }
    .into())
}

pub fn genus(r: u32, q: &BundleInvariants, format: Format) -> Result<Output, CliError> {
    let ctx = context(r)?;
    let g = genus_general(&ctx, q)?;
    // The vanishing criterion needs an honest curve: integral genus, positive degree.
    let criterion = match (g.is_integer(), CurveInvariants::new(q.c2.clone(), g.numer().clone())) {
        (true, Ok(curve)) => Some(hs_sufficient_condition(&ctx, q.c1.clone(), &curve)),
        _ => None,
    };
    Ok(match format {
        Format::Table => format!("{g}\n"),
        Format::Json => {
            let mut results = render::rational(&g);
            results["sufficient_condition"] = criterion.map_or(Value::Null, Value::from);
            render::envelope("genus", json!({ "r": r, "bundle": render::quadruple(q) }), results)
        }
        Format::Csv => render::csv(
            &["r", "bundle", "genus", "sufficient_condition"],
            &[vec![
                r.to_string(),
                render::quadruple_arg(q),
                g.to_string(),
                criterion.map_or(String::new(), |c| c.to_string()),
            ]],
        ),
    }
    .into())
}

fn c2_cell(row: &EnumerationRow) -> String {
    let i = &row.bounds.interval;
    if i.is_empty() {
        "empty".into()
    } else if i.lower == i.upper {
        i.lower.to_string()
    } else {
        format!("[{},{}]", i.lower, i.upper)
    }
}

fn formula_cells(row: &EnumerationRow) -> (String, String) {
    match row.entries.as_slice() {
        [] => ("-".into(), "-".into()),
        [only] => (only.c3.to_string(), only.genus.to_string()),
        _ => (row.c3_form.to_string(), row.genus_form.to_string()),
    }
}

pub fn enumerate(k: u32, format: Format) -> Result<Output, CliError> {
    let rows = enumerate_acm_r4(k)?;
    let mut notes = Vec::new();
    if rows.iter().any(|r| !r.bounds.refined) {
        notes.push(format!(
            "note: rank {k} uses the unrefined c2 bounds only; the rows are not claimed complete"
        ));
    }
    let stdout = match format {
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let (c3, g) = formula_cells(row);
                    vec![row.k.to_string(), row.c1.to_string(), c2_cell(row), c3, g]
                })
                .collect();
            render::table(&["k", "c1", "c2", "c3", "g"], &cells)
        }
        Format::Json => {
            let results: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let tags = |s: &[quartic_acm_core::bounds::BoundSource]| -> Vec<&str> {
                        s.iter().map(|b| b.tag()).collect()
                    };
                    json!({
                        "k": row.k,
                        "c1": render::int(&row.c1),
                        "c2": render::ints(row.entries.iter().map(|e| &e.c2)),
                        "c3": render::ints(row.entries.iter().map(|e| &e.c3)),
                        "genus": render::ints(row.entries.iter().map(|e| &e.genus)),
                        "c2_interval": {
                            "lower": render::int(&row.bounds.interval.lower),
                            "upper": render::int(&row.bounds.interval.upper),
                        },
                        "empty": row.is_empty(),
                        "c3_formula": row.c3_form.to_string(),
                        "genus_formula": row.genus_form.to_string(),
                        "lower_sources": tags(&row.bounds.lower_sources),
                        "upper_sources": tags(&row.bounds.upper_sources),
                        "refined": row.bounds.refined,
                    })
                })
                .collect();
            render::envelope("enumerate", json!({ "k": k }), Value::Array(results))
        }
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .flat_map(|row| {
                    row.entries.iter().map(move |e| {
                        vec![
                            row.k.to_string(),
                            row.c1.to_string(),
                            e.c2.to_string(),
                            e.c3.to_string(),
                            e.genus.to_string(),
                        ]
                    })
                })
                .collect();
            render::csv(&["k", "c1", "c2", "c3", "g"], &cells)
        }
    };
    Ok(Output { stdout, notes })
}

fn witness_json(w: &ExtensionWitness) -> Value {
    json!({
        "result": render::quadruple(&w.result),
        "left": render::catalog_entry(&w.left),
        "right": render::catalog_entry(&w.right),
    })
}

fn witness_pair(w: &ExtensionWitness) -> String {
    format!("{}+{}", w.left.class, w.right.class)
}

pub fn extensions(catalog: &Catalog, r: u32, pool: Pool, format: Format) -> Result<Output, CliError> {
    let ws = extension_quadruples(catalog, r, pool)?;
    Ok(match format {
        Format::Table => {
            let cells: Vec<Vec<String>> = ws
                .iter()
                .map(|w| vec![w.result.to_string(), w.left.class.to_string(), w.right.class.to_string()])
                .collect();
            render::table(&["quadruple", "left", "right"], &cells)
        }
        Format::Json => render::envelope(
            "extensions",
            json!({ "r": r, "pool": pool.tag() }),
            Value::Array(ws.iter().map(witness_json).collect()),
        ),
        Format::Csv => {
            let cells: Vec<Vec<String>> = ws
                .iter()
                .map(|w| {
                    let q = &w.result;
                    [&BigInt::from(q.k), &q.c1, &q.c2, &q.c3, &w.left.class.c1, &w.left.class.c2, &w.right.class.c1, &w.right.class.c2]
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .collect();
            render::csv(&["k", "c1", "c2", "c3", "left_c1", "left_c2", "right_c1", "right_c2"], &cells)
        }
    }
    .into())
}

pub fn decompose_cmd(
    catalog: &Catalog,
    r: u32,
    target: &BundleInvariants,
    pool: Pool,
    expect_witness: bool,
    format: Format,
) -> Result<Output, CliError> {
    let ws = decompose(catalog, r, target, pool)?;
    if ws.is_empty() && expect_witness {
        return Err(CliError::NoWitness(target.to_string(), pool.tag()));
    }
    Ok(match format {
        Format::Table if ws.is_empty() => "no decomposition\n".to_string(),
        Format::Table => ws.iter().map(|w| format!("{}\n", witness_pair(w))).collect(),
        Format::Json => render::envelope(
            "decompose",
            json!({ "r": r, "target": render::quadruple(target), "pool": pool.tag() }),
            Value::Array(ws.iter().map(witness_json).collect()),
        ),
        Format::Csv => {
            let cells: Vec<Vec<String>> = ws
                .iter()
                .map(|w| {
                    [&w.left.class.c1, &w.left.class.c2, &w.right.class.c1, &w.right.class.c2]
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .collect();
            render::csv(&["left_c1", "left_c2", "right_c1", "right_c2"], &cells)
        }
    }
    .into())
}

fn realization_text(r: &Realization) -> String {
    match r {
        Realization::Extension(w) => format!("extension {}", witness_pair(w)),
        Realization::Curve(c) => format!(
            "curve of degree {} and genus {}: {}",
            c.curve_degree, c.curve_genus, c.description
        ),
    }
}

fn realization_json(r: &Realization) -> Value {
    match r {
        Realization::Extension(w) => json!({
            "kind": "extension",
            "left": render::class(&w.left.class),
            "right": render::class(&w.right.class),
        }),
        Realization::Curve(c) => json!({
            "kind": "curve",
            "degree": c.curve_degree,
            "genus": c.curve_genus,
            "description": c.description,
        }),
    }
}

pub fn coverage(catalog: &Catalog, k: u32, format: Format) -> Result<Output, CliError> {
    let report = coverage_report(catalog, k)?;
    let source = |e: &quartic_acm_core::coverage::CoverageEntry| {
        e.realizations.iter().map(realization_text).collect::<Vec<_>>().join("; ")
    };
    Ok(match format {
        Format::Table => {
            let cells: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|e| {
                    let q = &e.invariants;
                    vec![
                        q.k.to_string(),
                        q.c1.to_string(),
                        q.c2.to_string(),
                        q.c3.to_string(),
                        e.genus.to_string(),
                        e.status().tag().to_string(),
                        source(e),
                    ]
                })
                .collect();
            let mut out = render::table(&["k", "c1", "c2", "c3", "g", "status", "source"], &cells);
            out.push_str(&format!(
                "\nadmissible {}, realized {}, open {}\n",
                report.entries.len(),
                report.realized().count(),
                report.open().count()
            ));
            out
        }
        Format::Json => {
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "quadruple": render::quadruple(&e.invariants),
                        "genus": render::int(&e.genus),
                        "status": e.status().tag(),
                        "realizations": e.realizations.iter().map(realization_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            render::envelope(
                "coverage",
                json!({ "k": k }),
                json!({
                    "admissible": report.entries.len(),
                    "realized": report.realized().count(),
                    "open": report.open().count(),
                    "entries": entries,
                }),
            )
        }
        Format::Csv => {
            let cells: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|e| {
                    let q = &e.invariants;
                    vec![
                        q.k.to_string(),
                        q.c1.to_string(),
                        q.c2.to_string(),
                        q.c3.to_string(),
                        e.genus.to_string(),
                        e.status().tag().to_string(),
                        source(e),
                    ]
                })
                .collect();
            render::csv(&["k", "c1", "c2", "c3", "g", "status", "source"], &cells)
        }
    }
    .into())
}

pub fn selfcheck_cmd(formulas: &Formulas, format: Format) -> Result<Output, CliError> {
    let outcomes = selfcheck::run(formulas);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let total = outcomes.len();
    let stdout = match format {
        Format::Table => {
            let mut out: String = outcomes
                .iter()
                .map(|o| {
                    if o.passed {
                        format!("PASS  {}\n", o.name)
                    } else {
                        format!("FAIL  {}: {}\n", o.name, o.detail)
                    }
                })
                .collect();
            out.push_str(&format!("{} passed, {} failed\n", total - failed, failed));
            out
        }
        Format::Json => render::envelope(
            "selfcheck",
            json!({}),
            json!({
                "passed": total - failed,
                "failed": failed,
                "checks": outcomes
                    .iter()
                    .map(|o| json!({ "name": o.name, "passed": o.passed, "detail": o.detail }))
                    .collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => render::csv(
            &["name", "passed", "detail"],
            &outcomes
                .iter()
                .map(|o| vec![o.name.to_string(), o.passed.to_string(), o.detail.clone()])
                .collect::<Vec<_>>(),
        ),
    };
    if failed > 0 {
        return Err(CliError::SelfcheckFailed { failed, total, report: stdout });
    }
    Ok(stdout.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadruple_parsing() {
        assert_eq!(parse_quadruple("4,-1,6,4").unwrap(), BundleInvariants::new(4, -1, 6, 4).unwrap());
        assert!(parse_quadruple("4,1,6").is_err());
        assert!(parse_quadruple("4, 1,6,4").is_err());
        assert!(parse_quadruple("0,1,6,4").is_err());
        assert!(parse_quadruple("-4,1,6,4").is_err());
    }

    #[test]
    fn enumerate_table_first_and_last_rows() {
        let three = enumerate(3, Format::Table).unwrap().stdout;
        let first: Vec<&str> = three.lines().nth(1).unwrap().split_whitespace().collect();
        assert_eq!(first, ["3", "1", "5", "2", "2"]);
        let four = enumerate(4, Format::Table).unwrap().stdout;
        let last: Vec<&str> = four.lines().last().unwrap().split_whitespace().collect();
        assert_eq!(last, ["4", "6", "64", "84", "203"]);
    }

    #[test]
    fn unrefined_rank_gets_a_note() {
        assert!(enumerate(4, Format::Table).unwrap().notes.is_empty());
        assert_eq!(enumerate(5, Format::Table).unwrap().notes.len(), 1);
    }
}
