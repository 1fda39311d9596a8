use std::fmt::Write as _;

use anyhow::{Context, Result};
use mhs_core::expr::MhsExpression;
use mhs_core::rational::to_fraction_string;
use mhs_core::reduction::{hoffman_reduce, partition_coefficients};
use mhs_core::stuffle::{stuffle, StuffleExpansion};
use mhs_core::summation::{brute_force_partial_sums, rebase, sum_product, sum_product_remainder};
use mhs_core::tables::{errata, table_weight};
use mhs_core::Composition;
use serde_json::json;

use crate::{verify, Cli, Command, Format};

/// Returns whether every check passed.
pub fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Stuffle { s, t } => {
            print!("{}", render_stuffle(&stuffle(s, t), cli.format));
            Ok(true)
        }
        Command::Derive { product, basis, check } => derive(cli.format, &product.0, basis.as_deref(), *check),
        Command::Tables { weight } => tables(cli.format, *weight),
        Command::Verify { suite, pmin, pmax, amin, amax, nmax } => {
            let params = verify::Params {
                pmin: *pmin,
                pmax: *pmax,
                amin: *amin,
                amax: *amax,
                nmax: *nmax,
            };
            let report = verify::run(*suite, &params, cli.jobs)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(report.all_pass)
        }
        Command::Reduce { d } => {
            reduce(cli.format, *d)?;
            Ok(true)
        }
    }
}

/// Highest depth first, then reverse lexicographic: `3·(1,1,1) + (2,1) + (1,2)`.
pub fn render_stuffle(expansion: &StuffleExpansion, format: Format) -> String {
    let mut words: Vec<(&Composition, &u64)> = expansion.iter().collect();
    words.sort_by(|(a, _), (b, _)| b.depth().cmp(&a.depth()).then(b.parts().cmp(a.parts())));
    match format {
        Format::Json => {
            let list: Vec<_> = words
                .iter()
                .map(|(w, m)| json!({ "composition": w.to_csv(), "multiplicity": m }))
                .collect();
            format!("{}\n", serde_json::Value::Array(list))
        }
        Format::Text | Format::Latex => {
            let terms: Vec<String> = words
                .iter()
                .map(|(w, m)| if **m == 1 { w.to_string() } else { format!("{m}·{w}") })
                .collect();
            format!("{}\n", terms.join(" + "))
        }
    }
}

fn product_label(product: &[Composition]) -> String {
    product
        .iter()
        .map(|s| format!("H_k({})", s.to_csv()))
        .collect::<Vec<_>>()
        .join("·")
}

fn derive(
    format: Format,
    product: &[Composition],
    basis: Option<&std::path::Path>,
    check: Option<u64>,
) -> Result<bool> {
    let closed = sum_product(product)?;

    let rebased = match basis {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading basis file {}", path.display()))?;
            let basis: Vec<MhsExpression> =
                serde_json::from_str(&text).context("basis file must be a JSON list of expressions")?;
            let remainder = sum_product_remainder(product)?;
            let coeffs = rebase(&remainder, &basis)?;
            Some((basis, coeffs))
        }
        None => None,
    };

    let verified = check.map(|n_max| {
        closed.eval_range(n_max) == brute_force_partial_sums(product, n_max)
    });

    match format {
        Format::Json => {
            let mut out = json!({
                "product": product.iter().map(Composition::to_csv).collect::<Vec<_>>(),
                "closed_form": closed,
            });
            if let Some((basis, coeffs)) = &rebased {
                out["rebased"] = basis
                    .iter()
                    .zip(coeffs)
                    .map(|(b, q)| {
                        json!({
                            "basis": b,
                            "coeff": q.coeffs().iter().map(to_fraction_string).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
            }
            if let (Some(n_max), Some(ok)) = (check, verified) {
                out["check"] = json!({ "n_max": n_max, "pass": ok });
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Text | Format::Latex => {
            println!("Σ_{{k=1}}^n {} = {closed}", product_label(product));
            if let Some((basis, coeffs)) = &rebased {
                println!("Σ_k f_k - (n+1)·f_n =");
                for (b, q) in basis.iter().zip(coeffs) {
                    if !q.is_zero() {
                        println!("  ({q}) × [{b}]");
                    }
                }
            }
            if let (Some(n_max), Some(ok)) = (check, verified) {
                if ok {
                    println!("verified n=1..{n_max}");
                } else {
                    println!("MISMATCH against brute force for some n ≤ {n_max}");
                }
            }
        }
    }
    Ok(verified.unwrap_or(true))
}

fn tables(format: Format, weight: u32) -> Result<bool> {
    let tables = table_weight(weight)?;
    let errata = errata(&tables)?;
    let clean = tables.iter().all(|t| t.is_clean());
    match format {
        Format::Json => {
            let grids = tables.iter().map(|t| t.to_json()).collect::<Result<Vec<_>, _>>()?;
            let out = json!({ "tables": grids, "errata": errata });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Latex => {
            for t in &tables {
                println!("{}", t.render_latex());
            }
            println!("% errata: {}", errata.len());
            for e in &errata {
                println!("% {}: printed [{}, {}], derived {:?}", e.row, e.printed[0], e.printed[1], e.derived);
            }
        }
        Format::Text => {
            for t in &tables {
                println!("{}", t.render_text());
                for f in &t.failures {
                    println!("FAILED column {}: {}", f.column, f.reason);
                }
                for (row, column) in t.degree_violations() {
                    println!("DEGREE > 1 at ({row}, {column})");
                }
            }
            println!("errata: {}", errata.len());
            for e in &errata {
                println!(
                    "  table {} row {} column {}: printed {}+({})n, derived {:?}",
                    e.table, e.row, e.column, e.printed[0], e.printed[1], e.derived
                );
            }
        }
    }
    Ok(clean)
}

fn reduce(format: Format, d: u32) -> Result<()> {
    let expr = hoffman_reduce(d)?;
    match format {
        Format::Json => {
            let coefficients: serde_json::Map<String, serde_json::Value> = partition_coefficients(d)?
                .into_iter()
                .map(|(lambda, c)| {
                    let key = lambda.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                    (key, json!(c.to_string()))
                })
                .collect();
            let out = json!({ "d": d, "expression": expr, "coefficients": coefficients });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Text | Format::Latex => {
            let mut line = String::new();
            write!(line, "{d}!·H_n({{1}}^{d}) = {expr}")?;
            println!("{line}");
        }
    }
    Ok(())
}
