//! Coefficient tables for `Σ_{k=1}^n f_k - (n+1) f_n` where `f` runs over products of
//! homogeneous blocks `H_n({1}^λ_j)` of total weight 4 or 5.
//!
//! Each column is rebased onto a fixed row basis; a cell is the polynomial (expected
//! `an + b`) multiplying that row. The printed reference grids are kept as data so derived
//! grids can be diffed against them; mismatches become [`Erratum`] records.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::expr::MhsExpression;
use crate::poly::NPolynomial;
use crate::rational::{self, int, rat, Rational};
use crate::summation::{rebase, sum_product_remainder};

/// A basis element together with its text and LaTeX labels.
#[derive(Clone, Debug)]
pub struct BasisRow {
    pub label: String,
    pub latex: String,
    pub basis: MhsExpression,
}

/// A column product `Π_j H_n({1}^{λ_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableColumn {
    pub label: String,
    pub latex: String,
    pub blocks: Vec<usize>,
}

impl TableColumn {
    fn new(blocks: &[usize]) -> Self {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for &b in blocks {
            match counts.iter_mut().find(|(x, _)| *x == b) {
                Some((_, c)) => *c += 1,
                None => counts.push((b, 1)),
            }
        }
        let mut label = String::new();
        let mut latex = String::new();
        for (block, count) in counts {
            let inner = if block == 1 { "1".to_string() } else { format!("{{1}}^{block}") };
            let inner_tex = if block == 1 { "1".to_string() } else { format!("\\{{1\\}}^{block}") };
            if count == 1 {
                write!(label, "H_n({inner})").unwrap();
                write!(latex, "H_n({inner_tex})").unwrap();
            } else {
                write!(label, "H_n^{count}({inner})").unwrap();
                write!(latex, "H^{count}_n({inner_tex})").unwrap();
            }
        }
        TableColumn {
            label,
            latex,
            blocks: blocks.to_vec(),
        }
    }

    pub fn factors(&self) -> Vec<Composition> {
        self.blocks.iter().map(|&d| Composition::ones(d)).collect()
    }
}

/// One row of a derived table: a basis element and its coefficient in every column.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: String,
    pub latex: String,
    pub basis: MhsExpression,
    pub cells: Vec<NPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellFailure {
    pub column: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct CoefficientTable {
    pub weight: u32,
    pub columns: Vec<TableColumn>,
    pub rows: Vec<TableRow>,
    pub failures: Vec<CellFailure>,
}

/// A printed cell that disagrees with the derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub weight: u32,
    pub table: usize,
    pub row: String,
    pub column: String,
    /// `[b, a]` for `an + b`
    pub printed: [String; 2],
    pub derived: Vec<String>,
}

fn p1_pow(k: usize) -> Vec<Composition> {
    vec![Composition::single(1); k]
}

/// `Σ_{k=1}^{top} (-1)^{k-1}/k! · H_n(1)^k`
fn alternating_power_row(top: usize) -> BasisRow {
    let mut basis = MhsExpression::zero();
    let mut factorial = 1i64;
    for k in 1..=top {
        factorial *= k as i64;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        basis = &basis + &MhsExpression::product(p1_pow(k)).scale(&rat(sign, factorial));
    }
    BasisRow {
        label: format!("Σ_{{k=1}}^{top} (-1)^(k-1)/k!·H_n(1)^k"),
        latex: format!("$\\sum_{{k=1}}^{top}{{(-1)^{{k-1}}\\over k!}}H_n^k(1)$"),
        basis,
    }
}

fn scaled_row(label: &str, latex: &str, scale: Rational, factors: &[&str]) -> BasisRow {
    let factors = factors
        .iter()
        .map(|f| f.parse().expect("static composition"))
        .collect();
    BasisRow {
        label: label.to_string(),
        latex: latex.to_string(),
        basis: MhsExpression::product(factors).scale(&scale),
    }
}

fn n_row() -> BasisRow {
    BasisRow {
        label: "n".into(),
        latex: "$ n$".into(),
        basis: MhsExpression::poly(NPolynomial::var()),
    }
}

/// Row basis of the weight-4 table.
pub fn weight4_basis() -> Vec<BasisRow> {
    vec![
        alternating_power_row(3),
        scaled_row("(1/2)·H_n(2)", "$ {1\\over 2}H_n(2)$", rat(1, 2), &["2"]),
        scaled_row("(1/3)·H_n(3)", "$ {1\\over 3}H_n(3)$", rat(1, 3), &["3"]),
        scaled_row("(1/2)·H_n(1)·H_n(2)", "$ {1\\over 2}H_n(1)H_n(2)$", rat(1, 2), &["1", "2"]),
        scaled_row("H_n(1,2)", "$ H_n(1,2)$", int(1), &["1,2"]),
        n_row(),
    ]
}

/// Row basis of the weight-5 tables; `second` selects the label spelling of the second
/// printed sub-table (`H_n({1}^2,2)` instead of `H_n(1,1,2)`, the same sum).
pub fn weight5_basis(second: bool) -> Vec<BasisRow> {
    let (label112, latex112) = if second {
        ("H_n({1}^2,2)", "$ H_n(\\{1\\}^2,2)$")
    } else {
        ("H_n(1,1,2)", "$ H_n(1,1,2)$")
    };
    vec![
        alternating_power_row(4),
        scaled_row("(1/2)·H_n(2)", "$ {1\\over 2}H_n(2)$", rat(1, 2), &["2"]),
        scaled_row("(1/3)·H_n(3)", "$ {1\\over 3}H_n(3)$", rat(1, 3), &["3"]),
        scaled_row("(1/2)·H_n(1)·H_n(2)", "${1\\over 2} H_n(1)H_n(2)$", rat(1, 2), &["1", "2"]),
        scaled_row("H_n(1,2)", "$ H_n(1,2)$", int(1), &["1,2"]),
        scaled_row("(1/4)·H_n(4)", "$ {1\\over 4}H_n(4)$", rat(1, 4), &["4"]),
        scaled_row("(1/8)·H_n(2)^2", "$ {1\\over 8}H^2_n(2)$", rat(1, 8), &["2", "2"]),
        scaled_row("(1/4)·H_n(1)^2·H_n(2)", "$ {1\\over 4}H_n^2(1)H_n(2)$", rat(1, 4), &["1", "1", "2"]),
        scaled_row("(1/3)·H_n(1)·H_n(3)", "$ {1\\over 3}H_n(1)H_n(3)$", rat(1, 3), &["1", "3"]),
        scaled_row("H_n(1,3)", "$ H_n(1,3)$", int(1), &["1,3"]),
        scaled_row(label112, latex112, int(1), &["1,1,2"]),
        n_row(),
    ]
}

/// Column products of each printed table, in printed order.
pub fn table_columns(weight: u32) -> Result<Vec<Vec<TableColumn>>> {
    let cols = |list: &[&[usize]]| list.iter().map(|b| TableColumn::new(b)).collect::<Vec<_>>();
    match weight {
        4 => Ok(vec![cols(&[&[4], &[2, 2], &[1, 3], &[1, 1, 2], &[1, 1, 1, 1]])]),
        5 => Ok(vec![
            cols(&[&[5], &[1, 4], &[2, 3], &[1, 1, 3]]),
            cols(&[&[1, 2, 2], &[1, 1, 1, 2], &[1, 1, 1, 1, 1]]),
        ]),
        _ => Err(Error::Domain(format!("tables exist for weight 4 or 5, not {weight}"))),
    }
}

fn basis_for(weight: u32, table: usize) -> Vec<BasisRow> {
    match weight {
        4 => weight4_basis(),
        _ => weight5_basis(table == 1),
    }
}

/// Derives the coefficient grid(s) for the given weight.
pub fn table_weight(weight: u32) -> Result<Vec<CoefficientTable>> {
    let column_sets = table_columns(weight)?;
    let mut tables = Vec::with_capacity(column_sets.len());
    for (index, columns) in column_sets.into_iter().enumerate() {
        let basis_rows = basis_for(weight, index);
        let basis: Vec<MhsExpression> = basis_rows.iter().map(|r| r.basis.clone()).collect();
        let mut grid = vec![vec![NPolynomial::zero(); columns.len()]; basis_rows.len()];
        let mut failures = Vec::new();
        for (j, column) in columns.iter().enumerate() {
            let remainder = sum_product_remainder(&column.factors())?;
            match rebase(&remainder, &basis) {
                Ok(coeffs) => {
                    for (i, q) in coeffs.into_iter().enumerate() {
                        grid[i][j] = q;
                    }
                }
                Err(e) => failures.push(CellFailure {
                    column: column.label.clone(),
                    reason: e.to_string(),
                }),
            }
        }
        let rows = basis_rows
            .into_iter()
            .zip(grid)
            .map(|(r, cells)| TableRow {
                label: r.label,
                latex: r.latex,
                basis: r.basis,
                cells,
            })
            .collect();
        tables.push(CoefficientTable {
            weight,
            columns,
            rows,
            failures,
        });
    }
    Ok(tables)
}

impl CoefficientTable {
    /// Cells whose polynomial degree exceeds 1.
    pub fn degree_violations(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for row in &self.rows {
            for (cell, column) in row.cells.iter().zip(&self.columns) {
                if cell.degree().is_some_and(|d| d > 1) {
                    out.push((row.label.clone(), column.label.clone()));
                }
            }
        }
        out
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.degree_violations().is_empty()
    }

    pub fn cell(&self, row: usize, column: usize) -> &NPolynomial {
        &self.rows[row].cells[column]
    }

    /// Rebuilds `Σ_k f_k - (n+1) f_n` for one column from the rows.
    pub fn column_expression(&self, column: usize) -> MhsExpression {
        self.rows.iter().fold(MhsExpression::zero(), |acc, row| {
            &acc + &row.basis.scale_poly(&row.cells[column])
        })
    }
}

// ---------------------------------------------------------------------------
// Printed reference grids, `(a, b)` for `an + b`, rows × columns in printed order.

const PRINTED_W4: [[(i64, i64); 5]; 6] = [
    [(-1, 0), (-6, -2), (-4, -1), (-12, -5), (-24, -12)],
    [(-1, 0), (-2, -2), (-2, -1), (-2, -3), (0, -4)],
    [(-1, 0), (0, 1), (-1, -1), (0, 1), (0, 3)],
    [(1, 0), (2, 0), (2, 1), (2, 1), (0, 0)],
    [(0, 0), (0, 1), (0, 0), (0, 1), (0, 2)],
    [(0, 1), (0, 6), (0, 4), (0, 12), (0, 24)],
];

const PRINTED_W5A: [[(i64, i64); 4]; 12] = [
    [(1, 0), (5, 1), (10, 3), (20, 7)],
    [(1, 0), (3, 1), (4, 3), (6, 5)],
    [(1, 0), (2, 1), (1, 0), (2, 1)],
    [(-1, 0), (-3, -1), (-4, -1), (-6, -3)],
    [(0, 0), (0, 0), (0, -1), (0, -1)],
    [(1, 0), (1, 1), (0, -1), (0, -1)],
    [(-1, 0), (-1, -1), (-2, 1), (0, 1)],
    [(1, 0), (3, 1), (4, 1), (6, 3)],
    [(-1, 0), (-2, -1), (-1, 0), (-2, -1)],
    [(0, 0), (0, 0), (0, 0), (0, 0)],
    [(0, 0), (0, 0), (0, 1), (0, 1)],
    [(0, -1), (0, -5), (0, -10), (0, -20)],
];

const PRINTED_W5B: [[(i64, i64); 3]; 12] = [
    [(30, 12), (60, 27), (120, 60)],
    [(6, 8), (6, 13), (0, 20)],
    [(0, -3), (0, -6), (0, -15)],
    [(-6, -2), (-6, -3), (0, 0)],
    [(0, -3), (0, -5), (0, -10)],
    [(0, -2), (0, -3), (0, -4)],
    [(-2, 4), (0, 9), (0, 20)],
    [(6, 2), (6, 3), (0, 0)],
    [(0, 0), (0, 0), (0, 0)],
    [(0, 1), (0, 2), (0, 5)],
    [(0, 3), (0, 5), (0, 10)],
    [(0, -30), (0, -60), (0, -120)],
];

fn to_grid<const C: usize>(rows: &[[(i64, i64); C]]) -> Vec<Vec<NPolynomial>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|&(a, b)| NPolynomial::linear(int(a), int(b)))
                .collect()
        })
        .collect()
}

/// The printed grids for a weight, one per sub-table.
pub fn printed_tables(weight: u32) -> Result<Vec<Vec<Vec<NPolynomial>>>> {
    match weight {
        4 => Ok(vec![to_grid(&PRINTED_W4)]),
        5 => Ok(vec![to_grid(&PRINTED_W5A), to_grid(&PRINTED_W5B)]),
        _ => Err(Error::Domain(format!("tables exist for weight 4 or 5, not {weight}"))),
    }
}

/// Printed-vs-derived discrepancies for the given derived tables.
pub fn errata(tables: &[CoefficientTable]) -> Result<Vec<Erratum>> {
    let Some(first) = tables.first() else {
        return Ok(Vec::new());
    };
    let printed = printed_tables(first.weight)?;
    let mut out = Vec::new();
    for (index, (table, grid)) in tables.iter().zip(&printed).enumerate() {
        for (row, printed_row) in table.rows.iter().zip(grid) {
            for ((derived, expected), column) in row.cells.iter().zip(printed_row).zip(&table.columns) {
                if derived != expected {
                    out.push(Erratum {
                        weight: table.weight,
                        table: index,
                        row: row.label.clone(),
                        column: column.label.clone(),
                        printed: [
                            rational::to_fraction_string(&expected.coeff(0)),
                            rational::to_fraction_string(&expected.coeff(1)),
                        ],
                        derived: derived.coeffs().iter().map(rational::to_fraction_string).collect(),
                    });
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Rendering

/// JSON grid: rows × columns of `[b, a]` rational strings for `an + b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub weight: u32,
    pub columns: Vec<String>,
    pub rows: Vec<TableRowJson>,
    pub failures: Vec<CellFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub label: String,
    pub cells: Vec<[String; 2]>,
}

impl TableJson {
    /// Grid of `an + b` polynomials as parsed back from the JSON cells.
    pub fn grid(&self) -> Result<Vec<Vec<NPolynomial>>> {
        self.rows
            .iter()
            .map(|row| {
                row.cells
                    .iter()
                    .map(|[b, a]| {
                        Ok(NPolynomial::linear(
                            rational::parse_rational(a)?,
                            rational::parse_rational(b)?,
                        ))
                    })
                    .collect()
            })
            .collect()
    }
}

impl CoefficientTable {
    /// Fails if some cell is not of degree ≤ 1.
    pub fn to_json(&self) -> Result<TableJson> {
        if let Some((row, column)) = self.degree_violations().into_iter().next() {
            return Err(Error::Domain(format!(
                "cell ({row}, {column}) has degree above 1"
            )));
        }
        Ok(TableJson {
            weight: self.weight,
            columns: self.columns.iter().map(|c| c.label.clone()).collect(),
            rows: self
                .rows
                .iter()
                .map(|row| TableRowJson {
                    label: row.label.clone(),
                    cells: row
                        .cells
                        .iter()
                        .map(|c| {
                            [
                                rational::to_fraction_string(&c.coeff(0)),
                                rational::to_fraction_string(&c.coeff(1)),
                            ]
                        })
                        .collect(),
                })
                .collect(),
            failures: self.failures.clone(),
        })
    }

    pub fn grid(&self) -> Vec<Vec<NPolynomial>> {
        self.rows.iter().map(|r| r.cells.clone()).collect()
    }

    pub fn render_text(&self) -> String {
        let header = std::iter::once("Σ_k f_k - (n+1)f_n".to_string())
            .chain(self.columns.iter().map(|c| c.label.clone()))
            .collect::<Vec<_>>();
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                std::iter::once(row.label.clone())
                    .chain(row.cells.iter().map(NPolynomial::to_string))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|j| {
                std::iter::once(&header)
                    .chain(&body)
                    .map(|r| r[j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for line in std::iter::once(&header).chain(&body) {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                .collect();
            writeln!(out, "{}", cells.join(" | ").trim_end()).unwrap();
        }
        out
    }

    /// A `tabular` block in the same layout as the reference tables.
    pub fn render_latex(&self) -> String {
        let mut out = String::new();
        writeln!(out, "\\begin{{tabular}}{{|c|{}}}\\hline", "c|".repeat(self.columns.len())).unwrap();
        write!(out, "$\\sum_{{k=1}}^n f_k-(n+1)f_n$").unwrap();
        for c in &self.columns {
            write!(out, "&$\\displaystyle {}$", c.latex).unwrap();
        }
        writeln!(out, "\\\\\\hline").unwrap();
        for row in &self.rows {
            write!(out, "{}", row.latex).unwrap();
            for cell in &row.cells {
                write!(out, " &$ {} $", latex_poly(cell)).unwrap();
            }
            writeln!(out, "\\\\\\hline").unwrap();
        }
        writeln!(out, "\\end{{tabular}}").unwrap();
        out
    }
}

fn latex_poly(p: &NPolynomial) -> String {
    p.render("n").replace(" ", "")
}
