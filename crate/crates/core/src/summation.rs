//! Closed forms for `Σ_{k=1}^n Π_j H_k(s_j)`.
//!
//! 1. linearize the product with the stuffle product,
//! 2. sum each `H_k(s)` over `k` by peeling the last entry `s = (s', s_d)`:
//!
//! ```text
//! Σ_{k=1}^n H_k(s) = (n+1) H_n(s) - H_n(s', s_d - 1)                   if s_d > 1
//!                  = (n+1) H_n(s) - (Σ_{k=1}^n H_k(s') - H_n(s'))      if s_d = 1
//! ```
//!
//! 3. collect terms against a chosen basis with [`rebase`].

use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::expr::{expr_equal, MhsExpression};
use crate::poly::NPolynomial;
use crate::rational::Rational;

fn n_plus_one() -> NPolynomial {
    NPolynomial::linear(Rational::one(), Rational::one())
}

/// `Σ_{k=1}^n H_k(s)` as a linear combination of `H_n(·)` with coefficients in `Q[n]`.
///
/// The empty composition sums to `n`.
pub fn sum_single(s: &Composition) -> MhsExpression {
    let Some((init, last)) = s.last() else {
        return MhsExpression::poly(NPolynomial::var());
    };
    let lead = MhsExpression::term(n_plus_one(), vec![s.clone()]);
    let correction = if last > 1 {
        MhsExpression::symbol(init.append(last - 1))
    } else if init.is_empty() {
        // Σ_{j=1}^n H_{j-1}(()) = n, since H_0(()) = 1
        MhsExpression::poly(NPolynomial::var())
    } else {
        &sum_single(&init) - &MhsExpression::symbol(init)
    };
    &lead - &correction
}

/// Applies [`sum_single`] termwise to a linear expression with constant coefficients.
pub fn sum_linear(e: &MhsExpression) -> Result<MhsExpression> {
    let mut out = MhsExpression::zero();
    for (factors, coeff) in e.terms() {
        if factors.len() > 1 || !coeff.is_constant() {
            return Err(Error::Domain(format!(
                "cannot sum a non-linear or n-dependent term: {}",
                MhsExpression::term(coeff.clone(), factors.to_vec())
            )));
        }
        let summed = match factors.first() {
            Some(s) => sum_single(s),
            None => sum_single(&Composition::empty()),
        };
        out = &out + &summed.scale(&coeff.coeff(0));
    }
    Ok(out)
}

fn check_factors(factors: &[Composition]) -> Result<()> {
    if factors.is_empty() || factors.iter().any(Composition::is_empty) {
        return Err(Error::Domain(
            "sum_product needs at least one factor and no empty compositions".into(),
        ));
    }
    Ok(())
}

/// `Σ_{k=1}^n f_k - (n+1) f_n` for `f_k = Π_j H_k(s_j)`, in linear form.
pub fn sum_product_remainder(factors: &[Composition]) -> Result<MhsExpression> {
    check_factors(factors)?;
    let product = MhsExpression::product(factors.to_vec());
    let linear = product.linearize();
    let summed = sum_linear(&linear)?;
    Ok(&summed - &linear.scale_poly(&n_plus_one()))
}

/// Closed form of `Σ_{k=1}^n Π_j H_k(s_j)`: `(n+1) Π_j H_n(s_j)` plus a linear remainder.
pub fn sum_product(factors: &[Composition]) -> Result<MhsExpression> {
    let remainder = sum_product_remainder(factors)?;
    let lead = MhsExpression::term(n_plus_one(), factors.to_vec());
    Ok(&lead + &remainder)
}

/// Brute-force partial sums `Σ_{k=1}^n Π_j H_k(s_j)` for `n = 0, …, n_max`.
pub fn brute_force_partial_sums(factors: &[Composition], n_max: u64) -> Vec<Rational> {
    let values = MhsExpression::product(factors.to_vec()).eval_range(n_max);
    let mut acc = Rational::zero();
    let mut out = Vec::with_capacity(values.len());
    for (k, v) in values.into_iter().enumerate() {
        if k > 0 {
            acc += v;
        }
        out.push(acc.clone());
    }
    out
}

/// Finds `q_i ∈ Q[n]` with `e = Σ q_i · basis_i`.
///
/// Both sides are linearized and matched coefficientwise in `n^t · H_n(r)`, which gives a
/// linear system over `Q` in the coefficients of the `q_i`. On failure the residual of the
/// best partial solution is reported.
pub fn rebase(e: &MhsExpression, basis: &[MhsExpression]) -> Result<Vec<NPolynomial>> {
    let target = e.linearize();
    let lin_basis: Vec<MhsExpression> = basis.iter().map(MhsExpression::linearize).collect();
    if target.is_zero() {
        return Ok(vec![NPolynomial::zero(); basis.len()]);
    }

    let q_degree = target.max_degree();
    let basis_degree = lin_basis.iter().map(MhsExpression::max_degree).max().unwrap_or(0);
    let powers = q_degree + basis_degree + 1;

    let mut keys: Vec<Vec<Composition>> = target.terms().map(|(k, _)| k.to_vec()).collect();
    for b in &lin_basis {
        keys.extend(b.terms().map(|(k, _)| k.to_vec()));
    }
    keys.sort();
    keys.dedup();

    let unknowns = basis.len() * (q_degree + 1);
    let column = |i: usize, d: usize| i * (q_degree + 1) + d;

    // rows: (key, power t); augmented with the target coefficient
    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(keys.len() * powers);
    for key in &keys {
        let target_coeff = target.coeff_of(key);
        let basis_coeffs: Vec<NPolynomial> = lin_basis.iter().map(|b| b.coeff_of(key)).collect();
        for t in 0..powers {
            let mut row = vec![Rational::zero(); unknowns + 1];
            for (i, bc) in basis_coeffs.iter().enumerate() {
                for d in 0..=q_degree.min(t) {
                    let c = bc.coeff(t - d);
                    if !c.is_zero() {
                        row[column(i, d)] += c;
                    }
                }
            }
            row[unknowns] = target_coeff.coeff(t);
            if row.iter().any(|x| !x.is_zero()) {
                matrix.push(row);
            }
        }
    }

    let (solution, consistent) = solve(matrix, unknowns);
    let coeffs: Vec<NPolynomial> = (0..basis.len())
        .map(|i| NPolynomial::new((0..=q_degree).map(|d| solution[column(i, d)].clone()).collect()))
        .collect();

    let recombined = coeffs
        .iter()
        .zip(basis)
        .fold(MhsExpression::zero(), |acc, (q, b)| &acc + &b.scale_poly(q));
    let residual = (&target - &recombined).linearize();
    if !consistent || !residual.is_zero() {
        return Err(Error::NotInSpan {
            residual: residual.to_string(),
        });
    }
    debug_assert!(expr_equal(e, &recombined));
    Ok(coeffs)
}

/// Gauss-Jordan elimination on an augmented matrix; free variables are set to zero.
/// Returns the solution and whether the system was consistent.
fn solve(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> (Vec<Rational>, bool) {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = Rational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let consistent = rows[r..].iter().all(|row| row[unknowns].is_zero());
    let mut solution = vec![Rational::zero(); unknowns];
    for (row, col) in pivots {
        solution[col] = rows[row][unknowns].clone();
    }
    (solution, consistent)
}
