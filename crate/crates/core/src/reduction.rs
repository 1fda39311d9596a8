//! Homogeneous sums `H_n({1}^d)` as polynomials in the power sums `H_n(m)`.
//!
//! Newton's identities with `e_d ↦ H_n({1}^d)` and `p_m ↦ H_n(m)`:
//! `d·e_d = Σ_{m=1}^{d} (-1)^{m-1} p_m e_{d-m}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::expr::MhsExpression;
use crate::partitions::{factorial, Partition};
use crate::rational::{int, Rational};

/// `d! · H_n({1}^d)` as an integer combination of products of depth-one sums.
pub fn hoffman_reduce(d: u32) -> Result<MhsExpression> {
    if d == 0 {
        return Err(Error::Domain("hoffman_reduce needs d ≥ 1".into()));
    }
    let mut e: Vec<MhsExpression> = vec![MhsExpression::one()];
    for k in 1..=d {
        let mut acc = MhsExpression::zero();
        for m in 1..=k {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let pm = MhsExpression::symbol(Composition::single(m));
            acc = &acc + &(&pm * &e[(k - m) as usize]).scale(&int(sign));
        }
        e.push(acc.scale(&(Rational::one() / int(k as i64))));
    }
    let scaled = e[d as usize].scale(&Rational::from_integer(factorial(d)));
    for (_, coeff) in scaled.terms() {
        assert!(
            coeff.is_constant() && coeff.coeff(0).is_integer(),
            "non-integral coefficient in reduction of {{1}}^{d}"
        );
    }
    Ok(scaled)
}

/// `c_λ` keyed by partitions of `d` in non-increasing order.
pub fn partition_coefficients(d: u32) -> Result<BTreeMap<Partition, BigInt>> {
    let reduced = hoffman_reduce(d)?;
    let mut out = BTreeMap::new();
    for (factors, coeff) in reduced.terms() {
        let mut key: Partition = factors.iter().map(|f| f.weight()).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let value = coeff.coeff(0).to_integer();
        if !value.is_zero() {
            out.insert(key, value);
        }
    }
    Ok(out)
}
