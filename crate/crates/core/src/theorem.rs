//! Alternating power sums of binomial coefficients modulo `p^6`, and the identities
//! used to reach the central-binomial congruence.
//!
//! `S(a, p) = Σ_{k=0}^{p-1} (-1)^{ak} C(p-1, k)^a ≡ (a-1)p/(ap-1) · (1 + a(a+1)(3a-2)/6 · p^3 X_p)`
//! modulo `p^6` for primes `p > 5`. Two independent routes compute the left side:
//! [`theorem_lhs`] from `(-1)^k C(p-1,k) = Π_{j≤k} (1 - p/j)` directly, and
//! [`theorem_lhs_via_partitions`] from its truncated expansion in `H_k({1}^j)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::congruence::{sum_product_mod, CheckResult};
use crate::error::{Error, Result};
use crate::padic::{require_prime_above_five, x_p, Modulus, PResidue};
use crate::partitions::{arrangements, binomial, enumerate_partitions, generalized_binomial, multinomial};
use crate::primes::is_prime;
use crate::rational::{int, Rational};

pub const THEOREM_EXPONENT: u32 = 6;

/// `((-1)^k C(p-1, k))^a mod p^e` via the product `Π_{j=1}^{k} (1 - p·j^{-1})`.
pub fn signed_binomial_pow_mod(k: u64, a: i64, p: u64, e: u32) -> Result<PResidue> {
    require_prime_above_five(p)?;
    if k >= p {
        return Err(Error::Domain(format!("k = {k} must lie in [0, p-1]")));
    }
    let modulus = Modulus::new(p, e)?;
    let base = signed_binomial_mod(k, modulus);
    Ok(base
        .pow_signed(a)
        .expect("the base is 1 mod p, hence a unit"))
}

fn signed_binomial_mod(k: u64, modulus: Modulus) -> PResidue {
    let p = modulus.from_i128(modulus.p() as i128);
    (1..=k).fold(modulus.one(), |acc, j| {
        let inv_j = modulus.from_i128(j as i128).inverse().expect("j < p");
        acc * (modulus.one() - p * inv_j)
    })
}

/// `Σ_{k=0}^{p-1} (-1)^{ak} C(p-1, k)^a mod p^6`
pub fn theorem_lhs(a: i64, p: u64) -> Result<PResidue> {
    require_prime_above_five(p)?;
    let modulus = Modulus::new(p, THEOREM_EXPONENT)?;
    Ok((0..p)
        .map(|k| {
            signed_binomial_mod(k, modulus)
                .pow_signed(a)
                .expect("unit base")
        })
        .sum())
}

/// The closed form `(a-1)p/(ap-1) · (1 + a(a+1)(3a-2)/6 · p^3 X_p)` as an exact rational.
pub fn theorem_rhs_exact(a: i64, p: u64) -> Result<Rational> {
    let x = x_p(p)?;
    let pr = int(p as i64);
    let prefactor = int(a - 1) * &pr / (int(a) * &pr - int(1));
    let correction = int(a * (a + 1) * (3 * a - 2)) / int(6) * &pr * &pr * &pr * x;
    Ok(prefactor * (Rational::one() + correction))
}

pub fn theorem_rhs(a: i64, p: u64) -> Result<PResidue> {
    Modulus::new(p, THEOREM_EXPONENT)?.reduce(&theorem_rhs_exact(a, p)?)
}

/// Weight attached to a partition `λ` of `j` into `r` parts in the expansion of
/// `(1 + Σ_j (-p)^j H_k({1}^j))^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionWeight {
    /// Number of ordered tuples with parts `λ`: `r! / Π m_i!`. This is the coefficient of
    /// `Π_i x_{λ_i}` in `(x_1 + x_2 + …)^r`.
    Arrangements,
    /// The multinomial `j! / (λ_1! ⋯ λ_r!)`.
    Multinomial,
}

impl PartitionWeight {
    fn of(self, parts: &[u32]) -> BigInt {
        match self {
            PartitionWeight::Arrangements => arrangements(parts),
            PartitionWeight::Multinomial => multinomial(parts),
        }
    }
}

/// `p + Σ_{j=1}^{5} (-p)^j Σ_{r=1}^{j} C(a, r) Σ_{λ ∈ P(j, r)} w(λ) Σ_{k=1}^{p-1} Π_i H_k({1}^{λ_i})`
/// modulo `p^6`, with the inner sums computed by brute force.
pub fn partition_expansion(a: i64, p: u64, weight: PartitionWeight) -> Result<PResidue> {
    require_prime_above_five(p)?;
    let modulus = Modulus::new(p, THEOREM_EXPONENT)?;
    let mut total = modulus.from_i128(p as i128);
    let minus_p = modulus.from_i128(-(p as i128));
    for j in 1..THEOREM_EXPONENT {
        let mut inner = modulus.zero();
        for r in 1..=j {
            let choose = modulus.from_bigint(&generalized_binomial(a, r));
            if choose.is_zero() {
                continue;
            }
            for lambda in enumerate_partitions(j, r) {
                let factors: Vec<Composition> =
                    lambda.iter().map(|&d| Composition::ones(d as usize)).collect();
                let w = modulus.from_bigint(&weight.of(&lambda));
                inner = inner + choose * w * sum_product_mod(&factors, modulus);
            }
        }
        total = total + minus_p.pow(j as u64) * inner;
    }
    Ok(total)
}

pub fn theorem_lhs_via_partitions(a: i64, p: u64) -> Result<PResidue> {
    partition_expansion(a, p, PartitionWeight::Arrangements)
}

pub fn theorem_report(a: i64, p: u64) -> Result<Vec<CheckResult>> {
    let direct = theorem_lhs(a, p)?;
    let closed = theorem_rhs(a, p)?;
    let expanded = theorem_lhs_via_partitions(a, p)?;
    Ok(vec![
        CheckResult::new(format!("theorem[a={a}]"), p, direct, closed),
        CheckResult::new(format!("theorem-expansion[a={a}]"), p, expanded, direct),
    ])
}

/// Exact `Σ_{k=0}^{n-1} (-1)^{ak} C(n-1, k)^a` for any integer `a`.
pub fn alternating_binomial_power_sum(a: i64, n: u64) -> Rational {
    assert!(n >= 1);
    (0..n)
        .map(|k| {
            let b = Rational::from_integer(binomial(n - 1, k));
            let sign = if (a * k as i64).rem_euclid(2) == 0 { int(1) } else { int(-1) };
            let power = if a >= 0 {
                num_traits::pow(b, a as usize)
            } else {
                num_traits::pow(Rational::one() / b, a.unsigned_abs() as usize)
            };
            sign * power
        })
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// `Σ (-1)^{ak} C(p-1,k)^a ≡ C(ap-2, p-1) (mod p^4)` for `a ≥ 1`.
pub fn cai_granville_check(a: i64, p: u64) -> Result<CheckResult> {
    if a < 1 {
        return Err(Error::Domain(format!("expected a ≥ 1, got {a}")));
    }
    let lhs = theorem_lhs(a, p)?.reduce_to(4);
    let top = a as u64 * p - 2;
    let rhs = lhs.modulus().from_bigint(&binomial(top, p - 1));
    Ok(CheckResult::new(format!("cai-granville[a={a}]"), p, lhs, rhs))
}

/// Both sides of `Σ_{k=1}^{n} C(2k,k)/k = C(2n,n)·(2n+1)/(3n^2)·Σ_{k=0}^{n-1} C(n-1,k)^{-2}`.
pub fn staver_sides(n: u64) -> (Rational, Rational) {
    assert!(n >= 1);
    let lhs = (1..=n)
        .map(|k| Rational::new(binomial(2 * k, k), BigInt::from(k)))
        .fold(Rational::zero(), |acc, v| acc + v);
    let inverse_squares = alternating_binomial_power_sum(-2, n);
    let n_int = int(n as i64);
    let rhs = Rational::from_integer(binomial(2 * n, n)) * (int(2) * &n_int + int(1))
        / (int(3) * &n_int * &n_int)
        * inverse_squares;
    (lhs, rhs)
}

pub fn staver_check(n: u64) -> bool {
    let (lhs, rhs) = staver_sides(n);
    lhs == rhs
}

/// `C(2p-1, p-1) ≡ 1 (mod p^3)`.
pub fn wolstenholme_check(p: u64) -> Result<bool> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::Domain(format!("expected a prime p > 3, got {p}")));
    }
    let m = BigInt::from(p).pow(3);
    let r = binomial(2 * p - 1, p - 1) % &m;
    Ok(r.is_one())
}

/// Exact `Σ_{k=1}^{p-1} C(2k, k)/k`.
pub fn corollary_lhs_exact(p: u64) -> Rational {
    (1..p)
        .map(|k| Rational::new(binomial(2 * k, k), BigInt::from(k)))
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// Exact `-16/3 · p^2 · X_p`.
pub fn corollary_rhs_exact(p: u64) -> Result<Rational> {
    let pr = int(p as i64);
    Ok(int(-16) / int(3) * &pr * &pr * x_p(p)?)
}

/// `Σ_{k=1}^{p-1} C(2k,k)/k ≡ -16/3 · p^2 X_p (mod p^4)`, the left side accumulated with
/// modular inverses of `k < p`.
pub fn corollary_report(p: u64) -> Result<CheckResult> {
    require_prime_above_five(p)?;
    let modulus = Modulus::new(p, 4)?;
    let lhs = (1..p)
        .map(|k| {
            let inv = modulus.from_i128(k as i128).inverse().expect("k < p");
            modulus.from_bigint(&binomial(2 * k, k)) * inv
        })
        .sum();
    let rhs = modulus.reduce(&corollary_rhs_exact(p)?)?;
    Ok(CheckResult::new("corollary", p, lhs, rhs))
}

pub fn corollary_check(p: u64) -> Result<bool> {
    Ok(corollary_report(p)?.pass)
}
