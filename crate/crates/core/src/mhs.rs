//! Brute-force evaluation of `H_n(s)` over exact rationals.
//!
//! Two independent routes: [`eval_mhs_direct`] enumerates increasing index tuples,
//! [`eval_mhs`] peels the last entry, `H_n(s', s_d) = Σ_{j=1}^n H_{j-1}(s') / j^{s_d}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::rational::Rational;

pub fn eval_mhs(n: u64, s: &Composition) -> Rational {
    prefix_values(n, s).pop().expect("prefix_values returns n + 1 values")
}

/// `[H_0(s), H_1(s), …, H_n(s)]`.
pub fn prefix_values(n: u64, s: &Composition) -> Vec<Rational> {
    let len = n as usize + 1;
    let mut row = vec![Rational::one(); len];
    for &exponent in s.parts() {
        let mut next = Vec::with_capacity(len);
        next.push(Rational::zero());
        for j in 1..len {
            let term = &row[j - 1] / Rational::from_integer(inverse_power_denominator(j as u64, exponent));
            let value = &next[j - 1] + term;
            next.push(value);
        }
        row = next;
    }
    row
}

fn inverse_power_denominator(j: u64, exponent: u32) -> BigInt {
    num_traits::pow(BigInt::from(j), exponent as usize)
}

/// Direct nested summation over `1 ≤ k_1 < … < k_d ≤ n`.
pub fn eval_mhs_direct(n: u64, s: &Composition) -> Rational {
    fn go(parts: &[u32], lower: u64, n: u64) -> Rational {
        match parts.split_first() {
            None => Rational::one(),
            Some((&exponent, rest)) => {
                let mut total = Rational::zero();
                // leave room for the remaining indices
                let upper = n.saturating_sub(rest.len() as u64);
                for k in lower..=upper {
                    let inner = go(rest, k + 1, n);
                    if inner.is_zero() {
                        continue;
                    }
                    total += inner / Rational::from_integer(inverse_power_denominator(k, exponent));
                }
                total
            }
        }
    }
    go(s.parts(), 1, n)
}
