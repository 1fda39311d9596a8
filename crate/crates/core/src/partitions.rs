//! Integer partitions and the counting coefficients used with them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A partition in non-increasing order.
pub type Partition = Vec<u32>;

/// All partitions of `j` into exactly `r` parts, lexicographically decreasing
/// (`(3,1)` before `(2,2)`).
pub fn enumerate_partitions(j: u32, r: u32) -> Vec<Partition> {
    fn go(remaining: u32, parts: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if parts == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // each of the remaining parts is ≥ 1
        let upper = max.min(remaining.saturating_sub(parts - 1));
        for first in (1..=upper).rev() {
            if first * parts < remaining {
                break;
            }
            prefix.push(first);
            go(remaining - first, parts - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 && r <= j {
        go(j, r, j, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `d`, grouped by number of parts.
pub fn all_partitions(d: u32) -> Vec<Partition> {
    (1..=d).flat_map(|r| enumerate_partitions(d, r)).collect()
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `j! / (λ_1! ⋯ λ_r!)`
pub fn multinomial(parts: &[u32]) -> BigInt {
    let j: u32 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(j), |acc, &p| acc / factorial(p))
}

/// Number of distinct orderings of the parts: `r! / Π m_i!` over part multiplicities.
pub fn arrangements(parts: &[u32]) -> BigInt {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut denominator = BigInt::one();
    let mut run = 0u32;
    for (i, p) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *p { run + 1 } else { 1 };
        denominator *= BigInt::from(run);
    }
    factorial(sorted.len() as u32) / denominator
}

/// `C(a, r) = a(a-1)⋯(a-r+1) / r!` for any integer `a`.
pub fn generalized_binomial(a: i64, r: u32) -> BigInt {
    let falling = (0..r as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(a - i));
    let (quotient, remainder) = falling.div_rem(&factorial(r));
    assert!(remainder.is_zero(), "C({a}, {r}) is not an integer");
    quotient
}

/// Ordinary binomial `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
