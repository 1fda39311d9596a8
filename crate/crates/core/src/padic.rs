//! Residues modulo `p^e`, exact Bernoulli numbers, and the invariant
//! `X_p = B_{p-3}/(p-3) - B_{2p-4}/(4p-8)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::rational::{self, Rational};

/// The ring `Z/p^e`. `p^e` must fit in 64 bits so products fit in `u128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    e: u32,
    m: u128,
}

impl Modulus {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p < 2 || e == 0 {
            return Err(Error::Domain(format!("invalid modulus {p}^{e}")));
        }
        let m = (p as u128)
            .checked_pow(e)
            .filter(|&m| m <= u64::MAX as u128)
            .ok_or(Error::ModulusTooLarge { p, e })?;
        Ok(Modulus { p, e, m })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn value(&self) -> u128 {
        self.m
    }

    pub fn zero(&self) -> PResidue {
        PResidue { value: 0, modulus: *self }
    }

    pub fn one(&self) -> PResidue {
        self.from_i128(1)
    }

    pub fn from_i128(&self, v: i128) -> PResidue {
        let m = self.m as i128;
        PResidue {
            value: v.rem_euclid(m) as u128,
            modulus: *self,
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> PResidue {
        let m = BigInt::from(self.m);
        let r = v.mod_floor(&m);
        PResidue {
            value: r.to_u128().expect("reduced value fits"),
            modulus: *self,
        }
    }

    /// Maps a `p`-integral rational into the ring.
    pub fn reduce(&self, q: &Rational) -> Result<PResidue> {
        let den = self.from_bigint(q.denom());
        let inv = den.inverse().ok_or_else(|| Error::NotPIntegral {
            value: rational::display(q),
            p: self.p,
        })?;
        Ok(self.from_bigint(q.numer()) * inv)
    }

    /// Same ring with a smaller exponent.
    pub fn lower(&self, e: u32) -> Modulus {
        assert!(e >= 1 && e <= self.e);
        Modulus::new(self.p, e).expect("smaller modulus fits")
    }
}

/// An element of `Z/p^e`, always reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PResidue {
    value: u128,
    modulus: Modulus,
}

impl PResidue {
    pub fn value(&self) -> u128 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.value % self.modulus.p as u128 != 0
    }

    /// Extended-gcd inverse; `None` for non-units.
    pub fn inverse(&self) -> Option<PResidue> {
        if !self.is_unit() {
            return None;
        }
        let m = self.modulus.m as i128;
        let (mut old_r, mut r) = (self.value as i128, m);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Some(self.modulus.from_i128(old_s))
    }

    pub fn pow(&self, exp: u64) -> PResidue {
        let mut base = *self;
        let mut acc = self.modulus.one();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow_signed(&self, exp: i64) -> Option<PResidue> {
        if exp >= 0 {
            Some(self.pow(exp as u64))
        } else {
            self.inverse().map(|inv| inv.pow(exp.unsigned_abs()))
        }
    }

    /// Reduces into `Z/p^e'` for `e' ≤ e`.
    pub fn reduce_to(&self, e: u32) -> PResidue {
        let target = self.modulus.lower(e);
        PResidue {
            value: self.value % target.m,
            modulus: target,
        }
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn signed_value(&self) -> i128 {
        let m = self.modulus.m;
        if self.value > m / 2 {
            self.value as i128 - m as i128
        } else {
            self.value as i128
        }
    }
}

impl Add for PResidue {
    type Output = PResidue;
    fn add(self, rhs: PResidue) -> PResidue {
        assert_eq!(self.modulus, rhs.modulus, "residue moduli differ");
        PResidue {
            value: (self.value + rhs.value) % self.modulus.m,
            modulus: self.modulus,
        }
    }
}

impl Sub for PResidue {
    type Output = PResidue;
    fn sub(self, rhs: PResidue) -> PResidue {
        assert_eq!(self.modulus, rhs.modulus, "residue moduli differ");
        PResidue {
            value: (self.value + self.modulus.m - rhs.value) % self.modulus.m,
            modulus: self.modulus,
        }
    }
}

impl Mul for PResidue {
    type Output = PResidue;
    fn mul(self, rhs: PResidue) -> PResidue {
        assert_eq!(self.modulus, rhs.modulus, "residue moduli differ");
        PResidue {
            value: self.value * rhs.value % self.modulus.m,
            modulus: self.modulus,
        }
    }
}

impl Neg for PResidue {
    type Output = PResidue;
    fn neg(self) -> PResidue {
        self.modulus.zero() - self
    }
}

impl std::iter::Sum for PResidue {
    fn sum<I: Iterator<Item = PResidue>>(mut iter: I) -> PResidue {
        let first = iter.next().expect("sum of residues needs at least one term");
        iter.fold(first, |a, b| a + b)
    }
}

impl fmt::Display for PResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.modulus.p, self.modulus.e)
    }
}

pub fn reduce_mod(q: &Rational, p: u64, e: u32) -> Result<PResidue> {
    Modulus::new(p, e)?.reduce(q)
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// `B_m` from `Σ_{j=0}^{m} C(m+1, j) B_j = 0`, `B_0 = 1` (so `B_1 = -1/2`).
pub fn bernoulli(m: usize) -> Rational {
    {
        let cache = BERNOULLI.read().expect("bernoulli cache poisoned");
        if let Some(b) = cache.get(m) {
            return b.clone();
        }
    }
    let mut cache = BERNOULLI.write().expect("bernoulli cache poisoned");
    while cache.len() <= m {
        let next = bernoulli_next(&cache);
        cache.push(next);
    }
    cache[m].clone()
}

fn bernoulli_next(known: &[Rational]) -> Rational {
    let m = known.len();
    if m == 0 {
        return Rational::one();
    }
    if m > 1 && m % 2 == 1 {
        return Rational::zero();
    }
    // C(m+1, j) built incrementally
    let mut binom = BigInt::one();
    let mut acc = Rational::zero();
    for (j, b) in known.iter().enumerate() {
        if !b.is_zero() {
            acc += b * Rational::from_integer(binom.clone());
        }
        binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
    }
    -acc / Rational::from_integer(BigInt::from(m + 1))
}

pub fn require_prime_above_five(p: u64) -> Result<()> {
    if p <= 5 || !is_prime(p) {
        return Err(Error::Domain(format!("expected a prime p > 5, got {p}")));
    }
    Ok(())
}

/// `X_p = B_{p-3}/(p-3) - B_{2p-4}/(4p-8)`, exact and `p`-integral.
pub fn x_p(p: u64) -> Result<Rational> {
    require_prime_above_five(p)?;
    let pu = p as usize;
    let x = bernoulli(pu - 3) / rational::int(p as i64 - 3)
        - bernoulli(2 * pu - 4) / rational::int(4 * p as i64 - 8);
    assert!(
        (x.denom() % BigInt::from(p)).is_positive(),
        "X_{p} is not {p}-integral"
    );
    Ok(x)
}

// ---------------------------------------------------------------------------
// Multiple harmonic sums mod p^e

/// `[H_0(s), …, H_n(s)]` in `Z/p^e`, streamed without forming rationals; requires `n < p`.
pub fn mhs_prefix_mod(n: u64, s: &Composition, modulus: Modulus) -> Vec<PResidue> {
    assert!(n < modulus.p(), "indices must stay below p");
    let len = n as usize + 1;
    let inverses: Vec<PResidue> = (0..len as u64)
        .map(|j| {
            if j == 0 {
                modulus.zero()
            } else {
                modulus.from_i128(j as i128).inverse().expect("j < p is a unit")
            }
        })
        .collect();
    let mut row = vec![modulus.one(); len];
    for &exponent in s.parts() {
        let mut next = Vec::with_capacity(len);
        next.push(modulus.zero());
        for j in 1..len {
            let term = row[j - 1] * inverses[j].pow(exponent as u64);
            let value = next[j - 1] + term;
            next.push(value);
        }
        row = next;
    }
    row
}

/// `H_{p-1}(s) mod p^e`.
pub fn mhs_mod(s: &Composition, p: u64, e: u32) -> Result<PResidue> {
    let modulus = Modulus::new(p, e)?;
    Ok(*mhs_prefix_mod(p - 1, s, modulus).last().expect("nonempty"))
}
