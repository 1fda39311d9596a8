//! Formal sums of products of multiple harmonic sums with coefficients in `Q[n]`.
//!
//! Multiplication here is formal (factor multisets concatenate). [`MhsExpression::linearize`]
//! applies the stuffle product until every monomial has at most one factor; that linear form
//! is canonical and decides equality.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::mhs::prefix_values;
use crate::poly::NPolynomial;
use crate::rational::{self, Rational};
use crate::stuffle::stuffle_all;

/// A product of MHS factors scaled by a polynomial in `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MhsMonomial {
    pub coeff: NPolynomial,
    /// Sorted canonically; never contains the empty composition.
    pub factors: Vec<Composition>,
}

impl MhsMonomial {
    pub fn weight(&self) -> u32 {
        self.factors.iter().map(Composition::weight).sum()
    }
}

/// Keyed by the sorted factor list; coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MhsExpression {
    terms: BTreeMap<Vec<Composition>, NPolynomial>,
}

fn canonical_factors(mut factors: Vec<Composition>) -> Vec<Composition> {
    factors.retain(|f| !f.is_empty());
    factors.sort();
    factors
}

impl MhsExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(NPolynomial::constant(c))
    }

    pub fn poly(p: NPolynomial) -> Self {
        Self::term(p, Vec::new())
    }

    /// The single symbol `H_n(s)`.
    pub fn symbol(s: Composition) -> Self {
        Self::term(NPolynomial::one(), vec![s])
    }

    /// `Π H_n(s_j)` with coefficient 1.
    pub fn product(factors: Vec<Composition>) -> Self {
        Self::term(NPolynomial::one(), factors)
    }

    pub fn term(coeff: NPolynomial, factors: Vec<Composition>) -> Self {
        let mut e = Self::zero();
        e.add_term(canonical_factors(factors), &coeff);
        e
    }

    pub fn from_monomials(monomials: impl IntoIterator<Item = MhsMonomial>) -> Self {
        let mut e = Self::zero();
        for m in monomials {
            e.add_term(canonical_factors(m.factors), &m.coeff);
        }
        e
    }

    fn add_term(&mut self, key: Vec<Composition>, coeff: &NPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = MhsMonomial> + '_ {
        self.terms.iter().map(|(k, c)| MhsMonomial {
            coeff: c.clone(),
            factors: k.clone(),
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Composition], &NPolynomial)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    /// Coefficient of the given (canonicalized) factor product.
    pub fn coeff_of(&self, factors: &[Composition]) -> NPolynomial {
        self.terms
            .get(&canonical_factors(factors.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.scale_poly(&NPolynomial::constant(factor.clone()))
    }

    pub fn scale_poly(&self, factor: &NPolynomial) -> Self {
        let mut e = Self::zero();
        for (k, c) in &self.terms {
            e.add_term(k.clone(), &(c * factor));
        }
        e
    }

    /// Largest coefficient degree (0 for the zero expression).
    pub fn max_degree(&self) -> usize {
        self.terms
            .values()
            .filter_map(NPolynomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Largest total weight over all monomials.
    pub fn max_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|k| k.iter().map(Composition::weight).sum())
            .max()
            .unwrap_or(0)
    }

    /// Distinct nonempty compositions appearing as factors.
    pub fn symbols(&self) -> BTreeSet<Composition> {
        self.terms.keys().flatten().cloned().collect()
    }

    pub fn is_linear(&self) -> bool {
        self.terms.keys().all(|k| k.len() <= 1)
    }

    /// Stuffle-reduced form: every monomial has at most one factor.
    pub fn linearize(&self) -> Self {
        let mut out = Self::zero();
        for (key, coeff) in &self.terms {
            if key.len() <= 1 {
                out.add_term(key.clone(), coeff);
                continue;
            }
            for (word, mult) in stuffle_all(key) {
                let scaled = coeff.scale(&rational::int(mult as i64));
                out.add_term(canonical_factors(vec![word]), &scaled);
            }
        }
        out
    }

    pub fn eval(&self, n: u64) -> Rational {
        self.eval_range(n).pop().expect("eval_range is nonempty")
    }

    /// Values at `n = 0, 1, …, n_max`.
    pub fn eval_range(&self, n_max: u64) -> Vec<Rational> {
        let tables: BTreeMap<Composition, Vec<Rational>> = self
            .symbols()
            .into_iter()
            .map(|s| {
                let values = prefix_values(n_max, &s);
                (s, values)
            })
            .collect();
        (0..=n_max)
            .map(|n| {
                let at = n as usize;
                self.terms
                    .iter()
                    .map(|(key, coeff)| {
                        key.iter()
                            .fold(coeff.eval_int(n as i64), |acc, s| acc * &tables[s][at])
                    })
                    .fold(Rational::zero(), |acc, v| acc + v)
            })
            .collect()
    }

    /// Rewrites `n` as a polynomial in another variable (e.g. `n = p - 1`).
    pub fn substitute_n(&self, n_as: &NPolynomial) -> Self {
        let mut e = Self::zero();
        for (k, c) in &self.terms {
            e.add_term(k.clone(), &c.compose(n_as));
        }
        e
    }
}

/// Symbolic equality after linearization, guarded by exact evaluation at
/// `n = 0, …, D + M` (`D` = max coefficient degree, `M` = number of distinct symbols).
pub fn expr_equal(lhs: &MhsExpression, rhs: &MhsExpression) -> bool {
    let left = lhs.linearize();
    let right = rhs.linearize();
    let symbolic = (&left - &right).is_zero();
    let degree = left.max_degree().max(right.max_degree());
    let symbols = left.symbols().union(&right.symbols()).count();
    let points = (degree + symbols) as u64;
    let numeric = lhs.eval_range(points) == rhs.eval_range(points);
    assert!(
        !symbolic || numeric,
        "stuffle linearization disagrees with evaluation: {lhs} vs {rhs}"
    );
    symbolic
}

impl Add for &MhsExpression {
    type Output = MhsExpression;

    fn add(self, rhs: &MhsExpression) -> MhsExpression {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl Sub for &MhsExpression {
    type Output = MhsExpression;

    fn sub(self, rhs: &MhsExpression) -> MhsExpression {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), &-c);
        }
        out
    }
}

impl Neg for &MhsExpression {
    type Output = MhsExpression;

    fn neg(self) -> MhsExpression {
        MhsExpression {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

/// Formal product: factor multisets are concatenated, coefficients multiply.
impl Mul for &MhsExpression {
    type Output = MhsExpression;

    fn mul(self, rhs: &MhsExpression) -> MhsExpression {
        let mut out = MhsExpression::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut key = ka.clone();
                key.extend(kb.iter().cloned());
                out.add_term(canonical_factors(key), &(ca * cb));
            }
        }
        out
    }
}

impl Add for MhsExpression {
    type Output = MhsExpression;
    fn add(self, rhs: MhsExpression) -> MhsExpression {
        &self + &rhs
    }
}

impl Sub for MhsExpression {
    type Output = MhsExpression;
    fn sub(self, rhs: MhsExpression) -> MhsExpression {
        &self - &rhs
    }
}

impl Mul for MhsExpression {
    type Output = MhsExpression;
    fn mul(self, rhs: MhsExpression) -> MhsExpression {
        &self * &rhs
    }
}

impl Neg for MhsExpression {
    type Output = MhsExpression;
    fn neg(self) -> MhsExpression {
        -&self
    }
}

// ---------------------------------------------------------------------------
// JSON wire format

#[derive(Serialize, Deserialize)]
struct WireMonomial {
    coeff: Vec<String>,
    factors: Vec<String>,
}

impl Serialize for MhsExpression {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireMonomial> = self
            .terms
            .iter()
            .map(|(k, c)| WireMonomial {
                coeff: c.coeffs().iter().map(rational::to_fraction_string).collect(),
                factors: k.iter().map(Composition::to_csv).collect(),
            })
            .collect();
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MhsExpression {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireMonomial>::deserialize(deserializer)?;
        MhsExpression::from_wire(wire).map_err(serde::de::Error::custom)
    }
}

impl MhsExpression {
    fn from_wire(wire: Vec<WireMonomial>) -> Result<Self> {
        let mut monomials = Vec::with_capacity(wire.len());
        for m in wire {
            let coeff = m
                .coeff
                .iter()
                .map(|c| rational::parse_rational(c))
                .collect::<Result<Vec<_>>>()?;
            let factors = m
                .factors
                .iter()
                .map(|f| f.parse::<Composition>())
                .collect::<Result<Vec<_>>>()?;
            monomials.push(MhsMonomial {
                coeff: NPolynomial::new(coeff),
                factors,
            });
        }
        Ok(Self::from_monomials(monomials))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("expression serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse("expression", text, e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Text rendering

fn render_factors(factors: &[Composition]) -> String {
    let mut groups: Vec<(&Composition, usize)> = Vec::new();
    for f in factors {
        match groups.last_mut() {
            Some((g, count)) if *g == f => *count += 1,
            _ => groups.push((f, 1)),
        }
    }
    groups
        .iter()
        .map(|(f, count)| {
            if *count == 1 {
                format!("H_n({})", f.to_csv())
            } else {
                format!("H_n({})^{count}", f.to_csv())
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

fn leading_negative(p: &NPolynomial) -> bool {
    p.coeffs().last().is_some_and(rational::is_negative)
}

/// `(sign, magnitude)` rendering of one monomial.
fn render_monomial(coeff: &NPolynomial, factors: &[Composition]) -> (bool, String) {
    let negative = leading_negative(coeff);
    let magnitude = if negative { -coeff } else { coeff.clone() };
    if factors.is_empty() {
        let text = magnitude.to_string();
        let text = if magnitude.term_count() > 1 { format!("({text})") } else { text };
        return (negative, text);
    }
    let body = render_factors(factors);
    let text = if magnitude == NPolynomial::one() {
        body
    } else if magnitude.term_count() > 1 {
        format!("({magnitude})·{body}")
    } else {
        format!("{magnitude}·{body}")
    };
    (negative, text)
}

impl fmt::Display for MhsExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(ka, _), (kb, _)| {
            let wa: u32 = ka.iter().map(Composition::weight).sum();
            let wb: u32 = kb.iter().map(Composition::weight).sum();
            wb.cmp(&wa).then(kb.len().cmp(&ka.len())).then(ka.cmp(kb))
        });
        for (i, (key, coeff)) in ordered.into_iter().enumerate() {
            let (negative, text) = render_monomial(coeff, key);
            match (i, negative) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}
