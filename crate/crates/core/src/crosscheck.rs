//! Re-derives the low-weight sum congruences symbolically: take the closed form of
//! `Σ_{k=1}^{n} Π_j H_k(s_j)`, set `n = p - 1`, rewrite every MHS as a polynomial in the
//! atoms `H(1), H(2), H(3), H(1,2)`, and substitute their known truncated expansions.
//!
//! Values are truncated expansions `Σ c_{ij} p^i X_p^j + O(p^prec)` with `p` and `X_p` kept
//! symbolic. All rational coefficients that occur have denominators built from 2, 3 and 5,
//! so they are `p`-adic units for every prime `p > 5`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::congruence::{sum_claims, ClosedForm, CongruenceClaim, CongruenceLhs};
use crate::error::{Error, Result};
use crate::expr::MhsExpression;
use crate::poly::NPolynomial;
use crate::rational::{int, Rational};
use crate::summation::{rebase, sum_product};

/// `Σ c_{(i, j)} p^i X^j + O(p^prec)`; `prec == u32::MAX` means exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PJet {
    terms: BTreeMap<(u32, u32), Rational>,
    prec: u32,
}

fn assert_small_denominator(c: &Rational) {
    let mut d = c.denom().clone();
    for q in [2u32, 3, 5] {
        let q = BigInt::from(q);
        while d.is_multiple_of(&q) {
            d /= &q;
        }
    }
    assert!(d.is_one(), "coefficient {c} is not a unit for all p > 5");
}

impl PJet {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Rational)>, prec: u32) -> Self {
        let mut jet = PJet {
            terms: BTreeMap::new(),
            prec,
        };
        for (key, c) in terms {
            jet.add_term(key, c);
        }
        jet
    }

    pub fn exact_zero(prec: u32) -> Self {
        Self::new([], prec)
    }

    /// A polynomial in `p` known to precision `prec`.
    pub fn from_p_poly(poly: &NPolynomial, prec: u32) -> Self {
        Self::new(
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
            prec,
        )
    }

    pub fn from_closed_form(form: &ClosedForm, prec: u32) -> Self {
        let constant = form
            .constant
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as u32, 0), c.clone()));
        let x = form
            .x_coeff
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as u32, 1), c.clone()));
        Self::new(constant.chain(x), prec)
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if key.0 >= self.prec || c.is_zero() {
            return;
        }
        assert_small_denominator(&c);
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Lower bound on the `p`-adic valuation.
    pub fn valuation(&self) -> u32 {
        self.terms
            .keys()
            .map(|&(i, _)| i)
            .min()
            .unwrap_or(self.prec)
            .min(self.prec)
    }

    pub fn add(&self, other: &PJet) -> PJet {
        let prec = self.prec.min(other.prec);
        PJet::new(
            self.terms
                .iter()
                .chain(&other.terms)
                .map(|(k, c)| (*k, c.clone())),
            prec,
        )
    }

    pub fn mul(&self, other: &PJet) -> PJet {
        let prec = self
            .prec
            .saturating_add(other.valuation())
            .min(other.prec.saturating_add(self.valuation()));
        let mut out = PJet::exact_zero(prec);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    /// Agrees with `other` modulo `p^e`, and both are known at least that far.
    pub fn congruent(&self, other: &PJet, e: u32) -> bool {
        if self.prec < e || other.prec < e {
            return false;
        }
        let diff = self.add(&other.negate());
        diff.terms.keys().all(|&(i, _)| i >= e)
    }

    fn negate(&self) -> PJet {
        PJet {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
            prec: self.prec,
        }
    }
}

/// The atoms and their truncated expansions from the base congruences.
pub fn atom_expansions() -> Vec<(Composition, PJet)> {
    let c = |t: &str| t.parse::<Composition>().expect("static composition");
    let x = |pdeg: u32, coeff: i64| ((pdeg, 1), int(coeff));
    vec![
        (c("1"), PJet::new([x(2, 2)], 4)),
        (c("2"), PJet::new([x(1, -4)], 3)),
        (c("3"), PJet::exact_zero(2)),
        (c("1,2"), PJet::new([x(0, -6)], 2)),
    ]
}

/// Products of atoms of total weight ≤ `max_weight`, including the empty product.
fn atom_monomials(atoms: &[Composition], max_weight: u32) -> Vec<Vec<usize>> {
    fn go(atoms: &[Composition], start: usize, left: u32, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for (i, atom) in atoms.iter().enumerate().skip(start) {
            if atom.weight() <= left {
                prefix.push(i);
                go(atoms, i, left - atom.weight(), prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(atoms, 0, max_weight, &mut Vec::new(), &mut out);
    out
}

/// Outcome of re-deriving one claim.
#[derive(Clone, Debug)]
pub struct CrossDerivation {
    pub claim_id: String,
    pub derived: PJet,
    pub claimed: PJet,
    pub exponent: u32,
    pub pass: bool,
}

/// Re-derives a sum claim from the closed form and the atom expansions.
pub fn cross_derive(claim: &CongruenceClaim) -> Result<CrossDerivation> {
    let CongruenceLhs::SumProduct(factors) = &claim.lhs else {
        return Err(Error::Domain(format!("{} is not a sum claim", claim.id)));
    };
    let weight: u32 = factors.iter().map(Composition::weight).sum();
    if weight > 3 {
        return Err(Error::Domain(format!(
            "{}: atom expansions only cover weight ≤ 3",
            claim.id
        )));
    }
    let closed = sum_product(factors)?;
    // n = p - 1
    let n_as_p = NPolynomial::linear(Rational::one(), int(-1));
    let closed = closed.substitute_n(&n_as_p);

    let atoms = atom_expansions();
    let atom_syms: Vec<Composition> = atoms.iter().map(|(s, _)| s.clone()).collect();
    let monomials = atom_monomials(&atom_syms, weight);
    let basis: Vec<MhsExpression> = monomials
        .iter()
        .map(|m| MhsExpression::product(m.iter().map(|&i| atom_syms[i].clone()).collect()))
        .collect();
    let coeffs = rebase(&closed, &basis)?;

    let mut derived = PJet::exact_zero(u32::MAX);
    for (monomial, q) in monomials.iter().zip(&coeffs) {
        if q.is_zero() {
            continue;
        }
        let value = monomial
            .iter()
            .fold(PJet::from_p_poly(&NPolynomial::one(), u32::MAX), |acc, &i| acc.mul(&atoms[i].1));
        derived = derived.add(&PJet::from_p_poly(q, u32::MAX).mul(&value));
    }
    let claimed = PJet::from_closed_form(&claim.rhs, claim.exponent);
    let pass = derived.congruent(&claimed, claim.exponent);
    Ok(CrossDerivation {
        claim_id: claim.id.clone(),
        derived,
        claimed,
        exponent: claim.exponent,
        pass,
    })
}

/// Cross-derivation of every sum claim of weight ≤ 3.
pub fn cross_derive_low_weight() -> Result<Vec<CrossDerivation>> {
    sum_claims()
        .iter()
        .filter(|c| match &c.lhs {
            CongruenceLhs::SumProduct(f) => f.iter().map(Composition::weight).sum::<u32>() <= 3,
            CongruenceLhs::Mhs(_) => false,
        })
        .map(cross_derive)
        .collect()
}
