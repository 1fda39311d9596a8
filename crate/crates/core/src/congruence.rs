//! Declarative registry of congruences modulo `p^e` and the suites that check them.
//!
//! Each claim has a left side computed by brute force in `Z/p^e` and a right side
//! `A(p) + B(p)·X_p` with `A`, `B` polynomials in `p`.

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::Result;
use crate::padic::{mhs_prefix_mod, require_prime_above_five, x_p, Modulus, PResidue};
use crate::poly::NPolynomial;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceLhs {
    /// `H_{p-1}(s)`
    Mhs(Composition),
    /// `Σ_{k=1}^{p-1} Π_j H_k(s_j)`
    SumProduct(Vec<Composition>),
}

/// `constant(p) + x_coeff(p)·X_p`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub constant: NPolynomial,
    pub x_coeff: NPolynomial,
}

impl ClosedForm {
    pub fn eval(&self, p: u64, x: &Rational) -> Rational {
        let p = int(p as i64);
        self.constant.eval(&p) + self.x_coeff.eval(&p) * x
    }
}

#[derive(Clone, Debug)]
pub struct CongruenceClaim {
    pub id: String,
    pub description: String,
    pub lhs: CongruenceLhs,
    pub rhs: ClosedForm,
    pub exponent: u32,
    pub prime_floor: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct CheckResult {
    pub claim_id: String,
    pub p: u64,
    pub modulus: u64,
    pub lhs_residue: u64,
    pub rhs_residue: u64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(claim_id: impl Into<String>, p: u64, lhs: PResidue, rhs: PResidue) -> Self {
        assert_eq!(lhs.modulus(), rhs.modulus());
        CheckResult {
            claim_id: claim_id.into(),
            p,
            modulus: lhs.modulus().value() as u64,
            lhs_residue: lhs.value() as u64,
            rhs_residue: rhs.value() as u64,
            pass: lhs == rhs,
        }
    }
}

fn poly(coeffs: &[i64]) -> NPolynomial {
    NPolynomial::new(coeffs.iter().map(|&c| int(c)).collect())
}

fn comp(text: &str) -> Composition {
    text.parse().expect("static composition")
}

fn claim(
    id: &str,
    description: &str,
    lhs: CongruenceLhs,
    constant: &[i64],
    x_coeff: &[i64],
    exponent: u32,
) -> CongruenceClaim {
    CongruenceClaim {
        id: id.to_string(),
        description: description.to_string(),
        lhs,
        rhs: ClosedForm {
            constant: poly(constant),
            x_coeff: poly(x_coeff),
        },
        exponent,
        prime_floor: 7,
    }
}

/// Known congruences for `H_{p-1}(s)`, plus the homogeneous ones derived from them.
pub fn base_claims() -> Vec<CongruenceClaim> {
    use CongruenceLhs::Mhs;
    vec![
        claim("H(1)", "H_{p-1}(1) = 2p^2 X_p mod p^4", Mhs(comp("1")), &[], &[0, 0, 2], 4),
        claim("H(2)", "H_{p-1}(2) = -4p X_p mod p^3", Mhs(comp("2")), &[], &[0, -4], 3),
        claim("H(3)", "H_{p-1}(3) = 0 mod p^2", Mhs(comp("3")), &[], &[], 2),
        claim("H(1,2)", "H_{p-1}(1,2) = -6 X_p mod p^2", Mhs(comp("1,2")), &[], &[-6], 2),
        claim("H(4)", "H_{p-1}(4) = 0 mod p", Mhs(comp("4")), &[], &[], 1),
        claim("H(1,1,2)", "H_{p-1}({1}^2,2) = 0 mod p", Mhs(comp("1,1,2")), &[], &[], 1),
        claim("H(1,3)", "H_{p-1}(1,3) = 0 mod p", Mhs(comp("1,3")), &[], &[], 1),
        claim("H(1^2)", "H_{p-1}({1}^2) = 2p X_p mod p^3", Mhs(comp("1^2")), &[], &[0, 2], 3),
        claim("H(1^3)", "H_{p-1}({1}^3) = 0 mod p^2", Mhs(comp("1^3")), &[], &[], 2),
        claim("H(1^4)", "H_{p-1}({1}^4) = 0 mod p", Mhs(comp("1^4")), &[], &[], 1),
    ]
}

fn blocks(sizes: &[usize]) -> CongruenceLhs {
    CongruenceLhs::SumProduct(sizes.iter().map(|&d| Composition::ones(d)).collect())
}

/// `Σ_{k=1}^{p-1} Π_j H_k({1}^{λ_j})` for every product of homogeneous blocks of weight ≤ 5.
pub fn sum_claims() -> Vec<CongruenceClaim> {
    vec![
        claim("S[1]", "sum H_k(1) = -(p-1) + 2p^3 X_p mod p^5", blocks(&[1]), &[1, -1], &[0, 0, 0, 2], 5),
        claim("S[2]", "sum H_k({1}^2) = (p-1) + (4-2p)p^2 X_p mod p^4", blocks(&[2]), &[-1, 1], &[0, 0, 4, -2], 4),
        claim("S[1,1]", "sum H_k(1)^2 = 2(p-1) + (2-4p)p^2 X_p mod p^4", blocks(&[1, 1]), &[-2, 2], &[0, 0, 2, -4], 4),
        claim("S[3]", "sum H_k({1}^3) = -(p-1) + (2-4p)p X_p mod p^3", blocks(&[3]), &[1, -1], &[0, 2, -4], 3),
        claim("S[1,2]", "sum H_k(1)H_k({1}^2) = -3(p-1) - 6p^2 X_p mod p^3", blocks(&[1, 2]), &[3, -3], &[0, 0, -6], 3),
        claim("S[1,1,1]", "sum H_k(1)^3 = -6(p-1) + (-2-6p)p X_p mod p^3", blocks(&[1, 1, 1]), &[6, -6], &[0, -2, -6], 3),
        claim("S[4]", "sum H_k({1}^4) = (p-1) - 2p X_p mod p^2", blocks(&[4]), &[-1, 1], &[0, -2], 2),
        claim("S[2,2]", "sum H_k({1}^2)^2 = 6(p-1) - 6 X_p mod p^2", blocks(&[2, 2]), &[-6, 6], &[-6], 2),
        claim("S[1,3]", "sum H_k(1)H_k({1}^3) = 4(p-1) - 2p X_p mod p^2", blocks(&[1, 3]), &[-4, 4], &[0, -2], 2),
        claim("S[1,1,2]", "sum H_k(1)^2 H_k({1}^2) = 12(p-1) + (-6+2p) X_p mod p^2", blocks(&[1, 1, 2]), &[-12, 12], &[-6, 2], 2),
        claim("S[1,1,1,1]", "sum H_k(1)^4 = 24(p-1) + (-12+8p) X_p mod p^2", blocks(&[1, 1, 1, 1]), &[-24, 24], &[-12, 8], 2),
        claim("S[5]", "sum H_k({1}^5) = 1 mod p", blocks(&[5]), &[1], &[], 1),
        claim("S[1,4]", "sum H_k(1)H_k({1}^4) = 5 mod p", blocks(&[1, 4]), &[5], &[], 1),
        claim("S[2,3]", "sum H_k({1}^2)H_k({1}^3) = 10 + 6 X_p mod p", blocks(&[2, 3]), &[10], &[6], 1),
        claim("S[1,1,3]", "sum H_k(1)^2 H_k({1}^3) = 20 + 6 X_p mod p", blocks(&[1, 1, 3]), &[20], &[6], 1),
        claim("S[1,2,2]", "sum H_k(1)H_k({1}^2)^2 = 30 + 18 X_p mod p", blocks(&[1, 2, 2]), &[30], &[18], 1),
        claim("S[1,1,1,2]", "sum H_k(1)^3 H_k({1}^2) = 60 + 30 X_p mod p", blocks(&[1, 1, 1, 2]), &[60], &[30], 1),
        claim("S[1,1,1,1,1]", "sum H_k(1)^5 = 120 + 60 X_p mod p", blocks(&[1, 1, 1, 1, 1]), &[120], &[60], 1),
    ]
}

/// Every registered claim, base congruences first.
pub fn all_claims() -> Vec<CongruenceClaim> {
    let mut out = base_claims();
    out.extend(sum_claims());
    out
}

/// `Σ_{k=1}^{p-1} Π_j H_k(s_j)` in `Z/p^e`.
pub fn sum_product_mod(factors: &[Composition], modulus: Modulus) -> PResidue {
    let n = modulus.p() - 1;
    let tables: Vec<Vec<PResidue>> = factors
        .iter()
        .map(|s| mhs_prefix_mod(n, s, modulus))
        .collect();
    (1..=n as usize)
        .map(|k| tables.iter().fold(modulus.one(), |acc, t| acc * t[k]))
        .fold(modulus.zero(), |a, b| a + b)
}

pub fn check_claim(claim: &CongruenceClaim, p: u64) -> Result<CheckResult> {
    require_prime_above_five(p)?;
    let modulus = Modulus::new(p, claim.exponent)?;
    let lhs = match &claim.lhs {
        CongruenceLhs::Mhs(s) => *mhs_prefix_mod(p - 1, s, modulus).last().expect("nonempty"),
        CongruenceLhs::SumProduct(factors) => sum_product_mod(factors, modulus),
    };
    let rhs = modulus.reduce(&claim.rhs.eval(p, &x_p(p)?))?;
    Ok(CheckResult::new(claim.id.clone(), p, lhs, rhs))
}

fn run(claims: &[CongruenceClaim], p: u64) -> Result<Vec<CheckResult>> {
    require_prime_above_five(p)?;
    claims
        .iter()
        .filter(|c| p >= c.prime_floor)
        .map(|c| check_claim(c, p))
        .collect()
}

pub fn base_congruence_suite(p: u64) -> Result<Vec<CheckResult>> {
    run(&base_claims(), p)
}

pub fn sum_congruence_suite(p: u64) -> Result<Vec<CheckResult>> {
    run(&sum_claims(), p)
}
