//! Reference closed forms for sums of homogeneous products of weight 1 to 3.

use crate::composition::Composition;
use crate::expr::MhsExpression;
use crate::poly::NPolynomial;
use crate::rational::{int, rat, Rational};

#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub name: &'static str,
    /// The product under `Σ_{k=1}^n`.
    pub lhs: Vec<Composition>,
    pub rhs: MhsExpression,
}

fn lin(a: Rational, b: Rational) -> NPolynomial {
    NPolynomial::linear(a, b)
}

fn ones(blocks: &[usize]) -> Vec<Composition> {
    blocks.iter().map(|&d| Composition::ones(d)).collect()
}

fn term(coeff: NPolynomial, blocks: &[usize]) -> MhsExpression {
    MhsExpression::term(coeff, ones(blocks))
}

/// `H_n(1) - H_n(1)^2 / 2`
fn h1_minus_half_square() -> MhsExpression {
    &MhsExpression::product(ones(&[1])) - &MhsExpression::product(ones(&[1, 1])).scale(&rat(1, 2))
}

fn h2() -> MhsExpression {
    MhsExpression::symbol(Composition::single(2))
}

pub fn known_identities() -> Vec<IdentityRecord> {
    let n_plus_1 = || lin(int(1), int(1));
    let n_times = |c: i64| MhsExpression::poly(lin(int(c), int(0)));
    vec![
        IdentityRecord {
            name: "sum H_k(1)",
            lhs: ones(&[1]),
            rhs: &term(n_plus_1(), &[1]) - &n_times(1),
        },
        IdentityRecord {
            name: "sum H_k({1}^2)",
            lhs: ones(&[2]),
            rhs: &(&term(n_plus_1(), &[2]) - &term(lin(int(1), int(0)), &[1])) + &n_times(1),
        },
        IdentityRecord {
            name: "sum H_k(1)^2",
            lhs: ones(&[1, 1]),
            rhs: &(&term(n_plus_1(), &[1, 1]) - &term(lin(int(2), int(1)), &[1])) + &n_times(2),
        },
        IdentityRecord {
            name: "sum H_k({1}^3)",
            lhs: ones(&[3]),
            rhs: &(&(&term(n_plus_1(), &[3])
                + &h1_minus_half_square().scale_poly(&lin(int(1), int(0))))
                + &h2().scale_poly(&lin(rat(1, 2), int(0))))
                - &n_times(1),
        },
        IdentityRecord {
            name: "sum H_k(1) H_k({1}^2)",
            lhs: ones(&[1, 2]),
            rhs: &(&(&term(n_plus_1(), &[1, 2])
                + &h1_minus_half_square().scale_poly(&lin(int(3), int(1))))
                + &h2().scale_poly(&lin(rat(1, 2), rat(1, 2))))
                - &n_times(3),
        },
        IdentityRecord {
            name: "sum H_k(1)^3",
            lhs: ones(&[1, 1, 1]),
            rhs: &(&(&term(n_plus_1(), &[1, 1, 1])
                + &h1_minus_half_square().scale_poly(&lin(int(6), int(3))))
                + &h2().scale(&rat(1, 2)))
                - &n_times(6),
        },
    ]
}
