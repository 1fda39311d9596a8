//! Univariate polynomials over exact rationals.
//!
//! Used for the `an + b` coefficients attached to MHS products, and for closed forms in `p`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::rational::{self, int, Rational};

/// `coeffs[i]` is the coefficient of `n^i`; never has a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NPolynomial {
    coeffs: Vec<Rational>,
}

impl NPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        NPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a·n + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &NPolynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(NPolynomial::zero(), |acc, c| {
                &(&acc * other) + &NPolynomial::constant(c.clone())
            })
    }

    /// Divides by `n` when the constant term vanishes.
    pub fn div_by_var(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(Self::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }
}

impl Add for &NPolynomial {
    type Output = NPolynomial;

    fn add(self, rhs: &NPolynomial) -> NPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &NPolynomial {
    type Output = NPolynomial;

    fn sub(self, rhs: &NPolynomial) -> NPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &NPolynomial {
    type Output = NPolynomial;

    fn mul(self, rhs: &NPolynomial) -> NPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return NPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NPolynomial::new(out)
    }
}

impl Neg for &NPolynomial {
    type Output = NPolynomial;

    fn neg(self) -> NPolynomial {
        NPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for NPolynomial {
    type Output = NPolynomial;
    fn add(self, rhs: NPolynomial) -> NPolynomial {
        &self + &rhs
    }
}

impl Sub for NPolynomial {
    type Output = NPolynomial;
    fn sub(self, rhs: NPolynomial) -> NPolynomial {
        &self - &rhs
    }
}

impl Mul for NPolynomial {
    type Output = NPolynomial;
    fn mul(self, rhs: NPolynomial) -> NPolynomial {
        &self * &rhs
    }
}

impl Neg for NPolynomial {
    type Output = NPolynomial;
    fn neg(self) -> NPolynomial {
        -&self
    }
}

impl AddAssign<&NPolynomial> for NPolynomial {
    fn add_assign(&mut self, rhs: &NPolynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&NPolynomial> for NPolynomial {
    fn sub_assign(&mut self, rhs: &NPolynomial) {
        *self = &*self - rhs;
    }
}

impl NPolynomial {
    /// Renders with the given variable name, highest power first: `3n^2 - n + 1/2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = rational::is_negative(c);
            let magnitude = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let body = match power {
                0 => rational::display(&magnitude),
                _ => {
                    let monomial = if power == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{power}")
                    };
                    if magnitude.is_one() {
                        monomial
                    } else if magnitude.denom().is_one() {
                        format!("{}{monomial}", magnitude.numer())
                    } else {
                        format!("({}){monomial}", rational::display(&magnitude))
                    }
                }
            };
            out.push_str(&body);
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for NPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("n"))
    }
}
