//! Exact arithmetic for multiple harmonic sums
//!
//! `H_n(s) = Σ_{1 ≤ k_1 < … < k_d ≤ n} 1/(k_1^{s_1} ⋯ k_d^{s_d})`
//!
//! The crate is organized bottom-up:
//! - [`composition`] and [`mhs`]: exponent vectors and the brute-force evaluator
//! - [`poly`], [`stuffle`], [`expr`]: the quasi-shuffle product and the expression algebra
//! - [`summation`]: closed forms for `Σ_{k=1}^n Π_j H_k(s_j)` and the coefficient tables
//! - [`reduction`]: homogeneous sums `H_n({1}^d)` in terms of power sums
//! - [`padic`] and [`congruence`]: Bernoulli numbers, `X_p`, residues mod `p^e`, and the
//!   congruence registry
//! - [`theorem`]: the alternating binomial power sums and their supporting identities

pub mod composition;
pub mod congruence;
pub mod crosscheck;
pub mod error;
pub mod expr;
pub mod identities;
pub mod mhs;
pub mod padic;
pub mod partitions;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod reduction;
pub mod stuffle;
pub mod summation;
pub mod tables;
pub mod theorem;

pub use composition::Composition;
pub use error::{Error, Result};
pub use expr::{MhsExpression, MhsMonomial};
pub use mhs::{eval_mhs, eval_mhs_direct};
pub use padic::PResidue;
pub use poly::NPolynomial;
pub use rational::Rational;
