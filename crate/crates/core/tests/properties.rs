mod common;

use mhs_core::expr::expr_equal;
use mhs_core::padic::{mhs_mod, reduce_mod, x_p};
use mhs_core::primes::primes_between;
use mhs_core::reduction::hoffman_reduce;
use mhs_core::stuffle::stuffle;
use mhs_core::summation::{brute_force_partial_sums, sum_product};
use mhs_core::{eval_mhs, eval_mhs_direct, Composition, MhsExpression, NPolynomial};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn composition(max_weight: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=max_weight.max(1), 0..=max_weight as usize)
        .prop_filter("weight bound", move |v| v.iter().sum::<u32>() <= max_weight)
        .prop_map(|v| Composition::new(v).unwrap())
}

fn nonempty(max_weight: u32) -> impl Strategy<Value = Composition> {
    composition(max_weight).prop_filter("nonempty", |c| !c.is_empty())
}

fn small_expression() -> impl Strategy<Value = MhsExpression> {
    let monomial = (
        prop::collection::vec(-5i64..=5, 0..3),
        prop::collection::vec(nonempty(3), 0..3),
    )
        .prop_map(|(coeffs, factors)| {
            let coeff = NPolynomial::new(coeffs.into_iter().map(mhs_core::rational::int).collect());
            MhsExpression::term(coeff, factors)
        });
    prop::collection::vec(monomial, 0..4)
        .prop_map(|terms| terms.iter().fold(MhsExpression::zero(), |a, b| &a + b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn peel_recursion_matches_nested_loops(s in composition(6), n in 0u64..=20) {
        prop_assume!(s.depth() <= 4 || n <= 12);
        prop_assert_eq!(eval_mhs(n, &s), eval_mhs_direct(n, &s));
    }

    #[test]
    fn nonnegative_and_monotone(s in composition(6), n in 0u64..20) {
        let now = eval_mhs(n, &s);
        let next = eval_mhs(n + 1, &s);
        prop_assert!(now >= mhs_core::rational::int(0));
        prop_assert!(now <= next);
    }

    #[test]
    fn stuffle_is_commutative(s in composition(5), t in composition(5)) {
        prop_assert_eq!(stuffle(&s, &t), stuffle(&t, &s));
    }

    #[test]
    fn stuffle_matches_enumeration_and_grading(s in composition(5), t in composition(5)) {
        let expansion = stuffle(&s, &t);
        for word in expansion.keys() {
            prop_assert_eq!(word.weight(), s.weight() + t.weight());
        }
        let by_enumeration = common::quasi_shuffles_by_enumeration(s.parts(), t.parts());
        let ours: std::collections::BTreeMap<Vec<u32>, u64> =
            expansion.iter().map(|(w, m)| (w.parts().to_vec(), *m)).collect();
        prop_assert_eq!(ours, by_enumeration);
    }

    #[test]
    fn stuffle_agrees_with_evaluation(s in composition(5), t in composition(5), n in 0u64..=20) {
        let product = eval_mhs(n, &s) * eval_mhs(n, &t);
        let expanded = stuffle(&s, &t)
            .iter()
            .fold(mhs_core::rational::int(0), |acc, (r, m)| {
                acc + eval_mhs(n, r) * mhs_core::rational::int(*m as i64)
            });
        prop_assert_eq!(product, expanded);
    }

    #[test]
    fn linearized_product_is_associative(a in nonempty(3), b in nonempty(3), c in nonempty(3)) {
        let (a, b, c) = (MhsExpression::symbol(a), MhsExpression::symbol(b), MhsExpression::symbol(c));
        let left = (&(&a * &b).linearize() * &c).linearize();
        let right = (&a * &(&b * &c).linearize()).linearize();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn linearize_is_idempotent(e in small_expression()) {
        let once = e.linearize();
        prop_assert!(once.is_linear());
        prop_assert_eq!(once.linearize(), once.clone());
        prop_assert!(expr_equal(&e, &once));
    }

    #[test]
    fn json_round_trip(e in small_expression()) {
        let text = e.to_json();
        let back = MhsExpression::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, e);
    }

    #[test]
    fn closed_form_matches_partial_sums(factors in prop::collection::vec(nonempty(2), 1..=2)) {
        let closed = sum_product(&factors).unwrap();
        let total: u32 = factors.iter().map(Composition::weight).sum();
        prop_assert!(closed.linearize().symbols().iter().all(|s| s.weight() <= total));
        prop_assert_eq!(closed.eval_range(15), brute_force_partial_sums(&factors, 15));
    }

    #[test]
    fn streaming_residues_match_exact_reduction(s in composition(4), pi in 0usize..8, e in 1u32..=4) {
        let p = primes_between(3, 31)[pi];
        let exact = reduce_mod(&eval_mhs(p - 1, &s), p, e).unwrap();
        prop_assert_eq!(mhs_mod(&s, p, e).unwrap(), exact);
    }
}

#[test]
fn homogeneous_vanishes_when_depth_exceeds_n() {
    for d in 1..=6 {
        for n in 0..d as u64 {
            assert!(eval_mhs(n, &Composition::ones(d)).is_zero());
        }
    }
}

#[test]
fn hoffman_numeric_and_unit_point() {
    for d in 1..=6u32 {
        let reduced = hoffman_reduce(d).unwrap();
        let factorial = mhs_core::partitions::factorial(d);
        let values = reduced.eval_range(20);
        for (n, v) in values.iter().enumerate() {
            let direct = eval_mhs(n as u64, &Composition::ones(d as usize))
                * mhs_core::Rational::from_integer(factorial.clone());
            assert_eq!(*v, direct, "d={d} n={n}");
        }
        // at n = 1 every H_1(m) = 1
        let expected = if d <= 1 { factorial.clone() } else { BigInt::zero() };
        assert_eq!(values[1], mhs_core::Rational::from_integer(expected));
        assert!(expr_equal(&reduced, &MhsExpression::symbol(Composition::ones(d as usize))
            .scale(&mhs_core::Rational::from_integer(factorial))));
    }
}

#[test]
fn x_p_is_p_integral_up_to_199() {
    for p in primes_between(7, 199) {
        let x = x_p(p).unwrap();
        assert!(!(x.denom() % BigInt::from(p)).is_zero(), "p = {p}");
    }
}
