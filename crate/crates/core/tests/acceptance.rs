//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails if any fails.

mod common;

use std::time::{Duration, Instant};

use mhs_core::congruence::{base_congruence_suite, sum_congruence_suite};
use mhs_core::expr::expr_equal;
use mhs_core::identities::known_identities;
use mhs_core::padic::x_p;
use mhs_core::primes::primes_between;
use mhs_core::rational::{int, rat};
use mhs_core::reduction::hoffman_reduce;
use mhs_core::stuffle::stuffle;
use mhs_core::summation::{brute_force_partial_sums, sum_product};
use mhs_core::tables::{errata, printed_tables, table_weight};
use mhs_core::theorem::{
    cai_granville_check, corollary_check, corollary_lhs_exact, corollary_rhs_exact, staver_check,
    theorem_lhs, theorem_lhs_via_partitions, theorem_rhs, wolstenholme_check,
};
use mhs_core::{eval_mhs, Composition, MhsExpression, NPolynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(text: &str) -> Composition {
    text.parse().unwrap()
}

fn h(text: &str) -> MhsExpression {
    MhsExpression::symbol(c(text))
}

// 1
fn identity_goldens() -> Outcome {
    let records = known_identities();
    for r in &records {
        let derived = sum_product(&r.lhs).map_err(|e| e.to_string())?;
        ensure(expr_equal(&derived, &r.rhs), || format!("{} differs: {derived}", r.name))?;
    }
    Ok(format!("{} identities", records.len()))
}

fn compare_tables(weight: u32) -> Outcome {
    let tables = table_weight(weight).map_err(|e| e.to_string())?;
    let printed = printed_tables(weight).map_err(|e| e.to_string())?;
    let mut cells = 0;
    let mut mismatched = Vec::new();
    for (table, grid) in tables.iter().zip(&printed) {
        ensure(table.is_clean(), || format!("failures {:?}", table.failures))?;
        for (i, row) in grid.iter().enumerate() {
            for (j, expected) in row.iter().enumerate() {
                cells += 1;
                if table.cell(i, j) != expected {
                    mismatched.push((table.rows[i].label.clone(), table.columns[j].label.clone()));
                }
            }
        }
    }
    let errata = errata(&tables).map_err(|e| e.to_string())?;
    ensure(errata.len() == mismatched.len(), || {
        format!("{} mismatches but {} errata", mismatched.len(), errata.len())
    })?;
    // every derived column must itself satisfy the brute-force oracle
    for table in &tables {
        for (j, column) in table.columns.iter().enumerate() {
            let factors = column.factors();
            let lead = MhsExpression::term(NPolynomial::linear(int(1), int(1)), factors.clone());
            let closed = &lead + &table.column_expression(j);
            ensure(closed.eval_range(30) == brute_force_partial_sums(&factors, 30), || {
                format!("column {} fails the oracle", column.label)
            })?;
        }
    }
    if weight == 4 {
        ensure(tables[0].cell(5, 4) == &NPolynomial::from_int(24), || "row n, H^4(1)".into())?;
        ensure(
            tables[0].cell(2, 0) == &NPolynomial::linear(int(-1), int(0)),
            || "row H(3)/3, H({1}^4)".into(),
        )?;
    } else {
        ensure(
            tables[1].cell(0, 2) == &NPolynomial::linear(int(120), int(60)),
            || "row Σ, H^5(1)".into(),
        )?;
    }
    ensure(mismatched.is_empty() || weight == 5, || format!("weight-4 mismatches {mismatched:?}"))?;
    Ok(format!("{cells} cells, {} errata", errata.len()))
}

// 4
fn oracle_equivalence() -> Outcome {
    let mut products = common::homogeneous_products(5);
    let homogeneous = products.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        products.push(common::random_inhomogeneous_product(&mut rng, 5));
    }
    for factors in &products {
        let closed = sum_product(factors).map_err(|e| e.to_string())?;
        ensure(closed.eval_range(30) == brute_force_partial_sums(factors, 30), || {
            format!("{factors:?}")
        })?;
    }
    Ok(format!("{homogeneous} homogeneous + 20 random products, n ≤ 30"))
}

// 5
fn hoffman_reductions() -> Outcome {
    let p = |m: u32| Composition::single(m);
    let t = |coeff: i64, f: &[u32]| {
        MhsExpression::term(NPolynomial::from_int(coeff), f.iter().map(|&m| p(m)).collect())
    };
    let sum = |v: Vec<MhsExpression>| v.iter().fold(MhsExpression::zero(), |a, b| &a + b);
    let displayed = [
        sum(vec![t(1, &[1, 1]), t(-1, &[2])]),
        sum(vec![t(1, &[1, 1, 1]), t(-3, &[1, 2]), t(2, &[3])]),
        sum(vec![t(1, &[1, 1, 1, 1]), t(-6, &[1, 1, 2]), t(8, &[1, 3]), t(3, &[2, 2]), t(-6, &[4])]),
    ];
    for (d, expected) in (2..=4).zip(displayed) {
        let got = hoffman_reduce(d).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("d={d}: {got}"))?;
    }
    for d in 1..=6u32 {
        let got = hoffman_reduce(d).map_err(|e| e.to_string())?;
        let f = mhs_core::Rational::from_integer(mhs_core::partitions::factorial(d));
        for (n, v) in got.eval_range(20).iter().enumerate() {
            ensure(*v == eval_mhs(n as u64, &Composition::ones(d as usize)) * &f, || {
                format!("d={d}, n={n}")
            })?;
        }
    }
    Ok("d = 2,3,4 displayed; d ≤ 6 numeric".into())
}

// 6
fn base_congruences() -> Outcome {
    let checkpoint = eval_mhs(6, &c("1")) - int(98) * x_p(7).unwrap();
    ensure(checkpoint == rat(2401, 660), || format!("H_6(1) - 2·7²·X_7 = {checkpoint}"))?;
    let primes = primes_between(7, 100);
    let mut checks = 0;
    for &p in &primes {
        for r in base_congruence_suite(p).map_err(|e| e.to_string())? {
            checks += 1;
            ensure(r.pass, || format!("{r:?}"))?;
        }
    }
    Ok(format!("{checks} checks over {} primes", primes.len()))
}

// 7
fn sum_congruences() -> Outcome {
    let primes = primes_between(7, 50);
    let mut checks = 0;
    for &p in &primes {
        let report = sum_congruence_suite(p).map_err(|e| e.to_string())?;
        ensure(report.len() == 18, || format!("{} rows", report.len()))?;
        for r in report {
            checks += 1;
            ensure(r.pass, || format!("{r:?}"))?;
        }
    }
    Ok(format!("{checks} checks over {} primes", primes.len()))
}

// 8
fn theorem() -> Outcome {
    let primes = primes_between(7, 50);
    for &p in &primes {
        ensure(theorem_lhs(0, p).unwrap().value() == p as u128, || format!("a=0, p={p}"))?;
        ensure(theorem_lhs(1, p).unwrap().is_zero(), || format!("a=1, p={p}"))?;
        for a in -6..=6 {
            let direct = theorem_lhs(a, p).map_err(|e| e.to_string())?;
            let closed = theorem_rhs(a, p).map_err(|e| e.to_string())?;
            let expanded = theorem_lhs_via_partitions(a, p).map_err(|e| e.to_string())?;
            ensure(direct == closed, || format!("a={a}, p={p}: {direct} vs {closed}"))?;
            ensure(expanded == direct, || format!("expansion a={a}, p={p}"))?;
        }
    }
    Ok(format!("a ∈ [-6, 6], {} primes, mod p^6", primes.len()))
}

// 9
fn cai_granville() -> Outcome {
    for p in primes_between(7, 31) {
        for a in 1..=3 {
            let r = cai_granville_check(a, p).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("{r:?}"))?;
        }
    }
    Ok("a ∈ {1,2,3}, 7 ≤ p ≤ 31, mod p^4".into())
}

// 10
fn corollary() -> Outcome {
    ensure(corollary_lhs_exact(7) == rat(7007, 30), || "LHS(7)".into())?;
    let diff = corollary_lhs_exact(7) - corollary_rhs_exact(7).unwrap();
    ensure(diff == rat(2401 * 19, 198), || format!("difference {diff}"))?;
    let primes = primes_between(7, 50);
    for &p in &primes {
        ensure(corollary_check(p).map_err(|e| e.to_string())?, || format!("p={p}"))?;
    }
    Ok(format!("{} primes, mod p^4", primes.len()))
}

// 11
fn staver_wolstenholme() -> Outcome {
    for n in 1..=100 {
        ensure(staver_check(n), || format!("Staver n={n}"))?;
    }
    for p in primes_between(5, 100) {
        ensure(wolstenholme_check(p).map_err(|e| e.to_string())?, || format!("Wolstenholme p={p}"))?;
    }
    Ok("n ≤ 100; 5 ≤ p ≤ 100".into())
}

// 12
fn algebra_properties() -> Outcome {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let random = |rng: &mut ChaCha8Rng, max: u32| {
        let w = rng.gen_range(0..=max);
        common::random_composition(rng, w)
    };
    for _ in 0..200 {
        let s = random(&mut rng, 5);
        let t = random(&mut rng, 5);
        let st = stuffle(&s, &t);
        ensure(st == stuffle(&t, &s), || format!("commutativity {s} {t}"))?;
        ensure(st.keys().all(|r| r.weight() == s.weight() + t.weight()), || {
            format!("grading {s} {t}")
        })?;
        let enumerated = common::quasi_shuffles_by_enumeration(s.parts(), t.parts());
        let total: u64 = st.values().sum();
        ensure(total == enumerated.values().sum::<u64>(), || format!("count {s} {t}"))?;
        let s_vals = mhs_core::mhs::prefix_values(20, &s);
        let t_vals = mhs_core::mhs::prefix_values(20, &t);
        let words: Vec<_> = st
            .iter()
            .map(|(r, m)| (mhs_core::mhs::prefix_values(20, r), int(*m as i64)))
            .collect();
        for n in 0..=20 {
            let expanded = words
                .iter()
                .fold(int(0), |acc, (vals, m)| acc + &vals[n] * m);
            ensure(&s_vals[n] * &t_vals[n] == expanded, || format!("eval {s} {t} n={n}"))?;
        }
        let a = h(&random(&mut rng, 3).to_csv());
        let b = h(&random(&mut rng, 3).to_csv());
        let cc = h(&random(&mut rng, 3).to_csv());
        let left = (&(&a * &b).linearize() * &cc).linearize();
        let right = (&a * &(&b * &cc).linearize()).linearize();
        ensure(left == right, || "associativity".into())?;
    }
    Ok("200 random pairs, n ≤ 20".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

#[test]
fn acceptance() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "identity goldens", limit: secs(1), run: identity_goldens },
        Criterion { id: 2, name: "weight-4 table", limit: secs(10), run: || compare_tables(4) },
        Criterion { id: 3, name: "weight-5 tables", limit: secs(60), run: || compare_tables(5) },
        Criterion { id: 4, name: "oracle equivalence", limit: None, run: oracle_equivalence },
        Criterion { id: 5, name: "Hoffman reductions", limit: None, run: hoffman_reductions },
        Criterion { id: 6, name: "base congruences", limit: secs(60), run: base_congruences },
        Criterion { id: 7, name: "sum-congruence table", limit: secs(60), run: sum_congruences },
        Criterion { id: 8, name: "alternating binomial power sums mod p^6", limit: None, run: theorem },
        Criterion { id: 9, name: "Cai-Granville regression", limit: None, run: cai_granville },
        Criterion { id: 10, name: "central binomial congruence", limit: None, run: corollary },
        Criterion { id: 11, name: "Staver + Wolstenholme", limit: None, run: staver_wolstenholme },
        Criterion { id: 12, name: "algebra properties", limit: None, run: algebra_properties },
    ];
    let mut failed = Vec::new();
    for criterion in criteria {
        let start = Instant::now();
        let outcome = (criterion.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, criterion.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS  [{:>2}] {} ({detail}) in {elapsed:.2?}",
                criterion.id, criterion.name
            ),
            Err(why) => {
                println!("FAIL  [{:>2}] {}: {why}", criterion.id, criterion.name);
                failed.push(criterion.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
