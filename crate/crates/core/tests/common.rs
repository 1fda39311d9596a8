// Shared helpers for the integration tests; not every test binary uses all of them.
#![allow(dead_code)]

use std::collections::BTreeMap;

use mhs_core::Composition;
use rand::Rng;

/// Independent enumeration of quasi-shuffles: for every target length `m`, every pair of
/// strictly increasing maps `[a] → [m]`, `[b] → [m]` whose images cover `[m]`; the word at
/// position `i` is the sum of the entries landing on `i`.
pub fn quasi_shuffles_by_enumeration(s: &[u32], t: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    fn increasing_maps(len: usize, m: usize) -> Vec<Vec<usize>> {
        fn go(start: usize, left: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..m {
                cur.push(i);
                go(i + 1, left - 1, m, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, len, m, &mut Vec::new(), &mut out);
        out
    }
    let mut out = BTreeMap::new();
    let (a, b) = (s.len(), t.len());
    for m in a.max(b)..=a + b {
        for f in increasing_maps(a, m) {
            for g in increasing_maps(b, m) {
                let mut word = vec![0u32; m];
                for (i, &pos) in f.iter().enumerate() {
                    word[pos] += s[i];
                }
                for (i, &pos) in g.iter().enumerate() {
                    word[pos] += t[i];
                }
                if word.iter().all(|&x| x > 0) {
                    *out.entry(word).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

/// A random composition of weight exactly `weight`.
pub fn random_composition(rng: &mut impl Rng, weight: u32) -> Composition {
    let mut parts = Vec::new();
    let mut left = weight;
    while left > 0 {
        let part = rng.gen_range(1..=left);
        parts.push(part);
        left -= part;
    }
    Composition::new(parts).unwrap()
}

/// A random product of at least two nonempty factors with total weight in `2..=max_weight`,
/// not made only of homogeneous blocks.
pub fn random_inhomogeneous_product(rng: &mut impl Rng, max_weight: u32) -> Vec<Composition> {
    loop {
        let total = rng.gen_range(2..=max_weight);
        let mut factors = Vec::new();
        let mut left = total;
        while left > 0 {
            let w = rng.gen_range(1..=left);
            factors.push(random_composition(rng, w));
            left -= w;
        }
        if factors.iter().any(|f| !f.is_homogeneous()) {
            return factors;
        }
    }
}

/// Every product of homogeneous blocks `H({1}^λ_j)` with total weight `1..=max_weight`.
pub fn homogeneous_products(max_weight: u32) -> Vec<Vec<Composition>> {
    (1..=max_weight)
        .flat_map(mhs_core::partitions::all_partitions)
        .map(|lambda| lambda.iter().map(|&d| Composition::ones(d as usize)).collect())
        .collect()
}
