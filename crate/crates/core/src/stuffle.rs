//! The quasi-shuffle (stuffle) product of compositions.
//!
//! `H_n(s)·H_n(t) = Σ_{r ∈ s ⋆ t} H_n(r)`, with `s = (s_1, s')`, `t = (t_1, t')` and
//!
//! ```text
//! s ⋆ t = s_1 ⊕ (s' ⋆ t) + t_1 ⊕ (s ⋆ t') + (s_1 + t_1) ⊕ (s' ⋆ t')
//! ```
//!
//! where `x ⊕ r` prepends `x` to every word of `r`. The empty composition is the unit.

use std::collections::BTreeMap;

use crate::composition::Composition;

/// Expansion of a product as compositions with positive multiplicities.
pub type StuffleExpansion = BTreeMap<Composition, u64>;

pub fn stuffle(s: &Composition, t: &Composition) -> StuffleExpansion {
    let mut out = StuffleExpansion::new();
    stuffle_into(s.parts(), t.parts(), &mut Vec::new(), &mut out);
    out
}

fn stuffle_into(s: &[u32], t: &[u32], prefix: &mut Vec<u32>, out: &mut StuffleExpansion) {
    match (s.split_first(), t.split_first()) {
        (None, _) | (_, None) => {
            let mut parts = prefix.clone();
            parts.extend_from_slice(s);
            parts.extend_from_slice(t);
            let word = Composition::new(parts).expect("stuffle preserves positivity");
            *out.entry(word).or_insert(0) += 1;
        }
        (Some((&s1, s_rest)), Some((&t1, t_rest))) => {
            for (head, left, right) in [(s1, s_rest, t), (t1, s, t_rest), (s1 + t1, s_rest, t_rest)] {
                prefix.push(head);
                stuffle_into(left, right, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Stuffle product of several compositions; the empty slice gives `{(): 1}`.
pub fn stuffle_all(factors: &[Composition]) -> StuffleExpansion {
    let mut acc = StuffleExpansion::new();
    acc.insert(Composition::empty(), 1);
    for factor in factors {
        let mut next = StuffleExpansion::new();
        for (word, mult) in &acc {
            for (r, m) in stuffle(word, factor) {
                *next.entry(r).or_insert(0) += mult * m;
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(text: &str) -> Composition {
        text.parse().unwrap()
    }

    fn expansion(pairs: &[(&str, u64)]) -> StuffleExpansion {
        pairs.iter().map(|(s, m)| (c(s), *m)).collect()
    }

    #[test]
    fn one_times_one_one() {
        assert_eq!(
            stuffle(&c("1"), &c("1,1")),
            expansion(&[("1,1,1", 3), ("2,1", 1), ("1,2", 1)])
        );
    }

    #[test]
    fn one_times_one() {
        assert_eq!(stuffle(&c("1"), &c("1")), expansion(&[("1,1", 2), ("2", 1)]));
    }

    #[test]
    fn empty_is_unit() {
        assert_eq!(stuffle(&c("2"), &c("")), expansion(&[("2", 1)]));
        assert_eq!(stuffle(&c(""), &c("2")), expansion(&[("2", 1)]));
        assert_eq!(stuffle(&c(""), &c("")), expansion(&[("", 1)]));
    }

    #[test]
    fn all_of_three() {
        let e = stuffle_all(&[c("1"), c("1"), c("1")]);
        // H(1)^3 = 6H(1,1,1) + 3H(2,1) + 3H(1,2) + H(3)
        assert_eq!(
            e,
            expansion(&[("1,1,1", 6), ("2,1", 3), ("1,2", 3), ("3", 1)])
        );
    }
}
