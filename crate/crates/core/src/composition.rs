//! Exponent vectors `s = (s_1, …, s_d)` indexing a multiple harmonic sum.
//!
//! `s_1` attaches to the smallest summation index. The empty composition denotes the
//! constant sum `1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// `{1}^d`
    pub fn ones(depth: usize) -> Self {
        Composition {
            parts: vec![1; depth],
        }
    }

    /// Depth-one composition `(m)`; the power sum `H_n(m)`.
    pub fn single(m: u32) -> Self {
        assert!(m >= 1, "composition parts must be positive");
        Composition { parts: vec![m] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn first(&self) -> Option<(u32, Composition)> {
        self.parts.split_first().map(|(&head, tail)| {
            (
                head,
                Composition {
                    parts: tail.to_vec(),
                },
            )
        })
    }

    /// Splits `s = (s', s_d)`.
    pub fn last(&self) -> Option<(Composition, u32)> {
        self.parts.split_last().map(|(&tail, init)| {
            (
                Composition {
                    parts: init.to_vec(),
                },
                tail,
            )
        })
    }

    pub fn prepend(&self, head: u32) -> Composition {
        debug_assert!(head >= 1);
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(head);
        parts.extend_from_slice(&self.parts);
        Composition { parts }
    }

    pub fn append(&self, tail: u32) -> Composition {
        debug_assert!(tail >= 1);
        let mut parts = self.parts.clone();
        parts.push(tail);
        Composition { parts }
    }

    /// Serialized form: `"1,1,2"`, or `""` for the empty composition.
    pub fn to_csv(&self) -> String {
        self.parts
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical order: weight, then depth, then parts lexicographically.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// Parses `"1,1,2"`, `""`, and the shorthand `"1^3"` / `"{1}^3"` for repeated entries.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let trimmed = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if trimmed.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, repeat) = match token.split_once('^') {
                Some((b, r)) => {
                    let b = b.trim();
                    let b = b
                        .strip_prefix('{')
                        .and_then(|x| x.strip_suffix('}'))
                        .unwrap_or(b);
                    let r: usize = r
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse("composition", text, "bad repeat count"))?;
                    (b.trim(), r)
                }
                None => (token, 1),
            };
            let value: i64 = base
                .parse()
                .map_err(|_| Error::parse("composition", text, format!("bad entry {base:?}")))?;
            if value < 1 || value > u32::MAX as i64 {
                return Err(Error::parse(
                    "composition",
                    text,
                    format!("entry {value} is not a positive integer"),
                ));
            }
            parts.extend(std::iter::repeat(value as u32).take(repeat));
        }
        Ok(Composition { parts })
    }
}
