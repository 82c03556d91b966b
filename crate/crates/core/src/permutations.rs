//! Classical pattern containment and brute-force avoider counts.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

/// Largest permutation length [`count_avoiders`] will enumerate.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 9;

/// The three length-4 patterns whose avoiders are counted by the class-B
/// sequence (one size up).
pub const CLASS_B_PATTERNS: [&str; 3] = ["3241", "3421", "4321"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("{0:?} is not a permutation of 1..m")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse {0:?} as a permutation in one-line notation")]
    Malformed(String),
    #[error("size {size} exceeds the exhaustive bound {bound}")]
    SizeTooLarge { size: usize, bound: usize },
}

/// A permutation of `1..=m` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

pub type Pattern = Permutation;

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermutationError> {
        let mut seen = vec![false; values.len()];
        for &v in &values {
            if v == 0 || v > values.len() || seen[v - 1] {
                return Err(PermutationError::NotAPermutation(values));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    /// Digit strings such as `3241`; only lengths up to 9 are expressible.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| PermutationError::Malformed(s.to_string()))?;
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|v| *v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(" "))
        }
    }
}

/// Parse a comma-separated list of digit-string patterns.
pub fn parse_patterns(list: &str) -> Result<Vec<Pattern>, PermutationError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

pub fn class_b_patterns() -> Vec<Pattern> {
    CLASS_B_PATTERNS
        .iter()
        .map(|s| s.parse().expect("built-in pattern"))
        .collect()
}

/// Ranks of `values` among themselves, 1-based.
fn standardize(values: &[usize]) -> Vec<usize> {
    let mut ranks = vec![0; values.len()];
    for (i, v) in values.iter().enumerate() {
        ranks[i] = 1 + values.iter().filter(|u| *u < v).count();
    }
    ranks
}

/// True when some subsequence of `perm` is order-isomorphic to `pat`.
pub fn contains_pattern(perm: &Permutation, pat: &Pattern) -> bool {
    if pat.len() > perm.len() {
        return false;
    }
    (0..perm.len()).combinations(pat.len()).any(|idx| {
        let sub: Vec<usize> = idx.iter().map(|&i| perm.0[i]).collect();
        standardize(&sub) == pat.0
    })
}

/// Patterns grouped by length so each index subset is standardized once.
struct PatternSet {
    by_len: Vec<(usize, HashSet<Vec<usize>>)>,
}

impl PatternSet {
    fn new(patterns: &[Pattern]) -> Self {
        let mut by_len: Vec<(usize, HashSet<Vec<usize>>)> = Vec::new();
        for pat in patterns {
            match by_len.iter_mut().find(|(k, _)| *k == pat.len()) {
                Some((_, set)) => {
                    set.insert(pat.0.clone());
                }
                None => by_len.push((pat.len(), HashSet::from([pat.0.clone()]))),
            }
        }
        PatternSet { by_len }
    }

    fn avoided_by(&self, values: &[usize]) -> bool {
        self.by_len.iter().all(|(k, set)| {
            if *k > values.len() {
                return true;
            }
            !(0..values.len()).combinations(*k).any(|idx| {
                let sub: Vec<usize> = idx.iter().map(|&i| values[i]).collect();
                set.contains(&standardize(&sub))
            })
        })
    }
}

/// Permutations of `[m]` avoiding every pattern, by exhaustive enumeration.
pub fn count_avoiders(m: usize, patterns: &[Pattern]) -> Result<u64, PermutationError> {
    count_avoiders_bounded(m, patterns, DEFAULT_EXHAUSTIVE_BOUND)
}

pub fn count_avoiders_bounded(
    m: usize,
    patterns: &[Pattern],
    bound: usize,
) -> Result<u64, PermutationError> {
    if m > bound {
        return Err(PermutationError::SizeTooLarge { size: m, bound });
    }
    let set = PatternSet::new(patterns);
    if m == 0 {
        return Ok(set.avoided_by(&[]) as u64);
    }
    // split on the first entry; each part is enumerated independently
    let total = (1..=m)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<usize> = (1..=m).filter(|v| *v != first).collect();
            let mut values = Vec::with_capacity(m);
            rest.iter()
                .copied()
                .permutations(m - 1)
                .filter(|tail| {
                    values.clear();
                    values.push(first);
                    values.extend_from_slice(tail);
                    set.avoided_by(&values)
                })
                .count() as u64
        })
        .sum();
    Ok(total)
}
