//! Pattern containment.
//!
//! Classical patterns are Cayley permutations and are matched on words up to
//! order isomorphism with equalities: a subsequence matches `y` when its
//! entries compare pairwise exactly as the entries of `y` do. Three patterns
//! on permutations get dedicated checkers instead of a general engine:
//!
//! - `omega`: a descent `p_i > p_{i+1}` followed somewhere after `i + 1` by
//!   the value `p_{i+1} - 1`;
//! - `zeta`: contained exactly when the first entry is not 1;
//! - `32-1`: a descent `p_i > p_{i+1}` followed somewhere after `i + 1` by an
//!   entry smaller than `p_{i+1}`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{all_perms, Perm};
use crate::seqcore::{self, is_cayley, Class, GenerationConfig, Word};

/// A nonempty Cayley permutation used as a classical pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CayleyPattern(Word);

impl CayleyPattern {
    pub fn new(word: Word) -> Result<Self> {
        if word.is_empty() || !is_cayley(&word) {
            return Err(Error::NotCayley {
                word: word.to_string(),
            });
        }
        Ok(CayleyPattern(word))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for CayleyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.to_compact() {
            Some(s) => f.write_str(&s),
            None => write!(f, "{}", self.0),
        }
    }
}

impl FromStr for CayleyPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CayleyPattern::new(s.parse()?)
    }
}

/// A finite set of classical patterns, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSet(Vec<CayleyPattern>);

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = CayleyPattern>) -> Self {
        let mut v: Vec<CayleyPattern> = patterns.into_iter().collect();
        v.sort();
        v.dedup();
        PatternSet(v)
    }

    pub fn single(y: CayleyPattern) -> Self {
        PatternSet(vec![y])
    }

    pub fn patterns(&self) -> &[CayleyPattern] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff `x` avoids every pattern in the set.
    pub fn avoided_by(&self, x: &Word) -> bool {
        self.0.iter().all(|y| !contains(x, y))
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, y) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated digit strings, e.g. `212,213`. The empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(CayleyPattern::from_str)
            .collect::<Result<Vec<_>>>()
            .map(PatternSet::new)
    }
}

/// Patterns on permutations with a dedicated checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialPattern {
    Omega,
    Zeta,
    Vincular321,
}

impl fmt::Display for SpecialPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialPattern::Omega => "omega",
            SpecialPattern::Zeta => "zeta",
            SpecialPattern::Vincular321 => "32-1",
        })
    }
}

impl FromStr for SpecialPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "omega" => Ok(SpecialPattern::Omega),
            "zeta" => Ok(SpecialPattern::Zeta),
            "32-1" => Ok(SpecialPattern::Vincular321),
            other => Err(Error::Parse {
                what: "special pattern",
                input: other.to_string(),
                reason: "expected `omega`, `zeta` or `32-1`".into(),
            }),
        }
    }
}

/// True iff some subsequence of `x` is order isomorphic to `y`.
pub fn contains(x: &Word, y: &CayleyPattern) -> bool {
    contains_slice(x.entries(), y.word().entries())
}

/// Backtracking search over increasing position tuples, pruned by the number
/// of pattern letters still to place.
pub fn contains_slice(x: &[u32], y: &[u32]) -> bool {
    if y.len() > x.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(y.len());
    extend_occurrence(x, y, &mut chosen, 0)
}

fn extend_occurrence(x: &[u32], y: &[u32], chosen: &mut Vec<usize>, start: usize) -> bool {
    let s = chosen.len();
    if s == y.len() {
        return true;
    }
    let last_start = x.len() - (y.len() - s);
    for i in start..=last_start {
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(t, &j)| x[j].cmp(&x[i]) == y[t].cmp(&y[s]));
        if fits {
            chosen.push(i);
            if extend_occurrence(x, y, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn contains_special(p: &Perm, s: SpecialPattern) -> bool {
    let e = p.entries();
    match s {
        SpecialPattern::Zeta => e.first().is_some_and(|&v| v != 1),
        SpecialPattern::Omega => {
            let mut pos = vec![0usize; e.len() + 1];
            for (i, &v) in e.iter().enumerate() {
                pos[v as usize] = i;
            }
            e.windows(2).enumerate().any(|(i, w)| {
                let below = w[1] - 1;
                w[0] > w[1] && below >= 1 && pos[below as usize] > i + 1
            })
        }
        SpecialPattern::Vincular321 => {
            // suffix_min[k] = min of e[k..]
            let mut suffix_min = vec![u32::MAX; e.len() + 1];
            for k in (0..e.len()).rev() {
                suffix_min[k] = suffix_min[k + 1].min(e[k]);
            }
            e.windows(2)
                .enumerate()
                .any(|(i, w)| w[0] > w[1] && suffix_min[i + 2] < w[1])
        }
    }
}

/// Membership in the set of permutations that start with 1 and avoid `omega`.
pub fn in_omega(p: &Perm) -> bool {
    p.is_empty() || (p.entries()[0] == 1 && !contains_special(p, SpecialPattern::Omega))
}

/// The permutations of length `n` in the omega class, lexicographically.
pub fn omega_perms(n: usize) -> Vec<Perm> {
    all_perms(n).into_iter().filter(in_omega).collect()
}

/// All words of `class` and length `n` avoiding every pattern in `patterns`,
/// in lexicographic order.
pub fn avoiders(n: usize, patterns: &PatternSet, class: Class) -> Vec<Word> {
    let config = GenerationConfig::default();
    if n <= config.materialize_threshold {
        seqcore::generate(class, n)
            .into_par_iter()
            .filter(|x| patterns.avoided_by(x))
            .collect()
    } else {
        seqcore::enumerate(class, n, &config)
            .filter(|x| patterns.avoided_by(x))
            .collect()
    }
}

pub fn count_avoiders(n: usize, patterns: &PatternSet, class: Class) -> usize {
    let config = GenerationConfig::default();
    if n <= config.materialize_threshold {
        seqcore::generate(class, n)
            .par_iter()
            .filter(|x| patterns.avoided_by(x))
            .count()
    } else {
        seqcore::enumerate(class, n, &config)
            .filter(|x| patterns.avoided_by(x))
            .count()
    }
}

/// Outcome of comparing two avoidance classes size by size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Equivalence {
    /// The classes agree for every size up to `n_max`.
    Equal { n_max: usize },
    /// The lexicographically first word of the smallest size where the
    /// classes differ. `avoids_first` tells which side it belongs to.
    Differ {
        n: usize,
        witness: Word,
        avoids_first: bool,
    },
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        matches!(self, Equivalence::Equal { .. })
    }
}

/// Compares the avoiders of two pattern sets within `class` for every size up to `n_max`.
pub fn equal_avoidance_classes(
    first: &PatternSet,
    second: &PatternSet,
    class: Class,
    n_max: usize,
) -> Equivalence {
    for n in 0..=n_max {
        let witness = seqcore::generate(class, n)
            .into_par_iter()
            .find_first(|x| first.avoided_by(x) != second.avoided_by(x));
        if let Some(witness) = witness {
            let avoids_first = first.avoided_by(&witness);
            return Equivalence::Differ {
                n,
                witness,
                avoids_first,
            };
        }
    }
    Equivalence::Equal { n_max }
}

pub fn equal_avoidance_sets(
    y1: &CayleyPattern,
    y2: &CayleyPattern,
    class: Class,
    n_max: usize,
) -> Equivalence {
    equal_avoidance_classes(
        &PatternSet::single(y1.clone()),
        &PatternSet::single(y2.clone()),
        class,
        n_max,
    )
}
