//! Bijections between modified ascent sequences and other families.

mod bijections;
mod burge;
mod claesson;
mod phi;
mod standardize;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::Word;

pub use bijections::{
    composition_to_modasc112, modasc112_to_composition, modasc122_to_partition,
    partition_to_modasc122,
};
pub use burge::{burge_fishburn, TieBreak};
pub use claesson::{claesson, claesson_inverse};
pub use phi::{phi_312, phi_inverse};
pub use standardize::{chains, omega_to_prim, omega_to_prim_by_chains, standardize, Chain};

/// A permutation of `[n]`, stored as a word with distinct entries `1..=n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Word", into = "Word")]
pub struct Perm(Word);

impl Perm {
    pub fn new(word: Word) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in word.entries() {
            let v = v as usize;
            if v > n || seen[v] {
                return Err(Error::NotPermutation {
                    word: word.to_string(),
                });
            }
            seen[v] = true;
        }
        Ok(Perm(word))
    }

    pub(crate) fn from_word_unchecked(word: Word) -> Self {
        Perm(word)
    }

    pub fn identity(n: usize) -> Self {
        Perm(Word::from_vec_unchecked((1..=n as u32).collect()))
    }

    pub fn entries(&self) -> &[u32] {
        self.0.entries()
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::new(s.parse()?)
    }
}

impl TryFrom<Word> for Perm {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        Perm::new(w)
    }
}

impl From<Perm> for Word {
    fn from(p: Perm) -> Word {
        p.0
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (1..=n as u32)
        .permutations(n)
        .map(|v| Perm(Word::from_vec_unchecked(v)))
        .collect()
}

/// A partition of `[n]` into nonempty blocks.
///
/// Canonical form: every block sorted increasingly, blocks sorted by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |reason: String| Err(Error::InvalidPartition { reason });
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return invalid("empty block".into());
            }
            for &e in block {
                if e == 0 || e > n {
                    return invalid(format!("element {e} outside 1..={n}"));
                }
                if seen[e] {
                    return invalid(format!("element {e} appears twice"));
                }
                seen[e] = true;
            }
        }
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn non_singleton_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() >= 2).count()
    }

    /// Blocks by increasing minimum, each written with its least element last,
    /// joined by dashes, e.g. `361-72-4-895`.
    pub fn standard_representation(&self) -> String {
        let compact = self.n <= 9;
        self.blocks
            .iter()
            .map(|b| {
                let mut order: Vec<usize> = b[1..].to_vec();
                order.push(b[0]);
                if compact {
                    order.iter().map(usize::to_string).collect::<String>()
                } else {
                    order.iter().map(usize::to_string).join(",")
                }
            })
            .join("-")
    }

    /// Parses the dash-separated standard representation.
    pub fn from_standard_representation(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('-')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_elements(t, s))
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}

fn parse_elements(token: &str, whole: &str) -> Result<Vec<usize>> {
    let token = token.trim();
    let err = |reason: String| Error::Parse {
        what: "set partition",
        input: whole.to_string(),
        reason,
    };
    if token.contains(',') {
        token
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| err(format!("{t:?}: {e}")))
            })
            .collect()
    } else {
        token
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| err(format!("unexpected character {c:?}")))
            })
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{{{}}}", b.iter().join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Accepts the brace form `{1,3,6}{2,7}{4}{5,8,9}` or the dash-separated
    /// standard representation `361-72-4-895`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if !t.starts_with('{') {
            return SetPartition::from_standard_representation(t);
        }
        let mut blocks = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let inner_end = rest.find('}').ok_or_else(|| Error::Parse {
                what: "set partition",
                input: s.to_string(),
                reason: "unbalanced braces".into(),
            })?;
            let inner = rest[1..inner_end].trim();
            let block = inner
                .split(',')
                .map(|e| {
                    e.trim().parse::<usize>().map_err(|err| Error::Parse {
                        what: "set partition",
                        input: s.to_string(),
                        reason: format!("{e:?}: {err}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = rest[inner_end + 1..].trim_start();
            if !rest.is_empty() && !rest.starts_with('{') {
                return Err(Error::Parse {
                    what: "set partition",
                    input: s.to_string(),
                    reason: "expected `{`".into(),
                });
            }
        }
        SetPartition::new(blocks)
    }
}

/// Every set partition of `[n]`, generated from restricted growth strings.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            let mut blocks = vec![Vec::new(); if rgs.is_empty() { 0 } else { max + 1 }];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e + 1);
            }
            out.push(SetPartition::new(blocks).expect("restricted growth strings are valid"));
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    rec(0, 0, &mut rgs, &mut out);
    out
}

/// A composition of `n`: a sequence of positive parts summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition {
                reason: "parts must be positive".into(),
            });
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All compositions of `n`, ordered lexicographically by parts.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in all_compositions(n - first) {
            let mut parts = vec![first];
            parts.extend_from_slice(rest.parts());
            out.push(Composition(parts));
        }
    }
    out
}
