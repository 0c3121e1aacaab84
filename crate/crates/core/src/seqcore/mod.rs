//! Words over the positive integers and the classes built on them.
//!
//! Values and positions are 1-based everywhere in the public API: the first
//! letter of a word sits at index 1 and the smallest admissible value is 1.

mod flats;
mod generate;
mod stats;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use flats::{collapse_flats, has_flat_step, insert_flats, FlatDecomposition};
pub use generate::{
    cayley_by_endofunctions, enumerate, generate, generate_modasc, generate_prim, lex_stream,
    GenerationConfig, LexStream, ENDOFUNCTION_CAP,
};
pub use stats::{
    asc, check_modasc, des, is_cayley, is_modasc, is_modasc_slice, statistics, Mark,
    MarkedPositions, Statistics,
};

/// A finite word of positive integers.
///
/// Ordering is lexicographic on the entries, so sorting a list of words of
/// equal length yields the canonical output order used throughout the crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&v| v == 0) {
            return Err(Error::ZeroEntry { position: i + 1 });
        }
        Ok(Word(entries))
    }

    /// Wraps entries already known to be positive.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&v| v > 0));
        Word(entries)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest entry, or 0 for the empty word.
    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Entry at the 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// The digit-string form `1312`, available when every entry is at most 9.
    pub fn to_compact(&self) -> Option<String> {
        if self.0.iter().all(|&v| v <= 9) {
            Some(self.0.iter().map(|&v| char::from(b'0' + v as u8)).collect())
        } else {
            None
        }
    }

    /// The word obtained by adding `delta` to every entry.
    pub fn shifted(&self, delta: i64) -> Result<Self> {
        let entries = self
            .0
            .iter()
            .map(|&v| {
                let s = i64::from(v) + delta;
                u32::try_from(s).map_err(|_| Error::ZeroEntry { position: 0 })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(entries)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts the canonical space-separated form, comma-separated values, or
    /// a single run of digits where every digit is one entry.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let parse_err = |reason: String| Error::Parse {
            what: "word",
            input: s.to_string(),
            reason,
        };
        if trimmed.is_empty() || trimmed == "ε" {
            return Ok(Word::empty());
        }
        let entries: Vec<u32> = if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
            trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|e| parse_err(format!("{t:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(entries)
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// The two sequence classes enumerated by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    /// Modified ascent sequences.
    Modasc,
    /// Modified ascent sequences without flat steps.
    Prim,
}

impl Class {
    pub fn name(self) -> &'static str {
        match self {
            Class::Modasc => "modasc",
            Class::Prim => "prim",
        }
    }

    pub fn contains(self, x: &Word) -> bool {
        match self {
            Class::Modasc => is_modasc(x),
            Class::Prim => is_modasc(x) && !has_flat_step(x),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "modasc" => Ok(Class::Modasc),
            "prim" => Ok(Class::Prim),
            other => Err(Error::Parse {
                what: "class",
                input: other.to_string(),
                reason: "expected `modasc` or `prim`".into(),
            }),
        }
    }
}
