use std::fmt;

use serde::{Deserialize, Serialize};

use super::Word;
use crate::error::{Error, Result};

/// An entry of a word together with its 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mark {
    pub index: usize,
    pub value: u32,
}

/// A set of marked entries listed by increasing index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedPositions(Vec<Mark>);

impl MarkedPositions {
    /// Marks the positions of `x` (0-based slice) selected by `keep`.
    fn select(x: &[u32], mut keep: impl FnMut(usize) -> bool) -> Self {
        MarkedPositions(
            (0..x.len())
                .filter(|&i| keep(i))
                .map(|i| Mark {
                    index: i + 1,
                    value: x[i],
                })
                .collect(),
        )
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut marks: Vec<Mark> = pairs
            .into_iter()
            .map(|(index, value)| Mark { index, value })
            .collect();
        marks.sort();
        marks.dedup();
        MarkedPositions(marks)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Mark> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|m| m.index).collect()
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|m| m.value).collect()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.0.binary_search_by_key(&index, |m| m.index).is_ok()
    }
}

impl fmt::Display for MarkedPositions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", m.index, m.value)?;
        }
        f.write_str("}")
    }
}

/// The marked-position statistics of a word plus its ascent and descent counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statistics {
    pub asctops: MarkedPositions,
    pub nub: MarkedPositions,
    pub lrmin: MarkedPositions,
    pub wlrmin: MarkedPositions,
    pub lrmax: MarkedPositions,
    pub wlrmax: MarkedPositions,
    pub rlmin: MarkedPositions,
    pub wrlmin: MarkedPositions,
    pub rlmax: MarkedPositions,
    pub wrlmax: MarkedPositions,
    pub asc: usize,
    pub des: usize,
}

/// True iff every value between 1 and the maximum occurs. The empty word is Cayley.
pub fn is_cayley(x: &Word) -> bool {
    cayley_slice(x.entries())
}

pub(crate) fn cayley_slice(x: &[u32]) -> bool {
    let max = x.iter().copied().max().unwrap_or(0) as usize;
    if max > x.len() {
        return false;
    }
    let mut seen = vec![false; max + 1];
    let mut distinct = 0;
    for &v in x {
        if !seen[v as usize] {
            seen[v as usize] = true;
            distinct += 1;
        }
    }
    distinct == max
}

/// Number of ascents `x_{i-1} < x_i`.
pub fn asc(x: &Word) -> usize {
    x.entries().windows(2).filter(|w| w[0] < w[1]).count()
}

/// Number of descents `x_{i-1} > x_i`.
pub fn des(x: &Word) -> usize {
    x.entries().windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn statistics(x: &Word) -> Statistics {
    let e = x.entries();
    let n = e.len();
    if n == 0 {
        return Statistics::default();
    }

    let asctops = MarkedPositions::select(e, |i| i == 0 || e[i - 1] < e[i]);
    let mut seen = std::collections::HashSet::new();
    let nub = MarkedPositions::select(e, |i| seen.insert(e[i]));

    // prefix extrema exclusive of i, suffix extrema exclusive of i
    let mut pre_min = vec![u32::MAX; n];
    let mut pre_max = vec![0u32; n];
    for i in 1..n {
        pre_min[i] = pre_min[i - 1].min(e[i - 1]);
        pre_max[i] = pre_max[i - 1].max(e[i - 1]);
    }
    let mut suf_min = vec![u32::MAX; n];
    let mut suf_max = vec![0u32; n];
    for i in (0..n - 1).rev() {
        suf_min[i] = suf_min[i + 1].min(e[i + 1]);
        suf_max[i] = suf_max[i + 1].max(e[i + 1]);
    }

    Statistics {
        asctops,
        nub,
        lrmin: MarkedPositions::select(e, |i| e[i] < pre_min[i]),
        wlrmin: MarkedPositions::select(e, |i| e[i] <= pre_min[i]),
        lrmax: MarkedPositions::select(e, |i| e[i] > pre_max[i]),
        wlrmax: MarkedPositions::select(e, |i| e[i] >= pre_max[i]),
        rlmin: MarkedPositions::select(e, |i| e[i] < suf_min[i]),
        wrlmin: MarkedPositions::select(e, |i| e[i] <= suf_min[i]),
        rlmax: MarkedPositions::select(e, |i| e[i] > suf_max[i]),
        wrlmax: MarkedPositions::select(e, |i| e[i] >= suf_max[i]),
        asc: asc(x),
        des: des(x),
    }
}

/// Fast membership test on a raw slice: Cayley, and an entry is a leftmost
/// copy exactly when it is an ascent top (the first entry counts as both).
pub fn is_modasc_slice(x: &[u32]) -> bool {
    let n = x.len();
    let mut seen = vec![false; n + 2];
    let mut distinct = 0usize;
    let mut max = 0u32;
    for i in 0..n {
        let v = x[i] as usize;
        if v == 0 || v > n {
            return false;
        }
        let top = i == 0 || x[i - 1] < x[i];
        let leftmost = !seen[v];
        if top != leftmost {
            return false;
        }
        if leftmost {
            seen[v] = true;
            distinct += 1;
        }
        max = max.max(x[i]);
    }
    distinct == max as usize
}

pub fn is_modasc(x: &Word) -> bool {
    is_modasc_slice(x.entries())
}

/// Membership test that also audits the structural consequences of
/// membership: ascent tops carry pairwise distinct values, their number is
/// `max(x)`, and the copies of the maximum are consecutive.
pub fn check_modasc(x: &Word) -> Result<bool> {
    if !is_cayley(x) {
        return Ok(false);
    }
    let stats = statistics(x);
    if stats.asctops != stats.nub {
        return Ok(false);
    }
    let fail = |reason: &str| Error::InternalConsistency {
        word: x.to_string(),
        reason: reason.to_string(),
    };
    let mut top_values = stats.asctops.values();
    top_values.sort_unstable();
    let distinct = top_values.windows(2).all(|w| w[0] != w[1]);
    if !distinct {
        return Err(fail("ascent tops with repeated values"));
    }
    if top_values.len() != x.max_entry() as usize {
        return Err(fail("number of ascent tops differs from the maximum"));
    }
    let max = x.max_entry();
    let positions: Vec<usize> = (0..x.len()).filter(|&i| x.entries()[i] == max).collect();
    if positions.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(fail("copies of the maximum are not consecutive"));
    }
    Ok(true)
}
