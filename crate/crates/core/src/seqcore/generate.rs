use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stats::cayley_slice;
use super::{Class, Word};
use crate::error::{Error, Result};

/// Largest size for which Cayley permutations are enumerated by brute force
/// over all `n^n` endofunctions.
pub const ENDOFUNCTION_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationConfig {
    /// Sizes up to this value are materialized and sorted; larger sizes stream.
    pub materialize_threshold: usize,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig {
            materialize_threshold: 10,
        }
    }
}

/// All modified ascent sequences of length `n`, in lexicographic order.
///
/// Built level by level from the single word `1`: a word `x` of length `k`
/// has `max(x) + 1` children of length `k + 1`. A new last entry `a <= x_k`
/// is appended as is; a new last entry `x_k < a <= max(x) + 1` first bumps
/// every earlier entry `>= a` by one.
pub fn generate_modasc(n: usize) -> Vec<Word> {
    by_growth_rule(n, false)
}

/// All primitive modified ascent sequences of length `n`, in lexicographic order.
///
/// Flat steps survive the growth rule, so the primitive words of length
/// `k + 1` are exactly the children of primitive words whose new last entry
/// differs from the old one.
pub fn generate_prim(n: usize) -> Vec<Word> {
    by_growth_rule(n, true)
}

pub fn generate(class: Class, n: usize) -> Vec<Word> {
    match class {
        Class::Modasc => generate_modasc(n),
        Class::Prim => generate_prim(n),
    }
}

fn by_growth_rule(n: usize, primitive: bool) -> Vec<Word> {
    if n == 0 {
        return vec![Word::empty()];
    }
    let mut level: Vec<Vec<u32>> = vec![vec![1]];
    for _ in 1..n {
        level = level
            .par_iter()
            .flat_map_iter(|x| children(x, primitive))
            .collect();
    }
    level.par_sort_unstable();
    level.into_iter().map(Word::from_vec_unchecked).collect()
}

fn children(x: &[u32], primitive: bool) -> Vec<Vec<u32>> {
    let last = *x.last().expect("growth rule starts from a nonempty word");
    let max = *x.iter().max().unwrap();
    let mut out = Vec::with_capacity(max as usize + 1);
    for a in 1..=last {
        if primitive && a == last {
            continue;
        }
        let mut y = Vec::with_capacity(x.len() + 1);
        y.extend_from_slice(x);
        y.push(a);
        out.push(y);
    }
    for a in last + 1..=max + 1 {
        let mut y: Vec<u32> = x.iter().map(|&v| if v >= a { v + 1 } else { v }).collect();
        y.push(a);
        out.push(y);
    }
    out
}

/// Lexicographic depth-first enumeration of a class, one word at a time.
///
/// Prefixes are extended left to right: an ascent must introduce a value not
/// seen before, a weak descent must repeat a value already seen, and a word is
/// emitted when its value set is an interval `1..=max`.
pub struct LexStream {
    n: usize,
    primitive: bool,
    word: Vec<u32>,
    used: Vec<bool>,
    introduced: Vec<bool>,
    maxes: Vec<u32>,
    distinct: usize,
    candidate: Vec<u32>,
    done: bool,
}

pub fn lex_stream(class: Class, n: usize) -> LexStream {
    LexStream {
        n,
        primitive: class == Class::Prim,
        word: Vec::with_capacity(n),
        used: vec![false; n + 2],
        introduced: Vec::with_capacity(n),
        maxes: Vec::with_capacity(n),
        distinct: 0,
        candidate: vec![1; n + 1],
        done: false,
    }
}

impl LexStream {
    fn admissible(&self, v: u32) -> bool {
        let d = self.word.len();
        if d == 0 {
            return v == 1;
        }
        let prev = self.word[d - 1];
        let fresh = !self.used[v as usize];
        let ok = if v > prev {
            fresh
        } else if v < prev {
            !fresh
        } else {
            !self.primitive
        };
        if !ok {
            return false;
        }
        let max = self.maxes[d - 1].max(v) as usize;
        let distinct = self.distinct + usize::from(fresh);
        max - distinct <= self.n - (d + 1)
    }

    fn push(&mut self, v: u32) {
        let fresh = !self.used[v as usize];
        if fresh {
            self.used[v as usize] = true;
            self.distinct += 1;
        }
        let max = self.maxes.last().copied().unwrap_or(0).max(v);
        self.word.push(v);
        self.introduced.push(fresh);
        self.maxes.push(max);
        self.candidate[self.word.len()] = 1;
    }

    fn pop(&mut self) {
        let v = self.word.pop().unwrap();
        self.maxes.pop();
        if self.introduced.pop().unwrap() {
            self.used[v as usize] = false;
            self.distinct -= 1;
        }
    }
}

impl Iterator for LexStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Word::empty());
        }
        loop {
            let d = self.word.len();
            if d == self.n {
                let complete = self.distinct == *self.maxes.last().unwrap() as usize;
                let out = complete.then(|| Word::from_vec_unchecked(self.word.clone()));
                self.pop();
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let start = self.candidate[d];
            let found = (start..=self.n as u32).find(|&v| self.admissible(v));
            match found {
                Some(v) => {
                    self.candidate[d] = v + 1;
                    self.push(v);
                }
                None if d == 0 => {
                    self.done = true;
                    return None;
                }
                None => self.pop(),
            }
        }
    }
}

/// Enumerates a class in lexicographic order, materializing small sizes and
/// streaming sizes above the configured threshold.
pub fn enumerate(
    class: Class,
    n: usize,
    config: &GenerationConfig,
) -> Box<dyn Iterator<Item = Word> + Send> {
    if n <= config.materialize_threshold {
        Box::new(generate(class, n).into_iter())
    } else {
        Box::new(lex_stream(class, n))
    }
}

/// Every Cayley permutation of length `n`, found by filtering all
/// endofunctions `[n] -> [n]`. Used as an oracle; `n` is capped at
/// [`ENDOFUNCTION_CAP`].
pub fn cayley_by_endofunctions(n: usize) -> Result<Vec<Word>> {
    if n > ENDOFUNCTION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ENDOFUNCTION_CAP,
        });
    }
    if n == 0 {
        return Ok(vec![Word::empty()]);
    }
    let top = n as u32;
    let mut x = vec![1u32; n];
    let mut out = Vec::new();
    loop {
        if cayley_slice(&x) {
            out.push(Word::from_vec_unchecked(x.clone()));
        }
        // odometer, last position fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if x[k] < top {
                x[k] += 1;
                break;
            }
            x[k] = 1;
        }
    }
}
