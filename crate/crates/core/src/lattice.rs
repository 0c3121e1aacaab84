//! Dyck paths, the consecutive pattern `dudu`, and first-return factorization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
}

use Step::{Down, Up};

/// A Dyck path stored as its step sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidPath {
                    reason: format!("goes below the axis at step {}", i + 1),
                });
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath {
                reason: format!("ends at height {height}"),
            });
        }
        Ok(DyckPath(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        DyckPath(steps)
    }

    pub fn empty() -> Self {
        DyckPath(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Up { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "ε" {
            return Ok(DyckPath::empty());
        }
        let steps = t
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'u' | 'U' => Ok(Up),
                'd' | 'D' => Ok(Down),
                _ => Err(Error::Parse {
                    what: "Dyck path",
                    input: s.to_string(),
                    reason: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DyckPath> for String {
    fn from(p: DyckPath) -> String {
        p.to_string()
    }
}

const DUDU: [Step; 4] = [Down, Up, Down, Up];

fn has_dudu_in(steps: &[Step], starts: std::ops::Range<usize>) -> bool {
    starts
        .filter(|&s| s + 4 <= steps.len())
        .any(|s| steps[s..s + 4] == DUDU)
}

pub fn avoids_dudu(p: &DyckPath) -> bool {
    !has_dudu_in(&p.0, 0..p.0.len())
}

/// All `dudu`-avoiding Dyck paths of semilength `n`, sorted with `u < d`.
///
/// Built from first returns `u A d B`: a window lying inside `u A d` either
/// starts at its first `u` or ends at its last `d`, so only windows straddling
/// the junction with `B` need a check.
pub fn generate_dudu_avoiders(n: usize) -> Vec<DyckPath> {
    let mut table: Vec<Vec<Vec<Step>>> = vec![vec![Vec::new()]];
    for m in 1..=n {
        let mut level = Vec::new();
        for a in 0..m {
            for inner in &table[a] {
                let mut head = Vec::with_capacity(2 * m);
                head.push(Up);
                head.extend_from_slice(inner);
                head.push(Down);
                let junction = head.len();
                for tail in &table[m - 1 - a] {
                    let mut steps = head.clone();
                    steps.extend_from_slice(tail);
                    if !has_dudu_in(&steps, junction.saturating_sub(3)..junction) {
                        level.push(steps);
                    }
                }
            }
        }
        level.sort_unstable();
        table.push(level);
    }
    table
        .swap_remove(n)
        .into_iter()
        .map(DyckPath::from_steps_unchecked)
        .collect()
}

/// The factors `Q_1, ..., Q_k` of `P = u Q_1 d u Q_2 d ... u Q_k d`, one per
/// return to the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathFactors {
    pub factors: Vec<DyckPath>,
}

impl PathFactors {
    pub fn count(&self) -> usize {
        self.factors.len()
    }

    pub fn semilengths(&self) -> Vec<usize> {
        self.factors.iter().map(DyckPath::semilength).collect()
    }

    pub fn reassemble(&self) -> DyckPath {
        let mut steps = Vec::new();
        for q in &self.factors {
            steps.push(Up);
            steps.extend_from_slice(q.steps());
            steps.push(Down);
        }
        DyckPath(steps)
    }
}

pub(crate) fn split_returns(steps: &[Step]) -> Vec<&[Step]> {
    let mut out = Vec::new();
    let mut height = 0i64;
    let mut start = 0;
    for (i, s) in steps.iter().enumerate() {
        height += if *s == Up { 1 } else { -1 };
        if height == 0 {
            out.push(&steps[start + 1..i]);
            start = i + 1;
        }
    }
    out
}

pub fn decompose_returns(p: &DyckPath) -> Result<PathFactors> {
    if p.is_empty() {
        return Err(Error::InvalidPath {
            reason: "the empty path has no returns".into(),
        });
    }
    if !avoids_dudu(p) {
        return Err(Error::InvalidPath {
            reason: format!("{p} contains dudu"),
        });
    }
    let factors = split_returns(&p.0)
        .into_iter()
        .map(|q| DyckPath(q.to_vec()))
        .collect();
    Ok(PathFactors { factors })
}

/// Every Dyck path of semilength `n`, without filtering; an oracle for tests.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(ups: usize, downs: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if cur.len() == 2 * n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if ups < n {
            cur.push(Up);
            rec(ups + 1, downs, n, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Down);
            rec(ups, downs + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(p("uudd").semilength(), 2);
        assert_eq!(p("").to_string(), "");
        assert!("udd".parse::<DyckPath>().is_err());
        assert!("duud".parse::<DyckPath>().is_err());
        assert!("uxd".parse::<DyckPath>().is_err());
    }

    #[test]
    fn dudu_windows() {
        assert!(avoids_dudu(&p("uudd")));
        assert!(!avoids_dudu(&p("ududud")));
        assert!(avoids_dudu(&p("udud")));
        assert!(avoids_dudu(&p("")));
    }

    #[test]
    fn generation_matches_filter() {
        for n in 0..=10 {
            let filtered: Vec<DyckPath> =
                all_dyck_paths(n).into_iter().filter(avoids_dudu).collect();
            assert_eq!(generate_dudu_avoiders(n), filtered, "n = {n}");
        }
        let counts: Vec<usize> = (0..=5).map(|n| generate_dudu_avoiders(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 10, 26]);
        assert_eq!(generate_dudu_avoiders(2), vec![p("uudd"), p("udud")]);
    }

    #[test]
    fn first_return_factors() {
        let fig = p("uuududduuudddduududduuuddudd");
        let f = decompose_returns(&fig).unwrap();
        assert_eq!(f.semilengths(), [6, 2, 3]);
        assert_eq!(f.reassemble(), fig);
        let f = decompose_returns(&p("udud")).unwrap();
        assert_eq!(f.factors, vec![DyckPath::empty(), DyckPath::empty()]);
        assert_eq!(decompose_returns(&p("uudd")).unwrap().factors, vec![p("ud")]);
        assert!(decompose_returns(&DyckPath::empty()).is_err());
        assert!(decompose_returns(&p("ududud")).is_err());
    }

    #[test]
    fn interior_factors_are_nonempty() {
        for n in 1..=9 {
            for path in generate_dudu_avoiders(n) {
                let f = decompose_returns(&path).unwrap();
                let k = f.count();
                assert!(f.factors.iter().all(avoids_dudu));
                if k >= 3 {
                    assert!(f.factors[1..k - 1].iter().all(|q| !q.is_empty()), "{path}");
                }
                assert_eq!(f.reassemble(), path);
            }
        }
    }
}
