use serde::{Deserialize, Serialize};

use super::Perm;
use crate::error::{Error, Result};
use crate::patterns::in_omega;
use crate::seqcore::{is_cayley, Word};

/// Relabels a Cayley permutation into a permutation: the `a_1` copies of 1
/// become `1..=a_1` from left to right, the `a_2` copies of 2 become
/// `a_1+1..=a_1+a_2`, and so on.
pub fn standardize(x: &Word) -> Result<Perm> {
    if !is_cayley(x) {
        return Err(Error::NotCayley {
            word: x.to_string(),
        });
    }
    let max = x.max_entry() as usize;
    let mut next = vec![0u32; max + 2];
    for &v in x.entries() {
        next[v as usize + 1] += 1;
    }
    next[1] = 1;
    for v in 2..=max + 1 {
        next[v] += next[v - 1];
    }
    let entries = x
        .entries()
        .iter()
        .map(|&v| {
            let label = next[v as usize];
            next[v as usize] += 1;
            label
        })
        .collect();
    Ok(Perm::from_word_unchecked(Word::from_vec_unchecked(entries)))
}

/// A run of consecutive values `start, start+1, ..., start+len-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chain {
    pub start: u32,
    pub len: usize,
}

impl Chain {
    pub fn values(&self) -> impl Iterator<Item = u32> {
        self.start..self.start + self.len as u32
    }

    pub fn contains(&self, v: u32) -> bool {
        v >= self.start && ((v - self.start) as usize) < self.len
    }
}

fn ascent_top_flags(e: &[u32]) -> Vec<bool> {
    (0..e.len()).map(|i| i == 0 || e[i - 1] < e[i]).collect()
}

fn require_omega(p: &Perm) -> Result<()> {
    if in_omega(p) {
        Ok(())
    } else {
        Err(Error::NotInClass {
            object: p.to_string(),
            class: "Omega".into(),
        })
    }
}

/// Splits the values of `p` into chains, one per ascent top: each chain runs
/// from an ascent-top value up to just below the next larger ascent-top value.
pub fn chains(p: &Perm) -> Result<Vec<Chain>> {
    require_omega(p)?;
    let e = p.entries();
    let mut tops: Vec<u32> = e
        .iter()
        .zip(ascent_top_flags(e))
        .filter_map(|(&v, top)| top.then_some(v))
        .collect();
    tops.sort_unstable();
    let n = e.len() as u32;
    Ok(tops
        .iter()
        .enumerate()
        .map(|(i, &start)| {
            let end = tops.get(i + 1).copied().unwrap_or(n + 1);
            Chain {
                start,
                len: (end - start) as usize,
            }
        })
        .collect())
}

/// Inverse of standardization on primitive sequences.
///
/// Every entry that is not an ascent top drops to the largest ascent-top
/// value lying before it and below it; the resulting word is then rescaled to
/// the Cayley permutation order isomorphic to it.
pub fn omega_to_prim(p: &Perm) -> Result<Word> {
    require_omega(p)?;
    let e = p.entries();
    let top = ascent_top_flags(e);
    let dropped: Vec<u32> = (0..e.len())
        .map(|i| {
            if top[i] {
                e[i]
            } else {
                (0..i)
                    .filter(|&j| top[j] && e[j] < e[i])
                    .map(|j| e[j])
                    .max()
                    .expect("1 is an ascent top at the first position")
            }
        })
        .collect();
    let mut levels = dropped.clone();
    levels.sort_unstable();
    levels.dedup();
    let x = dropped
        .iter()
        .map(|v| levels.binary_search(v).unwrap() as u32 + 1)
        .collect();
    Ok(Word::from_vec_unchecked(x))
}

/// Same map computed from chains: every entry takes the rank of its chain.
pub fn omega_to_prim_by_chains(p: &Perm) -> Result<Word> {
    let chains = chains(p)?;
    let x = p
        .entries()
        .iter()
        .map(|&v| {
            let rank = chains.partition_point(|c| c.start <= v);
            debug_assert!(chains[rank - 1].contains(v));
            rank as u32
        })
        .collect();
    Ok(Word::from_vec_unchecked(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn fig_perm() -> Perm {
        "1,11,12,14,2,5,3,7,13,8,6,4,10,9".parse().unwrap()
    }

    fn fig_word() -> Word {
        "1,5,6,8,1,2,1,3,7,3,2,1,4,3".parse().unwrap()
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(standardize(&w("312112341")).unwrap(), "715236894".parse().unwrap());
        assert_eq!(standardize(&w("1312")).unwrap(), "1423".parse().unwrap());
        assert_eq!(standardize(&fig_word()).unwrap(), fig_perm());
        assert_eq!(standardize(&Word::empty()).unwrap(), Perm::identity(0));
        assert!(standardize(&w("131")).is_err());
    }

    #[test]
    fn chain_example() {
        let long: Vec<Chain> = chains(&fig_perm())
            .unwrap()
            .into_iter()
            .filter(|c| c.len >= 2)
            .collect();
        assert_eq!(
            long,
            vec![
                Chain { start: 1, len: 4 },
                Chain { start: 5, len: 2 },
                Chain { start: 7, len: 3 }
            ]
        );
        assert_eq!(chains(&Perm::identity(1)).unwrap(), vec![Chain { start: 1, len: 1 }]);
        let id = chains(&Perm::identity(5)).unwrap();
        assert_eq!(id.len(), 5);
        assert!(id.iter().all(|c| c.len == 1));
        assert!(chains(&"14325".parse().unwrap()).is_err());
    }

    #[test]
    fn gravity_examples() {
        assert_eq!(omega_to_prim(&fig_perm()).unwrap(), fig_word());
        assert_eq!(omega_to_prim(&"1423".parse().unwrap()).unwrap(), w("1312"));
        assert_eq!(omega_to_prim(&Perm::identity(1)).unwrap(), w("1"));
        assert_eq!(omega_to_prim_by_chains(&fig_perm()).unwrap(), fig_word());
        assert!(omega_to_prim(&"213".parse().unwrap()).is_err());
    }
}
