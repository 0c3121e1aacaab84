use serde::{Deserialize, Serialize};

use super::Word;
use crate::error::{Error, Result};

/// A word without flat steps plus a positive multiplicity for each entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlatDecomposition {
    primitive: Word,
    multiplicities: Vec<usize>,
}

impl FlatDecomposition {
    pub fn new(primitive: Word, multiplicities: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Err(Error::InvalidDecomposition { reason });
        if primitive.len() != multiplicities.len() {
            return invalid(format!(
                "{} entries but {} multiplicities",
                primitive.len(),
                multiplicities.len()
            ));
        }
        if let Some(i) = multiplicities.iter().position(|&m| m == 0) {
            return invalid(format!("multiplicity at position {} is zero", i + 1));
        }
        if has_flat_step(&primitive) {
            return invalid(format!("{primitive} has a flat step"));
        }
        Ok(FlatDecomposition {
            primitive,
            multiplicities,
        })
    }

    pub fn primitive(&self) -> &Word {
        &self.primitive
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Length of the expanded word.
    pub fn expanded_len(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// True iff two consecutive entries are equal.
pub fn has_flat_step(x: &Word) -> bool {
    x.entries().windows(2).any(|w| w[0] == w[1])
}

/// Collapses every maximal run of equal consecutive entries to one entry.
pub fn collapse_flats(x: &Word) -> Result<FlatDecomposition> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut primitive = Vec::new();
    let mut multiplicities: Vec<usize> = Vec::new();
    for &v in x.entries() {
        if primitive.last() == Some(&v) {
            *multiplicities.last_mut().unwrap() += 1;
        } else {
            primitive.push(v);
            multiplicities.push(1);
        }
    }
    Ok(FlatDecomposition {
        primitive: Word::from_vec_unchecked(primitive),
        multiplicities,
    })
}

/// Repeats each primitive entry according to its multiplicity.
pub fn insert_flats(d: &FlatDecomposition) -> Word {
    let mut out = Vec::with_capacity(d.expanded_len());
    for (&v, &m) in d.primitive.entries().iter().zip(&d.multiplicities) {
        out.extend(std::iter::repeat_n(v, m));
    }
    Word::from_vec_unchecked(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::{asc, is_modasc};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn collapse_long_example() {
        let d = collapse_flats(&w("1113122224211")).unwrap();
        assert_eq!(d.primitive(), &w("1312421"));
        assert_eq!(d.multiplicities(), &[3, 1, 1, 4, 1, 1, 2]);
        assert_eq!(insert_flats(&d), w("1113122224211"));
    }

    #[test]
    fn collapse_small_cases() {
        let d = collapse_flats(&w("1312")).unwrap();
        assert_eq!(d.primitive(), &w("1312"));
        assert_eq!(d.multiplicities(), &[1, 1, 1, 1]);
        let d = collapse_flats(&w("11")).unwrap();
        assert_eq!(d.primitive(), &w("1"));
        assert_eq!(d.multiplicities(), &[2]);
        assert_eq!(collapse_flats(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn insert_examples() {
        let d = FlatDecomposition::new(w("1312421"), vec![3, 1, 1, 4, 1, 1, 2]).unwrap();
        assert_eq!(insert_flats(&d), w("1113122224211"));
        let d = FlatDecomposition::new(w("1"), vec![5]).unwrap();
        assert_eq!(insert_flats(&d), w("11111"));
        let d = FlatDecomposition::new(w("12"), vec![1, 2]).unwrap();
        assert_eq!(insert_flats(&d), w("122"));
    }

    #[test]
    fn malformed_decompositions_rejected() {
        assert!(matches!(
            FlatDecomposition::new(w("12"), vec![1, 0]),
            Err(Error::InvalidDecomposition { .. })
        ));
        assert!(FlatDecomposition::new(w("12"), vec![1]).is_err());
        assert!(FlatDecomposition::new(w("112"), vec![1, 1, 1]).is_err());
    }

    #[test]
    fn flats_preserve_membership_and_ascents() {
        let x = w("1113122224211");
        let d = collapse_flats(&x).unwrap();
        assert!(is_modasc(&x) && is_modasc(d.primitive()));
        assert_eq!(asc(&x), asc(d.primitive()));
    }
}
