use super::{standardize, Composition, SetPartition};
use crate::error::{Error, Result};
use crate::patterns::{contains, CayleyPattern};
use crate::seqcore::{is_modasc, Word};

fn require_avoider(x: &Word, pattern: &str) -> Result<()> {
    if !is_modasc(x) {
        return Err(Error::NotInClass {
            object: x.to_string(),
            class: "Modasc".into(),
        });
    }
    let y: CayleyPattern = pattern.parse().expect("valid literal pattern");
    if contains(x, &y) {
        return Err(Error::ContainsPattern {
            object: x.to_string(),
            pattern: pattern.into(),
        });
    }
    Ok(())
}

/// Multiplicities of the values `1..=max(x)` of a 112-avoiding sequence.
///
/// Such a sequence is a left pyramid `1 2 ... m m^{k_m} ... 2^{k_2} 1^{k_1}`,
/// so the multiplicities determine it.
pub fn modasc112_to_composition(x: &Word) -> Result<Composition> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_avoider(x, "112")?;
    let mut parts = vec![0usize; x.max_entry() as usize];
    for &v in x.entries() {
        parts[v as usize - 1] += 1;
    }
    Composition::new(parts)
}

/// Rebuilds the left pyramid with the given value multiplicities.
pub fn composition_to_modasc112(c: &Composition) -> Word {
    let m = c.parts().len() as u32;
    let mut x: Vec<u32> = (1..=m).collect();
    for v in (1..=m).rev() {
        let extra = c.parts()[v as usize - 1] - 1;
        x.extend(std::iter::repeat_n(v, extra));
    }
    Word::from_vec_unchecked(x)
}

/// Cuts the standardization of a 122-avoiding sequence before every copy of 1
/// except the first; the pieces are the blocks of a set partition whose block
/// minima are `1..=k`, `k` being the number of 1s.
pub fn modasc122_to_partition(x: &Word) -> Result<SetPartition> {
    require_avoider(x, "122")?;
    let p = standardize(x)?;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (&v, &label) in x.entries().iter().zip(p.entries()) {
        if v == 1 {
            blocks.push(Vec::new());
        }
        blocks
            .last_mut()
            .expect("a modified ascent sequence starts with 1")
            .push(label as usize);
    }
    SetPartition::new(blocks)
}

/// Inverse of [`modasc122_to_partition`]; rejects partitions whose block
/// minima do not form an initial interval.
pub fn partition_to_modasc122(beta: &SetPartition) -> Result<Word> {
    let minima = beta.minima();
    let k = minima.len();
    if minima.iter().enumerate().any(|(i, &m)| m != i + 1) {
        return Err(Error::InvalidPartition {
            reason: format!("block minima of {beta} are not an initial interval"),
        });
    }
    let x: Vec<u32> = beta
        .blocks()
        .iter()
        .flatten()
        .map(|&label| {
            if label <= k {
                1
            } else {
                (label - k + 1) as u32
            }
        })
        .collect();
    Ok(Word::from_vec_unchecked(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{all_compositions, all_set_partitions};
    use crate::patterns::avoiders;
    use crate::seqcore::Class;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn composition_examples() {
        let c = modasc112_to_composition(&w("1233221")).unwrap();
        assert_eq!(c.parts(), &[2, 3, 2]);
        assert_eq!(composition_to_modasc112(&c), w("1233221"));
        assert_eq!(modasc112_to_composition(&w("1")).unwrap().parts(), &[1]);
        assert_eq!(
            modasc112_to_composition(&w("12345")).unwrap().parts(),
            &[1, 1, 1, 1, 1]
        );
        assert!(modasc112_to_composition(&w("1121")).is_err());
        assert!(modasc112_to_composition(&Word::empty()).is_err());
    }

    #[test]
    fn composition_map_is_a_bijection() {
        for n in 1..=8 {
            let words = avoiders(n, &"112".parse().unwrap(), Class::Modasc);
            let mut images: Vec<Composition> = words
                .iter()
                .map(|x| modasc112_to_composition(x).unwrap())
                .collect();
            for (x, c) in words.iter().zip(&images) {
                assert_eq!(&composition_to_modasc112(c), x);
            }
            images.sort();
            assert_eq!(images, all_compositions(n), "n = {n}");
        }
    }

    #[test]
    fn partition_example() {
        let beta = modasc122_to_partition(&w("134112561")).unwrap();
        assert_eq!(beta.to_string(), "{1,6,7}{2}{3,5,8,9}{4}");
        assert_eq!(partition_to_modasc122(&beta).unwrap(), w("134112561"));
        assert_eq!(modasc122_to_partition(&w("1")).unwrap().to_string(), "{1}");
        assert_eq!(
            modasc122_to_partition(&w("1111")).unwrap().to_string(),
            "{1}{2}{3}{4}"
        );
        assert!(modasc122_to_partition(&w("122")).is_err());
        assert!(partition_to_modasc122(&"{1,2}{3}".parse().unwrap()).is_err());
    }

    #[test]
    fn partition_map_is_a_bijection() {
        for n in 1..=8 {
            let words = avoiders(n, &"122".parse().unwrap(), Class::Modasc);
            let mut images: Vec<SetPartition> = words
                .iter()
                .map(|x| modasc122_to_partition(x).unwrap())
                .collect();
            for (x, beta) in words.iter().zip(&images) {
                let ones = x.entries().iter().filter(|&&v| v == 1).count();
                assert_eq!(beta.minima(), (1..=ones).collect::<Vec<_>>());
                assert_eq!(&partition_to_modasc122(beta).unwrap(), x);
            }
            images.sort();
            let mut expected: Vec<SetPartition> = all_set_partitions(n)
                .into_iter()
                .filter(|b| b.minima().iter().enumerate().all(|(i, &m)| m == i + 1))
                .collect();
            expected.sort();
            assert_eq!(images, expected, "n = {n}");
        }
    }
}
