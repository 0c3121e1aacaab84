use super::{Perm, SetPartition};
use crate::error::{Error, Result};
use crate::patterns::{contains_special, SpecialPattern};
use crate::seqcore::Word;

/// Reads the standard representation of `beta` as a permutation: blocks by
/// increasing minimum, each block increasing except its minimum, which goes
/// last.
pub fn claesson(beta: &SetPartition) -> Perm {
    let mut entries = Vec::with_capacity(beta.ground_size());
    for block in beta.blocks() {
        entries.extend(block[1..].iter().map(|&e| e as u32));
        entries.push(block[0] as u32);
    }
    Perm::from_word_unchecked(Word::from_vec_unchecked(entries))
}

/// Cuts a 32-1 avoider right after each right-to-left minimum.
pub fn claesson_inverse(p: &Perm) -> Result<SetPartition> {
    if contains_special(p, SpecialPattern::Vincular321) {
        return Err(Error::ContainsPattern {
            object: p.to_string(),
            pattern: "32-1".into(),
        });
    }
    let e = p.entries();
    let mut is_rlmin = vec![false; e.len()];
    let mut min = u32::MAX;
    for i in (0..e.len()).rev() {
        if e[i] < min {
            min = e[i];
            is_rlmin[i] = true;
        }
    }
    let mut blocks = Vec::new();
    let mut current = Vec::new();
    for (i, &v) in e.iter().enumerate() {
        current.push(v as usize);
        if is_rlmin[i] {
            blocks.push(std::mem::take(&mut current));
        }
    }
    SetPartition::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{all_perms, all_set_partitions};
    use crate::seqcore::des;

    #[test]
    fn standard_representation_example() {
        let beta: SetPartition = "{1,3,6}{2,7}{4}{5,8,9}".parse().unwrap();
        let p = claesson(&beta);
        assert_eq!(p, "361724895".parse().unwrap());
        assert_eq!(claesson_inverse(&p).unwrap(), beta);
        assert_eq!(claesson(&"{1}".parse().unwrap()), Perm::identity(1));
        assert_eq!(claesson(&"{1,2}".parse().unwrap()), "21".parse().unwrap());
        assert!(claesson_inverse(&"321".parse().unwrap()).is_err());
    }

    #[test]
    fn bijection_onto_avoiders() {
        for n in 0..=7 {
            let mut images: Vec<Perm> = all_set_partitions(n)
                .iter()
                .map(|beta| {
                    let p = claesson(beta);
                    assert_eq!(&claesson_inverse(&p).unwrap(), beta);
                    assert_eq!(des(p.as_word()), beta.non_singleton_blocks());
                    p
                })
                .collect();
            images.sort();
            let avoiders: Vec<Perm> = all_perms(n)
                .into_iter()
                .filter(|p| !contains_special(p, SpecialPattern::Vincular321))
                .collect();
            assert_eq!(images, avoiders, "n = {n}");
        }
    }
}
