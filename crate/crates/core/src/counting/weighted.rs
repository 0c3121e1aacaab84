use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::families::{binomial, stirling2_rows};
use crate::error::{Error, Result};
use crate::maps::all_perms;
use crate::patterns::{avoiders, contains, contains_special, CayleyPattern, PatternSet, SpecialPattern};
use crate::seqcore::{asc, has_flat_step, is_modasc, statistics, Class, Word};

/// A triangle of exact counts indexed by `(n, i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedCounts {
    rows: Vec<Vec<BigInt>>,
}

impl WeightedCounts {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        WeightedCounts { rows }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// Zero outside the stored triangle.
    pub fn get(&self, n: usize, i: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(i))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows.get(n).map(|r| r.iter().sum()).unwrap_or_default()
    }
}

/// Number of set partitions of `[n]` with exactly `i` non-singleton blocks,
/// for every `i`, by visiting every partition as a restricted growth string.
pub fn p_coefficients(n: usize, cap: usize) -> Result<Vec<BigInt>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    fn visit(i: usize, n: usize, sizes: &mut Vec<usize>, counts: &mut [u64]) {
        if i == n {
            counts[sizes.iter().filter(|&&s| s >= 2).count()] += 1;
            return;
        }
        for b in 0..sizes.len() {
            sizes[b] += 1;
            visit(i + 1, n, sizes, counts);
            sizes[b] -= 1;
        }
        sizes.push(1);
        visit(i + 1, n, sizes, counts);
        sizes.pop();
    }
    let mut counts = vec![0u64; n / 2 + 1];
    visit(0, n, &mut Vec::with_capacity(n), &mut counts);
    Ok(counts.into_iter().map(BigInt::from).collect())
}

pub fn p_table(n_max: usize, cap: usize) -> Result<WeightedCounts> {
    let rows = (0..=n_max)
        .into_par_iter()
        .map(|n| p_coefficients(n, cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightedCounts::from_rows(rows))
}

/// Both sides of `S(n, n-h) = sum_{i=h+1}^n C(n-1, n-i) p_{i-1, i-1-h}`.
pub fn stirling_identity_sides(n: usize, h: usize, p: &WeightedCounts) -> (BigInt, BigInt) {
    let lhs = stirling2_rows(n)[n][n - h].clone();
    let rhs = (h + 1..=n)
        .map(|i| binomial(n as i64 - 1, (n - i) as i64) * p.get(i - 1, i - 1 - h))
        .sum();
    (lhs, rhs)
}

/// Checks the Stirling identity at `(n, h)`, `0 <= h < n`, with the
/// coefficients `p` found by brute force.
pub fn stirling_identity_check(n: usize, h: usize, cap: usize) -> Result<bool> {
    if h >= n {
        return Err(Error::Series {
            reason: format!("need 0 <= h < n, got h = {h}, n = {n}"),
        });
    }
    let p = p_table(n - 1, cap)?;
    let (lhs, rhs) = stirling_identity_sides(n, h, &p);
    Ok(lhs == rhs)
}

/// Histogram of the number of ascents over the avoiders of `patterns`.
pub fn ascent_distribution(
    patterns: &PatternSet,
    class: Class,
    n: usize,
) -> BTreeMap<usize, BigInt> {
    let mut hist = BTreeMap::new();
    for x in avoiders(n, patterns, class) {
        *hist.entry(asc(&x)).or_insert_with(BigInt::zero) += 1;
    }
    hist
}

fn pattern_221() -> CayleyPattern {
    "221".parse().expect("valid literal pattern")
}

/// Positions `i` of a primitive 221-avoider `w` where a copy of `w_i` can be
/// inserted right after `w_i` without creating 221: the weak right-to-left
/// minima.
pub fn active_sites_221(w: &Word) -> Result<Vec<usize>> {
    if !is_modasc(w) || has_flat_step(w) {
        return Err(Error::NotInClass {
            object: w.to_string(),
            class: "Prim".into(),
        });
    }
    if contains(w, &pattern_221()) {
        return Err(Error::ContainsPattern {
            object: w.to_string(),
            pattern: "221".into(),
        });
    }
    Ok(statistics(w).wrlmin.indices())
}

/// Distribution of the number of weak right-to-left minima over `Prim_k(221)`.
pub fn wrlmin_distribution_prim_221(k: usize) -> Vec<BigInt> {
    let mut dist = vec![BigInt::zero(); k + 1];
    for w in avoiders(k, &PatternSet::single(pattern_221()), Class::Prim) {
        dist[statistics(&w).wrlmin.len()] += 1;
    }
    dist
}

/// Distribution of the number of right-to-left minima over permutations of
/// length `n` avoiding 32-1.
pub fn rlmin_distribution_32_1(n: usize) -> Vec<BigInt> {
    let mut dist = vec![BigInt::zero(); n + 1];
    for p in all_perms(n) {
        if !contains_special(&p, SpecialPattern::Vincular321) {
            dist[statistics(p.as_word()).rlmin.len()] += 1;
        }
    }
    dist
}

/// `|Modasc_n(221)|` by weighted insertion: every `w ∈ Prim_k(221)` with `i`
/// active sites extends in `C(n-1-k+i, i-1)` ways.
pub fn modasc_221_by_active_sites(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let set = PatternSet::single(pattern_221());
    let mut total = BigInt::zero();
    for k in 1..=n {
        for w in avoiders(k, &set, Class::Prim) {
            let i = active_sites_221(&w)?.len() as i64;
            total += binomial(n as i64 - 1 - k as i64 + i, i - 1);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::families::{bell, stirling2};
    use crate::maps::all_set_partitions;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|b| i64::try_from(b.clone()).unwrap()).collect()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn p_rows() {
        assert_eq!(ints(&p_coefficients(3, 12).unwrap()), [1, 4]);
        assert_eq!(ints(&p_coefficients(0, 12).unwrap()), [1]);
        let p = p_table(10, 12).unwrap();
        for n in 0..=10 {
            assert_eq!(p.row_sum(n), bell(n));
        }
        assert!(p_coefficients(13, 12).is_err());
    }

    #[test]
    fn p_rows_match_partition_objects() {
        for n in 0..=8 {
            let mut counts = vec![0i64; n / 2 + 1];
            for beta in all_set_partitions(n) {
                counts[beta.non_singleton_blocks()] += 1;
            }
            assert_eq!(ints(&p_coefficients(n, 12).unwrap()), counts);
        }
    }

    #[test]
    fn stirling_identity_small() {
        let p = p_table(3, 12).unwrap();
        assert_eq!(stirling_identity_sides(4, 2, &p), (BigInt::from(7), BigInt::from(7)));
        assert!(stirling_identity_check(4, 2, 12).unwrap());
        assert!(stirling_identity_check(5, 0, 12).unwrap());
        assert!(stirling_identity_check(3, 3, 12).is_err());
    }

    #[test]
    fn ascent_histogram_2321() {
        let set: PatternSet = "2321".parse().unwrap();
        let hist = ascent_distribution(&set, Class::Modasc, 4);
        let expected: BTreeMap<usize, BigInt> =
            (0..4).map(|h| (h, stirling2(4, 4 - h))).collect();
        assert_eq!(hist, expected);
        assert_eq!(
            ascent_distribution(&set, Class::Modasc, 1),
            BTreeMap::from([(0, BigInt::from(1))])
        );
    }

    #[test]
    fn active_site_examples() {
        assert_eq!(active_sites_221(&w("121")).unwrap(), [1, 3]);
        assert_eq!(active_sites_221(&w("12")).unwrap(), [1, 2]);
        assert_eq!(active_sites_221(&w("1")).unwrap(), [1]);
        assert!(active_sites_221(&w("1221")).is_err());
        assert!(active_sites_221(&w("12321")).is_err());
    }

    /// Active sites agree with the literal definition: inserting a flat step
    /// there keeps the word 221-free.
    #[test]
    fn active_sites_match_insertion() {
        let y = pattern_221();
        for k in 1..=7 {
            for v in avoiders(k, &PatternSet::single(y.clone()), Class::Prim) {
                let e = v.entries();
                let direct: Vec<usize> = (0..k)
                    .filter(|&i| {
                        let mut x = e.to_vec();
                        x.insert(i + 1, e[i]);
                        !contains(&Word::new(x).unwrap(), &y)
                    })
                    .map(|i| i + 1)
                    .collect();
                assert_eq!(active_sites_221(&v).unwrap(), direct, "{v}");
            }
        }
    }

    #[test]
    fn claesson_statistics() {
        for k in 1..=7 {
            let wr = wrlmin_distribution_prim_221(k);
            let rl = rlmin_distribution_32_1(k - 1);
            for i in 1..=k {
                assert_eq!(wr[i], stirling2(k - 1, i - 1), "k = {k}, i = {i}");
                assert_eq!(rl[i - 1], stirling2(k - 1, i - 1));
            }
        }
        let m: Vec<BigInt> = (0..=7).map(|n| modasc_221_by_active_sites(n).unwrap()).collect();
        assert_eq!(ints(&m), [1, 1, 2, 5, 14, 44, 155, 607]);
    }
}
