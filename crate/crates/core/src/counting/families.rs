use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..n {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

pub fn motzkin(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::one());
    for i in 2..=n {
        let next = (&cur * (2 * i + 1) + &prev * (3 * i - 3)) / (i + 2);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Fibonacci numbers with `F_0 = 0` and `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Rows `0..=n_max` of the triangle of Stirling numbers of the second kind.
pub fn stirling2_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let keep = if k < n { &prev[k] * k } else { BigInt::zero() };
                let fresh = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
                keep + fresh
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_rows(n)[n][k].clone()
}

pub fn bell(n: usize) -> BigInt {
    stirling2_rows(n)[n].iter().sum()
}

/// Ordered set partitions of `[n]`.
pub fn fubini(n: usize) -> BigInt {
    stirling2_rows(n)[n]
        .iter()
        .enumerate()
        .map(|(k, s)| factorial(k) * s)
        .sum()
}

/// Dyck paths of semilength `n` avoiding `dudu`, by the Lagrange inversion sum.
pub fn dudu_count(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let n = n as i64;
    let mut total = BigRational::zero();
    for j in 0..=n / 2 {
        let inner: BigInt = (0..=n - 2 * j)
            .map(|i| binomial(n - 2 * j, i) * binomial(j + i, n - 2 * j - i + 1))
            .sum();
        total += BigRational::new(binomial(n - j, j) * inner, BigInt::from(n - j));
    }
    debug_assert!(total.is_integer());
    total.to_integer()
}

/// `sum_{k=1}^n k^{n-k}`: modified ascent sequences avoiding 122.
pub fn power_sum_122(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (1..=n).map(|k| num_traits::pow(BigInt::from(k), n - k)).sum()
}

/// `sum_{k>=1} (k-1)! S(n-k+1, k)`: primitive sequences avoiding 122.
pub fn prim_122(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let s = stirling2_rows(n);
    (1..=n)
        .filter(|&k| k <= n - k + 1)
        .map(|k| factorial(k - 1) * &s[n - k + 1][k])
        .sum()
}

/// `sum_{k=1}^n C(n-1, k-1) a_k`, with value 1 at `n = 0`.
pub fn binomial_transform(n: usize, a: impl Fn(usize) -> BigInt) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (1..=n)
        .map(|k| binomial(n as i64 - 1, k as i64 - 1) * a(k))
        .sum()
}

/// `sum_{k=1}^n sum_{i=1}^k S(k-1, i-1) C(n-1-k+i, i-1)`: modified ascent
/// sequences avoiding 221.
pub fn modasc_221(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let s = stirling2_rows(n);
    let mut total = BigInt::zero();
    for k in 1..=n {
        for i in 1..=k {
            total += &s[k - 1][i - 1] * binomial((n + i) as i64 - 1 - k as i64, i as i64 - 1);
        }
    }
    total
}

/// Named integer sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedSequence {
    Catalan,
    Motzkin,
    Fibonacci,
    Bell,
    Fubini,
    Stirling2,
}

impl NamedSequence {
    pub const ALL: [NamedSequence; 6] = [
        NamedSequence::Catalan,
        NamedSequence::Motzkin,
        NamedSequence::Fibonacci,
        NamedSequence::Bell,
        NamedSequence::Fubini,
        NamedSequence::Stirling2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSequence::Catalan => "catalan",
            NamedSequence::Motzkin => "motzkin",
            NamedSequence::Fibonacci => "fibonacci",
            NamedSequence::Bell => "bell",
            NamedSequence::Fubini => "fubini",
            NamedSequence::Stirling2 => "stirling2",
        }
    }
}

impl fmt::Display for NamedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedSequence::ALL
            .into_iter()
            .find(|q| q.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse {
                what: "sequence name",
                input: s.to_string(),
                reason: "expected one of catalan, motzkin, fibonacci, bell, fubini, stirling2"
                    .into(),
            })
    }
}

/// Value of a named sequence; `k` is required for `stirling2` and rejected otherwise.
pub fn named_sequence(name: NamedSequence, n: usize, k: Option<usize>) -> Result<BigInt> {
    let bad = |reason: &str| Error::Parse {
        what: "sequence arguments",
        input: format!("{name}({n}{})", k.map(|k| format!(",{k}")).unwrap_or_default()),
        reason: reason.into(),
    };
    match (name, k) {
        (NamedSequence::Stirling2, Some(k)) => Ok(stirling2(n, k)),
        (NamedSequence::Stirling2, None) => Err(bad("stirling2 takes a second index")),
        (_, Some(_)) => Err(bad("only stirling2 takes a second index")),
        (NamedSequence::Catalan, None) => Ok(catalan(n)),
        (NamedSequence::Motzkin, None) => Ok(motzkin(n)),
        (NamedSequence::Fibonacci, None) => Ok(fibonacci(n)),
        (NamedSequence::Bell, None) => Ok(bell(n)),
        (NamedSequence::Fubini, None) => Ok(fubini(n)),
    }
}
