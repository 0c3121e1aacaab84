use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::families::binomial;
use super::series::IntSeries;
use super::table::CountTable;
use crate::error::{Error, Result};

/// `sum_{k=1}^n C(n-1, k-1) prim(k)`, the count of all words whose flat-free
/// cores are counted by `prim`; 1 at `n = 0`.
pub fn binomial_transform_count(prim: &CountTable, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut total = BigInt::default();
    for k in 1..=n {
        total += binomial(n as i64 - 1, k as i64 - 1) * prim.require(k)?;
    }
    Ok(total)
}

/// `A(t/(1-t))` truncated at `t^order`; `A` must count the empty word once.
pub fn ogf_substitute(prim: &IntSeries, order: usize) -> Result<IntSeries> {
    if !prim.coeff(0).is_one() {
        return Err(Error::Series {
            reason: format!("constant term is {}, expected 1", prim.coeff(0)),
        });
    }
    prim.truncate(order)
        .compose(&IntSeries::t_over_one_minus_t(order))
}

fn int(k: usize) -> BigInt {
    BigInt::from(k)
}

/// `prod_{j=1}^k j t^2 / (1 - j t)`.
fn stirling_product(k: usize, order: usize) -> IntSeries {
    let mut acc = IntSeries::one(order);
    for j in 1..=k {
        let factor = IntSeries::geometric(&int(j), order).shift(2).scale(&int(j));
        acc = &acc * &factor;
    }
    acc
}

/// `F = sum_k prod_{j=1}^k j t^2 / (1 - j t)`.
pub fn f_product_form(order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    let mut term = IntSeries::one(order);
    for k in 0..=order / 2 {
        if k > 0 {
            let factor = IntSeries::geometric(&int(k), order).shift(2).scale(&int(k));
            term = &term * &factor;
        }
        acc = &acc + &term;
    }
    acc
}

/// `F = sum_i t^i / ((1 - i t) (1 + t)^{i+1})`.
pub fn f_alternating_form(order: usize) -> IntSeries {
    let inv_one_plus_t = IntSeries::geometric(&BigInt::from(-1), order);
    let mut acc = IntSeries::zero(order);
    let mut power = inv_one_plus_t.clone();
    for i in 0..=order {
        let term = &IntSeries::geometric(&int(i), order).shift(i) * &power;
        acc = &acc + &term;
        power = &power * &inv_one_plus_t;
    }
    acc
}

/// `F` by both displayed forms, rejected unless they agree.
pub fn f_series(order: usize) -> Result<IntSeries> {
    let a = f_product_form(order);
    let b = f_alternating_form(order);
    if a != b {
        let n = (0..=order).find(|&n| a.coeff(n) != b.coeff(n)).unwrap();
        return Err(Error::Series {
            reason: format!(
                "the two forms of F differ at t^{n}: {} vs {}",
                a.coeff(n),
                b.coeff(n)
            ),
        });
    }
    Ok(a)
}

/// `G = sum_k 1/(1 - (k+1) t) prod_{j=1}^k j t^2 / (1 - j t)`.
pub fn g_series(order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    for k in 0..=order / 2 {
        let term = &IntSeries::geometric(&int(k + 1), order) * &stirling_product(k, order);
        acc = &acc + &term;
    }
    acc
}

/// `sum_{k>=0} t^k / (1 - k t)`.
pub fn modasc_122_series(order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    for k in 0..=order {
        acc = &acc + &IntSeries::geometric(&int(k), order).shift(k);
    }
    acc
}

/// `sum_{i>=0} t^i (1 - t) / (1 - (i+1) t)`.
pub fn modasc_1232_series(order: usize) -> IntSeries {
    let one_minus_t = IntSeries::from_i64s(&[1, -1], order);
    let mut acc = IntSeries::zero(order);
    for i in 0..=order {
        let term = &IntSeries::geometric(&int(i + 1), order).shift(i) * &one_minus_t;
        acc = &acc + &term;
    }
    acc
}

/// Iterates `x -> step(x)` from `1` until the truncated series is stable.
/// Each step must fix at least one more coefficient.
fn fixed_point(order: usize, step: impl Fn(&IntSeries) -> Result<IntSeries>) -> Result<IntSeries> {
    let mut x = IntSeries::one(order);
    for _ in 0..=order + 1 {
        let next = step(&x)?;
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(Error::Series {
        reason: "fixed-point iteration did not stabilize".into(),
    })
}

/// The `dudu`-avoiding path series, solving `D = 1 + tD + t^2 D^2 / (1 - t(D - 1))`.
pub fn d_series(order: usize) -> Result<IntSeries> {
    let one = IntSeries::one(order);
    fixed_point(order, |d| {
        let denom = &one - &(d - &one).shift(1);
        let tail = &(d * d).shift(2) * &denom.inverse()?;
        Ok(&(&one + &d.shift(1)) + &tail)
    })
}

/// The Motzkin series, solving `M = 1 + tM + t^2 M^2`.
pub fn motzkin_series(order: usize) -> Result<IntSeries> {
    let one = IntSeries::one(order);
    fixed_point(order, |m| Ok(&(&one + &m.shift(1)) + &(m * m).shift(2)))
}

/// The named series of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialSeries {
    F,
    PrimOgf122,
    ModascOgf122,
    G,
    D,
    Modasc312,
    MotzkinEq,
    Modasc1232,
}

impl SpecialSeries {
    pub const ALL: [SpecialSeries; 8] = [
        SpecialSeries::F,
        SpecialSeries::PrimOgf122,
        SpecialSeries::ModascOgf122,
        SpecialSeries::G,
        SpecialSeries::D,
        SpecialSeries::Modasc312,
        SpecialSeries::MotzkinEq,
        SpecialSeries::Modasc1232,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialSeries::F => "F",
            SpecialSeries::PrimOgf122 => "PrimOGF122",
            SpecialSeries::ModascOgf122 => "ModascOGF122",
            SpecialSeries::G => "G",
            SpecialSeries::D => "D",
            SpecialSeries::Modasc312 => "Modasc312",
            SpecialSeries::MotzkinEq => "Motzkin_eq",
            SpecialSeries::Modasc1232 => "Modasc1232",
        }
    }
}

impl fmt::Display for SpecialSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpecialSeries::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "series name",
                input: s.to_string(),
                reason: "unknown series".into(),
            })
    }
}

pub fn special_series(name: SpecialSeries, order: usize) -> Result<IntSeries> {
    match name {
        SpecialSeries::F => f_series(order),
        SpecialSeries::PrimOgf122 => {
            let one_plus_t = IntSeries::from_i64s(&[1, 1], order);
            Ok(&one_plus_t * &f_series(order)?)
        }
        SpecialSeries::ModascOgf122 => Ok(modasc_122_series(order)),
        SpecialSeries::G => Ok(g_series(order)),
        SpecialSeries::D => d_series(order),
        SpecialSeries::Modasc312 => {
            let prim = &IntSeries::one(order) + &d_series(order)?.shift(1);
            ogf_substitute(&prim, order)
        }
        SpecialSeries::MotzkinEq => motzkin_series(order),
        SpecialSeries::Modasc1232 => Ok(modasc_1232_series(order)),
    }
}
