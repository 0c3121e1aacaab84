use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series truncated after `t^order`, with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `c t^k`, truncated.
    pub fn monomial(k: usize, c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = BigInt>, order: usize) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn from_i64s(values: &[i64], order: usize) -> Self {
        Self::from_coeffs(values.iter().map(|&v| BigInt::from(v)), order)
    }

    /// `1 / (1 - c t)`.
    pub fn geometric(c: &BigInt, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = BigInt::one();
        for _ in 0..=order {
            coeffs.push(power.clone());
            power *= c;
        }
        IntSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let zeros = std::iter::repeat_n(BigInt::zero(), k);
        Self::from_coeffs(zeros.chain(self.coeffs.iter().cloned()), order)
    }

    /// Division by `t^k`; the first `k` coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|a| !a.is_zero()) {
            return Err(Error::Series {
                reason: format!("not divisible by t^{k}"),
            });
        }
        let order = self.order().saturating_sub(k);
        Ok(Self::from_coeffs(self.coeffs.iter().skip(k).cloned(), order))
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return Err(Error::Series {
                reason: format!("constant term {a0} is not a unit"),
            });
        }
        let n = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n + 1);
        inv.push(a0.clone());
        for k in 1..=n {
            let s: BigInt = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-(s * a0));
        }
        Ok(IntSeries { coeffs: inv })
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &IntSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series {
                reason: "inner series has a nonzero constant term".into(),
            });
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for a in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += a;
        }
        Ok(acc)
    }

    /// `t / (1 - t)`.
    pub fn t_over_one_minus_t(order: usize) -> Self {
        Self::geometric(&BigInt::one(), order).shift(1)
    }

    /// `1 + t + t^2 + ...` raised to `k`, i.e. `1 / (1 - t)^k`.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs.iter().join(", "))
    }
}

fn zip_with(a: &IntSeries, b: &IntSeries, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntSeries {
    IntSeries {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| op(x, y)).collect(),
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;

    fn add(self, rhs: &IntSeries) -> IntSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;

    fn sub(self, rhs: &IntSeries) -> IntSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;

    fn neg(self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;

    fn mul(self, rhs: &IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntSeries { coeffs }
    }
}
