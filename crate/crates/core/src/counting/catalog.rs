use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::families::{
    bell, binomial_transform, catalan, dudu_count, fibonacci, modasc_221, motzkin,
    power_sum_122, prim_122,
};
use crate::error::{Error, Result};
use crate::patterns::CayleyPattern;
use crate::seqcore::Class;

/// A counting sequence with a known closed form. Every family takes the
/// value 1 at `n = 0`, for the empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Ones,
    /// 1 at sizes 0 and 1, then 0.
    OneThenZeros,
    PowersOfTwo,
    Fibonacci,
    OddFibonacci,
    Bell,
    BellShifted,
    Catalan,
    CatalanShifted,
    MotzkinShifted,
    /// Binomial transform of the Catalan numbers (A007317).
    BinomialCatalan,
    /// `sum k^{n-k}` (A026898).
    PowerSum,
    /// `sum (k-1)! S(n-k+1, k)` (A229046).
    OrderedPartitionSum,
    /// `dudu`-avoiding Dyck paths of semilength `n-1` (A102407).
    DuduShifted,
    /// Binomial transform of the shifted `dudu` counts.
    DuduTransform,
    /// The double Stirling sum counting 221-avoiders.
    StirlingDoubleSum,
    /// Binomial transform of [`Family::OrderedPartitionSum`] (A047970).
    OrderedPartitionTransform,
}

impl Family {
    pub fn value(self, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        match self {
            Family::Ones => BigInt::one(),
            Family::OneThenZeros => {
                if n == 1 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Family::PowersOfTwo => BigInt::one() << (n - 1),
            Family::Fibonacci => fibonacci(n),
            Family::OddFibonacci => fibonacci(2 * n - 1),
            Family::Bell => bell(n),
            Family::BellShifted => bell(n - 1),
            Family::Catalan => catalan(n),
            Family::CatalanShifted => catalan(n - 1),
            Family::MotzkinShifted => motzkin(n - 1),
            Family::BinomialCatalan => binomial_transform(n, |k| catalan(k - 1)),
            Family::PowerSum => power_sum_122(n),
            Family::OrderedPartitionSum => prim_122(n),
            Family::DuduShifted => dudu_count(n - 1),
            Family::DuduTransform => binomial_transform(n, |k| dudu_count(k - 1)),
            Family::StirlingDoubleSum => modasc_221(n),
            Family::OrderedPartitionTransform => binomial_transform(n, prim_122),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Ones => "1,1,1,...",
            Family::OneThenZeros => "1,0,0,...",
            Family::PowersOfTwo => "2^(n-1)",
            Family::Fibonacci => "Fibonacci",
            Family::OddFibonacci => "odd Fibonacci",
            Family::Bell => "Bell",
            Family::BellShifted => "Bell (shifted)",
            Family::Catalan => "Catalan",
            Family::CatalanShifted => "Catalan (shifted)",
            Family::MotzkinShifted => "Motzkin (shifted)",
            Family::BinomialCatalan => "A007317",
            Family::PowerSum => "A026898",
            Family::OrderedPartitionSum => "A229046",
            Family::DuduShifted => "A102407",
            Family::DuduTransform => "dudu transform",
            Family::StirlingDoubleSum => "Stirling double sum",
            Family::OrderedPartitionTransform => "A047970",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A row of the single-pattern enumeration table. Patterns in one row have
/// the same avoiders; `None` marks a count without a confirmed closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub patterns: &'static [&'static str],
    pub modasc: Option<Family>,
    pub prim: Option<Family>,
}

pub const TABLE1: &[Table1Row] = &[
    row(&["11"], Some(Family::Ones), Some(Family::Ones)),
    row(&["12"], Some(Family::Ones), Some(Family::OneThenZeros)),
    row(&["21", "121"], Some(Family::PowersOfTwo), Some(Family::Ones)),
    row(&["112"], Some(Family::PowersOfTwo), Some(Family::Fibonacci)),
    row(&["122"], Some(Family::PowerSum), Some(Family::OrderedPartitionSum)),
    row(&["123"], Some(Family::PowersOfTwo), Some(Family::Ones)),
    row(&["132"], Some(Family::OddFibonacci), Some(Family::Fibonacci)),
    row(&["212", "1212"], Some(Family::Bell), Some(Family::BellShifted)),
    row(&["213", "1213"], Some(Family::Catalan), Some(Family::MotzkinShifted)),
    row(&["221"], Some(Family::StirlingDoubleSum), Some(Family::BellShifted)),
    row(&["231"], Some(Family::Catalan), Some(Family::MotzkinShifted)),
    row(&["312", "1312"], Some(Family::DuduTransform), Some(Family::DuduShifted)),
    row(&["321"], Some(Family::BinomialCatalan), Some(Family::CatalanShifted)),
    row(&["1123"], Some(Family::Catalan), None),
    row(&["1232"], Some(Family::OrderedPartitionTransform), Some(Family::OrderedPartitionSum)),
    row(&["1234"], Some(Family::Catalan), Some(Family::MotzkinShifted)),
    row(&["2132"], Some(Family::Bell), Some(Family::BellShifted)),
    row(&["2213"], Some(Family::Bell), None),
    row(&["2231"], Some(Family::Bell), None),
    row(&["2321"], Some(Family::Bell), Some(Family::BellShifted)),
];

const fn row(
    patterns: &'static [&'static str],
    modasc: Option<Family>,
    prim: Option<Family>,
) -> Table1Row {
    Table1Row {
        patterns,
        modasc,
        prim,
    }
}

impl Table1Row {
    pub fn family(&self, class: Class) -> Option<Family> {
        match class {
            Class::Modasc => self.modasc,
            Class::Prim => self.prim,
        }
    }
}

/// A row of the unsolved-pattern table. Golden values start at `n = 1`;
/// `conjecture` holds a tentative family marked with a question mark.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table2Row {
    pub patterns: &'static [&'static str],
    pub modasc_golden: &'static [u64],
    pub prim_golden: &'static [u64],
    pub modasc_conjecture: Option<Family>,
    pub prim_conjecture: Option<Family>,
}

impl Table2Row {
    pub fn golden(&self, class: Class) -> &'static [u64] {
        match class {
            Class::Modasc => self.modasc_golden,
            Class::Prim => self.prim_golden,
        }
    }

    pub fn conjecture(&self, class: Class) -> Option<Family> {
        match class {
            Class::Modasc => self.modasc_conjecture,
            Class::Prim => self.prim_conjecture,
        }
    }
}

pub const TABLE2: &[Table2Row] = &[
    Table2Row {
        patterns: &["111"],
        modasc_golden: &[1, 2, 4, 10, 29, 97, 367, 1550],
        prim_golden: &[1, 1, 2, 5, 14, 46, 172, 718, 3317, 16796],
        modasc_conjecture: None,
        prim_conjecture: None,
    },
    Table2Row {
        patterns: &["211", "1223"],
        modasc_golden: &[],
        prim_golden: &[1, 1, 2, 5, 14, 44, 153, 581, 2385],
        modasc_conjecture: Some(Family::OrderedPartitionTransform),
        prim_conjecture: None,
    },
    Table2Row {
        patterns: &["1324", "1342"],
        modasc_golden: &[],
        prim_golden: &[],
        modasc_conjecture: Some(Family::BinomialCatalan),
        prim_conjecture: Some(Family::CatalanShifted),
    },
    Table2Row {
        patterns: &["4321"],
        modasc_golden: &[1, 2, 5, 15, 53, 217, 1008, 5188],
        prim_golden: &[1, 1, 2, 5, 16, 61, 265, 1267],
        modasc_conjecture: None,
        prim_conjecture: None,
    },
];

/// The closed-form family of `pattern` within `class`, if one is known.
pub fn closed_form(pattern: &CayleyPattern, class: Class) -> Option<Family> {
    let key = pattern.to_string();
    TABLE1
        .iter()
        .find(|r| r.patterns.contains(&key.as_str()))
        .and_then(|r| r.family(class))
}

/// Number of words of `class` and size `n` avoiding `pattern`, from its
/// closed form.
pub fn closed_counts(pattern: &CayleyPattern, class: Class, n: usize) -> Result<BigInt> {
    closed_form(pattern, class)
        .map(|f| f.value(n))
        .ok_or_else(|| Error::NoClosedForm {
            pattern: pattern.to_string(),
            class: class.to_string(),
        })
}
