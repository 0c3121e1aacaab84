use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::Caps;
use crate::error::{Error, Result};
use crate::patterns::{count_avoiders, PatternSet};
use crate::seqcore::Class;

/// Where the values of a [`CountTable`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Oracle,
    Formula,
    Series,
}

/// Exact values `a(offset), a(offset+1), ...` of a counting sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub label: String,
    pub offset: usize,
    pub values: Vec<BigInt>,
    pub provenance: Provenance,
}

impl CountTable {
    pub fn new(
        label: impl Into<String>,
        offset: usize,
        values: Vec<BigInt>,
        provenance: Provenance,
    ) -> Self {
        CountTable {
            label: label.into(),
            offset,
            values,
            provenance,
        }
    }

    /// Tabulates `f(n)` for `n` in `lo..=hi`.
    pub fn tabulate(
        label: impl Into<String>,
        lo: usize,
        hi: usize,
        provenance: Provenance,
        f: impl Fn(usize) -> BigInt,
    ) -> Self {
        let values = (lo..=hi).map(f).collect();
        Self::new(label, lo, values, provenance)
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i))
    }

    pub fn require(&self, n: usize) -> Result<&BigInt> {
        self.get(n).ok_or_else(|| Error::MissingEntry {
            label: self.label.clone(),
            n,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Indices covered by the table.
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.values.len()
    }

    /// First index, within the common range, where the two tables differ.
    pub fn first_mismatch(&self, other: &CountTable) -> Option<(usize, BigInt, BigInt)> {
        let lo = self.offset.max(other.offset);
        let hi = self.indices().end.min(other.indices().end);
        (lo..hi).find_map(|n| {
            let (a, b) = (self.get(n).unwrap(), other.get(n).unwrap());
            (a != b).then(|| (n, a.clone(), b.clone()))
        })
    }

    /// OEIS b-file: one `n a(n)` line per entry.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (n, v) in self.indices().zip(&self.values) {
            writeln!(out, "{n} {v}").unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, v) in self.indices().zip(&self.values) {
            writeln!(out, "{n},{v}").unwrap();
        }
        out
    }

    /// `{"label": ..., "offset": ..., "values": [...]}` with values as exact
    /// JSON integers.
    pub fn to_json(&self) -> String {
        let values: Vec<Value> = self
            .values
            .iter()
            .map(|v| Value::Number(v.to_string().parse().expect("integers are JSON numbers")))
            .collect();
        let doc = json!({ "label": self.label, "offset": self.offset, "values": values });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str, provenance: Provenance) -> Result<Self> {
        let bad = |reason: String| Error::Parse {
            what: "count table",
            input: text.chars().take(80).collect(),
            reason,
        };
        let doc: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let label = doc["label"]
            .as_str()
            .ok_or_else(|| bad("missing label".into()))?
            .to_string();
        let offset = doc["offset"]
            .as_u64()
            .ok_or_else(|| bad("missing offset".into()))? as usize;
        let values = doc["values"]
            .as_array()
            .ok_or_else(|| bad("missing values".into()))?
            .iter()
            .map(|v| match v {
                Value::Number(num) => num
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|e| bad(format!("{num}: {e}"))),
                other => Err(bad(format!("{other} is not an integer"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CountTable::new(label, offset, values, provenance))
    }
}

/// Counts avoiders of `patterns` in `class` by exhaustive generation, for
/// sizes `lo..=hi`.
pub fn oracle_table(
    patterns: &PatternSet,
    class: Class,
    lo: usize,
    hi: usize,
    caps: &Caps,
) -> Result<CountTable> {
    caps.check_oracle(hi)?;
    let label = format!("{class}({patterns})");
    Ok(CountTable::tabulate(label, lo, hi, Provenance::Oracle, |n| {
        BigInt::from(count_avoiders(n, patterns, class))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> CountTable {
        CountTable::tabulate("t", 1, 4, Provenance::Formula, |n| BigInt::from(n * n))
    }

    #[test]
    fn formats() {
        let t = table();
        assert_eq!(t.to_bfile(), "1 1\n2 4\n3 9\n4 16\n");
        assert_eq!(t.to_csv(), "n,count\n1,1\n2,4\n3,9\n4,16\n");
        let back = CountTable::from_json(&t.to_json(), Provenance::Formula).unwrap();
        assert_eq!(back, t);
        let empty = CountTable::new("e", 0, Vec::new(), Provenance::Oracle);
        assert!(empty.to_json().contains("\"values\": []"));
        assert_eq!(empty.to_bfile(), "");
    }

    #[test]
    fn big_values_survive_json() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let t = CountTable::new("big", 0, vec![big.clone()], Provenance::Series);
        let back = CountTable::from_json(&t.to_json(), Provenance::Series).unwrap();
        assert_eq!(back.values, vec![big]);
    }

    #[test]
    fn lookups() {
        let t = table();
        assert_eq!(t.get(0), None);
        assert_eq!(t.get(3), Some(&BigInt::from(9)));
        assert!(t.require(5).is_err());
        let mut u = t.clone();
        u.values[2] = BigInt::from(10);
        assert_eq!(t.first_mismatch(&u), Some((3, BigInt::from(9), BigInt::from(10))));
    }

    #[test]
    fn oracle_counts() {
        let t = oracle_table(&"122".parse().unwrap(), Class::Modasc, 0, 5, &Caps::default())
            .unwrap();
        let v: Vec<i64> = t.values.into_iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(v, [1, 1, 2, 4, 9, 23]);
        assert!(oracle_table(&"122".parse().unwrap(), Class::Modasc, 0, 11, &Caps::default())
            .is_err());
    }
}
