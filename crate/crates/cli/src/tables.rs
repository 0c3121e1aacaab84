//! Recomputes the single-pattern table and the table of unsolved patterns.

use clap::ValueEnum;
use modasc::counting::{Caps, Family, TABLE1, TABLE2};
use modasc::patterns::count_avoiders;
use modasc::{Class, PatternSet};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::report::Check;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Table1,
    Table2,
}

const CLASSES: [Class; 2] = [Class::Modasc, Class::Prim];

fn oracle(y: &str, class: Class, n_max: usize) -> Vec<u64> {
    let set: PatternSet = y.parse().expect("valid literal pattern");
    (1..=n_max)
        .map(|n| count_avoiders(n, &set, class) as u64)
        .collect()
}

fn list(values: &[u64]) -> String {
    if values.is_empty() {
        return "(no sizes)".into();
    }
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

/// First `n >= 1` where `values` leaves the family.
fn family_mismatch(family: Family, values: &[u64]) -> Option<(usize, u64, BigInt)> {
    (1..=values.len()).find_map(|n| {
        let expected = family.value(n);
        (BigInt::from(values[n - 1]) != expected).then(|| (n, values[n - 1], expected))
    })
}

/// Oracle values of every pattern of a row must coincide; returns them.
fn row_values(patterns: &[&str], class: Class, n_max: usize) -> Result<Vec<u64>, String> {
    let all: Vec<Vec<u64>> = patterns.iter().map(|y| oracle(y, class, n_max)).collect();
    for (y, v) in patterns.iter().zip(&all).skip(1) {
        if let Some(n) = (1..=n_max).find(|&n| v[n - 1] != all[0][n - 1]) {
            return Err(format!(
                "{class}({y}) = {} but {class}({}) = {} at n = {n}",
                v[n - 1],
                patterns[0],
                all[0][n - 1]
            ));
        }
    }
    Ok(all.into_iter().next().unwrap_or_default())
}

pub fn run(which: Which, n_max: usize, caps: &Caps) -> Result<Vec<Check>, CliError> {
    caps.check_oracle(n_max)?;
    let jobs: Vec<(&[&str], Class)> = match which {
        Which::Table1 => TABLE1.iter().flat_map(|r| CLASSES.map(|c| (r.patterns, c))).collect(),
        Which::Table2 => TABLE2.iter().flat_map(|r| CLASSES.map(|c| (r.patterns, c))).collect(),
    };
    let checks = jobs
        .into_par_iter()
        .enumerate()
        .map(|(i, (patterns, class))| {
            let name = format!("{class}({})", patterns.join(","));
            let tag = format!("n <= {n_max}");
            match which {
                Which::Table1 => table1_check(name, tag, &TABLE1[i / 2].family(class), patterns, class, n_max),
                Which::Table2 => table2_checks(name, tag, &TABLE2[i / 2], patterns, class, n_max),
            }
        })
        .collect::<Vec<Vec<Check>>>();
    Ok(checks.into_iter().flatten().collect())
}

fn table1_check(
    name: String,
    tag: String,
    family: &Option<Family>,
    patterns: &[&str],
    class: Class,
    n_max: usize,
) -> Vec<Check> {
    let values = match row_values(patterns, class, n_max) {
        Ok(v) => v,
        Err(w) => return vec![Check::from_outcome(name, tag, Err(w))],
    };
    let check = match family {
        Some(f) => Check::from_outcome(
            name,
            format!("{tag}, {f}"),
            match family_mismatch(*f, &values) {
                None => Ok(list(&values)),
                Some((n, got, expected)) => Err(format!("n = {n}: oracle {got}, {f} gives {expected}")),
            },
        ),
        None => Check::info(name, format!("{tag}, no closed form"), list(&values)),
    };
    vec![check]
}

fn table2_checks(
    name: String,
    tag: String,
    row: &modasc::counting::Table2Row,
    patterns: &[&str],
    class: Class,
    n_max: usize,
) -> Vec<Check> {
    let values = match row_values(patterns, class, n_max) {
        Ok(v) => v,
        Err(w) => return vec![Check::from_outcome(name, tag, Err(w))],
    };
    let mut checks = Vec::new();
    let golden = row.golden(class);
    if !golden.is_empty() {
        let k = golden.len().min(n_max);
        let outcome = match (0..k).find(|&i| values[i] != golden[i]) {
            None => Ok(list(&values[..k])),
            Some(i) => Err(format!("n = {}: oracle {}, printed {}", i + 1, values[i], golden[i])),
        };
        checks.push(Check::from_outcome(name.clone(), format!("printed data, n <= {k}"), outcome));
    }
    if let Some(f) = row.conjecture(class) {
        let verdict = match family_mismatch(f, &values) {
            None => format!("agrees with {f} for {tag}"),
            Some((n, got, expected)) => format!("leaves {f} at n = {n}: {got} vs {expected}"),
        };
        checks.push(Check::info(name.clone(), "conjecture, not asserted", verdict));
    }
    if checks.is_empty() {
        checks.push(Check::info(name, tag, list(&values)));
    }
    checks
}
