//! Exploratory comparisons on the unsolved patterns. Results are reported,
//! never asserted.

use clap::ValueEnum;
use modasc::counting::{special_series, Caps, Family, IntSeries, SpecialSeries, TABLE2};
use modasc::patterns::{count_avoiders, equal_avoidance_classes, Equivalence};
use modasc::{Class, PatternSet};
use num_bigint::BigInt;

use crate::report::Check;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Modasc_122(t) against (1 - t) Modasc_211(t).
    #[value(name = "modasc122-vs-211")]
    Modasc122Vs211,
    /// Counts and sets of avoiders of 211 and of 1223.
    #[value(name = "211-vs-1223")]
    Vs1223,
    /// Oracle counts against the tentative families of the unsolved patterns.
    #[value(name = "conjectures")]
    Conjectures,
}

fn pats(s: &str) -> PatternSet {
    s.parse().expect("valid literal pattern")
}

pub fn run(which: Experiment, order: usize, caps: &Caps) -> Result<Vec<Check>, CliError> {
    let known = order.min(caps.oracle);
    let checks = match which {
        Experiment::Modasc122Vs211 => {
            let m122 = special_series(SpecialSeries::ModascOgf122, order + 1)?;
            let diff = &IntSeries::from_i64s(&[1, -1], order + 1) * &m122;
            let oracle: Vec<BigInt> = (0..=known)
                .map(|n| BigInt::from(count_avoiders(n, &pats("211"), Class::Modasc)))
                .collect();
            let conj = Family::OrderedPartitionTransform;
            let literal = (0..=known)
                .find(|&n| diff.coeff(n) != &oracle[n])
                .map(|n| format!("differ at n = {n}: {} vs {}", diff.coeff(n), oracle[n]))
                .unwrap_or_else(|| format!("agree for n <= {known}"));
            let shifted = |upto: usize, value: &dyn Fn(usize) -> BigInt| {
                (1..=upto)
                    .find(|&n| diff.coeff(n + 1) != &value(n))
                    .map(|n| format!("differ at n = {n}: {} vs {}", diff.coeff(n + 1), value(n)))
                    .unwrap_or_else(|| format!("agree for 1 <= n <= {upto}"))
            };
            vec![
                Check::info("modasc122", format!("order {order}"), m122.truncate(order).to_string()),
                Check::info(
                    "(1-t)modasc122",
                    format!("order {order}"),
                    diff.truncate(order).to_string(),
                ),
                Check::info(
                    "literal",
                    format!("[t^n] (1-t) Modasc_122 = |Modasc_n(211)|, oracle n <= {known}"),
                    literal,
                ),
                Check::info(
                    "shifted",
                    format!("[t^(n+1)] (1-t) Modasc_122 = |Modasc_n(211)|, oracle n <= {known}"),
                    shifted(known, &|n| oracle[n].clone()),
                ),
                Check::info(
                    "shifted-conjectured",
                    format!("same, with |Modasc_n(211)| taken as {conj}, n <= {order}"),
                    shifted(order, &|n| conj.value(n)),
                ),
            ]
        }
        Experiment::Vs1223 => [Class::Modasc, Class::Prim]
            .into_iter()
            .flat_map(|class| {
                let counts = (0..=known)
                    .find_map(|n| {
                        let a = count_avoiders(n, &pats("211"), class);
                        let b = count_avoiders(n, &pats("1223"), class);
                        (a != b).then(|| format!("n = {n}: {a} vs {b}"))
                    })
                    .unwrap_or_else(|| format!("equal for n <= {known}"));
                let sets = match equal_avoidance_classes(&pats("211"), &pats("1223"), class, known) {
                    Equivalence::Equal { n_max } => format!("same avoiders for n <= {n_max}"),
                    Equivalence::Differ { n, witness, avoids_first } => {
                        let side = if avoids_first { "211" } else { "1223" };
                        format!("first differ at n = {n}: {witness} avoids only {side}")
                    }
                };
                [
                    Check::info(format!("|{class}(211)| vs |{class}(1223)|"), "counts", counts),
                    Check::info(format!("{class}(211) vs {class}(1223)"), "sets", sets),
                ]
            })
            .collect(),
        Experiment::Conjectures => {
            let mut checks = Vec::new();
            for row in TABLE2 {
                for class in [Class::Modasc, Class::Prim] {
                    let Some(f) = row.conjecture(class) else { continue };
                    for y in row.patterns {
                        let detail = (1..=known)
                            .find_map(|n| {
                                let got = BigInt::from(count_avoiders(n, &pats(y), class));
                                let expected = f.value(n);
                                (got != expected).then(|| format!("n = {n}: {got} vs {expected}"))
                            })
                            .unwrap_or_else(|| format!("agrees for n <= {known}"));
                        checks.push(Check::info(format!("{class}({y})"), format!("{f}?"), detail));
                    }
                }
            }
            checks
        }
    };
    Ok(checks)
}
