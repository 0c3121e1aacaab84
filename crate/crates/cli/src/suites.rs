//! The invariant suites behind `verify`.

use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use modasc::counting::{
    ascent_distribution, bell, binomial, binomial_transform_count, catalan, d_series, dudu_count,
    f_series, g_series, modasc_221, modasc_221_by_active_sites, motzkin, ogf_substitute, p_table,
    power_sum_122, prim_122, special_series, stirling2, stirling_identity_sides,
    wrlmin_distribution_prim_221, Caps, CountTable, IntSeries, Provenance, SpecialSeries, TABLE1,
};
use modasc::lattice::{avoids_dudu, generate_dudu_avoiders};
use modasc::maps::{
    all_compositions, all_perms, all_set_partitions, claesson, claesson_inverse,
    composition_to_modasc112, modasc112_to_composition, modasc122_to_partition, omega_to_prim,
    omega_to_prim_by_chains, partition_to_modasc122, phi_312, phi_inverse, standardize,
};
use modasc::patterns::{
    avoiders, contains, contains_special, count_avoiders, equal_avoidance_classes, omega_perms,
    Equivalence,
};
use modasc::seqcore::{collapse_flats, generate, has_flat_step, insert_flats};
use modasc::{CayleyPattern, Class, DyckPath, PatternSet, Perm, SetPartition, SpecialPattern, Word};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::report::{Check, Outcome};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bijections,
    Transport,
    Equivalences,
    Identities,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

const SERIES_ORDER: usize = 20;

type Item = (String, String, Box<dyn Fn() -> Outcome + Send + Sync>);

fn item(
    name: &str,
    tag: impl Into<String>,
    f: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Item {
    (name.to_string(), tag.into(), Box::new(f))
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn pats(s: &str) -> PatternSet {
    s.parse().expect("valid literal pattern list")
}

fn err(e: modasc::Error) -> String {
    e.to_string()
}

/// Runs `suite` at size `n`, items in parallel, results in declaration order.
pub fn run(suite: Suite, n: usize, caps: &Caps) -> Result<Vec<Check>, CliError> {
    let items = match suite {
        Suite::Bijections => {
            caps.check_oracle(n)?;
            bijections(n)
        }
        Suite::Transport => {
            caps.check_oracle(n)?;
            transport(n)
        }
        Suite::Equivalences => {
            caps.check_oracle(n)?;
            equivalences(n)
        }
        Suite::Identities => {
            caps.check_paths(n)?;
            identities(n, caps)
        }
        Suite::All => {
            caps.check_oracle(n)?;
            caps.check_paths(n)?;
            let mut all = bijections(n);
            all.extend(transport(n));
            all.extend(equivalences(n));
            all.extend(identities(n, caps));
            all
        }
    };
    Ok(items
        .into_par_iter()
        .map(|(name, tag, f)| Check::from_outcome(name, tag, f()))
        .collect())
}

fn bijections(n_max: usize) -> Vec<Item> {
    vec![
        item("flats", format!("Modasc_n <-> flat-free core with multiplicities, n <= {n_max}"), move || {
            for n in 1..=n_max {
                let words = generate(Class::Modasc, n);
                for x in &words {
                    let d = collapse_flats(x).map_err(err)?;
                    ensure(insert_flats(&d) == *x, || format!("{x} does not survive collapse"))?;
                }
                let transform: BigInt = (1..=n)
                    .map(|k| binomial(n as i64 - 1, k as i64 - 1) * generate(Class::Prim, k).len())
                    .sum();
                ensure(transform == BigInt::from(words.len()), || {
                    format!("|Modasc_{n}| = {} but the binomial transform gives {transform}", words.len())
                })?;
            }
            Ok(format!("roundtrip and binomial transform, n <= {n_max}"))
        }),
        item("composition-112", format!("Modasc_n(112) <-> compositions of n, n <= {n_max}"), move || {
            for n in 1..=n_max {
                let words = avoiders(n, &pats("112"), Class::Modasc);
                let mut image = BTreeSet::new();
                for x in &words {
                    let c = modasc112_to_composition(x).map_err(err)?;
                    ensure(composition_to_modasc112(&c) == *x, || format!("{x} -> {c} -> ?"))?;
                    image.insert(c);
                }
                let all: BTreeSet<_> = all_compositions(n).into_iter().collect();
                ensure(image == all, || format!("image differs from the compositions of {n}"))?;
            }
            Ok(format!("n <= {n_max}"))
        }),
        item("partition-122", format!("Modasc_n(122) <-> partitions with minima 1..k, n <= {n_max}"), move || {
            for n in 1..=n_max {
                let words = avoiders(n, &pats("122"), Class::Modasc);
                let mut image = BTreeSet::new();
                for x in &words {
                    let beta = modasc122_to_partition(x).map_err(err)?;
                    ensure(partition_to_modasc122(&beta).ok().as_ref() == Some(x), || {
                        format!("{x} -> {beta} -> ?")
                    })?;
                    image.insert(beta);
                }
                let all: BTreeSet<SetPartition> = all_set_partitions(n)
                    .into_iter()
                    .filter(|b| b.minima().iter().enumerate().all(|(i, &m)| m == i + 1))
                    .collect();
                ensure(image == all, || format!("image differs from the target partitions of [{n}]"))?;
            }
            Ok(format!("n <= {n_max}"))
        }),
        item("phi-312", format!("Prim_(n+1)(312) <-> dudu-avoiding paths of semilength n, n + 1 <= {n_max}"), move || {
            for n in 0..n_max {
                let words = avoiders(n + 1, &pats("312"), Class::Prim);
                let mut image = BTreeSet::new();
                for x in &words {
                    let p = phi_312(x).map_err(err)?;
                    ensure(p.semilength() == n && avoids_dudu(&p), || format!("phi({x}) = {p}"))?;
                    ensure(phi_inverse(&p).ok().as_ref() == Some(x), || format!("{x} -> {p} -> ?"))?;
                    image.insert(p);
                }
                let paths: BTreeSet<DyckPath> = generate_dudu_avoiders(n).into_iter().collect();
                ensure(image == paths, || format!("image differs from the paths of semilength {n}"))?;
            }
            Ok(format!("n + 1 <= {n_max}"))
        }),
        item("claesson", format!("partitions of [n] <-> Sym_n(32-1), n <= {n_max}"), move || {
            for n in 0..=n_max {
                let mut image = BTreeSet::new();
                for beta in all_set_partitions(n) {
                    let p = claesson(&beta);
                    let descents = p.entries().windows(2).filter(|w| w[0] > w[1]).count();
                    ensure(descents == beta.non_singleton_blocks(), || {
                        format!("{beta} -> {p}: {descents} descents")
                    })?;
                    ensure(claesson_inverse(&p).ok().as_ref() == Some(&beta), || {
                        format!("{beta} -> {p} -> ?")
                    })?;
                    image.insert(p);
                }
                let avoiders: BTreeSet<Perm> = all_perms(n)
                    .into_par_iter()
                    .filter(|p| !contains_special(p, SpecialPattern::Vincular321))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .collect();
                ensure(image == avoiders, || format!("image differs from Sym_{n}(32-1)"))?;
            }
            Ok(format!("n <= {n_max}"))
        }),
    ]
}

fn transport(n_max: usize) -> Vec<Item> {
    let mut items = vec![item("standardization", format!("st: Prim_n <-> Omega_n, n <= {n_max}"), move || {
        for n in 0..=n_max {
            let prim = generate(Class::Prim, n);
            let mut image = BTreeSet::new();
            for x in &prim {
                let p = standardize(x).map_err(err)?;
                ensure(omega_to_prim(&p).ok().as_ref() == Some(x), || format!("{x} -> {p} -> ?"))?;
                image.insert(p);
            }
            let omega: BTreeSet<Perm> = omega_perms(n).into_iter().collect();
            ensure(image.len() == prim.len(), || format!("st is not injective at n = {n}"))?;
            ensure(image == omega, || format!("st(Prim_{n}) differs from Omega_{n}"))?;
            for p in &omega {
                let (a, b) = (omega_to_prim(p).map_err(err)?, omega_to_prim_by_chains(p).map_err(err)?);
                ensure(a == b, || format!("inverses disagree on {p}: {a} vs {b}"))?;
            }
        }
        Ok(format!("bijection and both inverses, n <= {n_max}"))
    })];
    for y in ["213", "231"] {
        items.push(item(
            &format!("omega-{y}"),
            format!("|Prim_n({y})| = |Omega_n({y})| = motzkin(n-1), n <= {n_max}"),
            move || {
                let pattern: CayleyPattern = y.parse().unwrap();
                for n in 1..=n_max {
                    let prim = count_avoiders(n, &pats(y), Class::Prim);
                    let omega = omega_perms(n).iter().filter(|p| !contains(p.as_word(), &pattern)).count();
                    ensure(prim == omega && BigInt::from(prim) == motzkin(n - 1), || {
                        format!("n = {n}: Prim {prim}, Omega {omega}, motzkin {}", motzkin(n - 1))
                    })?;
                }
                Ok(format!("n <= {n_max}"))
            },
        ));
    }
    items.push(item("prim-321", format!("|Prim_n(321)| = catalan(n-1), n <= {n_max}"), move || {
        for n in 1..=n_max {
            let c = count_avoiders(n, &pats("321"), Class::Prim);
            ensure(BigInt::from(c) == catalan(n - 1), || format!("n = {n}: {c}"))?;
        }
        Ok(format!("n <= {n_max}"))
    }));
    items
}

/// Pairs of pattern sets with the same avoiders.
pub const EQUIVALENCES: &[(&str, &str, Class)] = &[
    ("21", "121", Class::Modasc),
    ("213", "1213", Class::Modasc),
    ("312", "1312", Class::Modasc),
    ("212", "1212", Class::Modasc),
    ("212", "2132", Class::Modasc),
    ("212", "12132", Class::Modasc),
    ("122", "1232", Class::Prim),
    ("221", "2321", Class::Prim),
    ("212,213", "213", Class::Prim),
    ("221,231", "231", Class::Prim),
];

fn equivalences(n_max: usize) -> Vec<Item> {
    EQUIVALENCES
        .iter()
        .map(|&(a, b, class)| {
            item(
                &format!("{class}({a})={class}({b})"),
                format!("extensional equality, n <= {n_max}"),
                move || match equal_avoidance_classes(&pats(a), &pats(b), class, n_max) {
                    Equivalence::Equal { n_max } => Ok(format!("equal for n <= {n_max}")),
                    Equivalence::Differ { n, witness, avoids_first } => {
                        let side = if avoids_first { a } else { b };
                        Err(format!("n = {n}: {witness} avoids only {side}"))
                    }
                },
            )
        })
        .collect()
}

fn identities(n_max: usize, caps: &Caps) -> Vec<Item> {
    let oracle_n = n_max.min(caps.oracle);
    vec![
        item("stirling", format!("S(n, n-h) = sum C(n-1, n-i) p(i-1, i-1-h), 0 <= h < n <= {n_max}"), move || {
            let p = p_table(n_max, n_max).map_err(err)?;
            let mut cases = 0;
            for n in 1..=n_max {
                for h in 0..n {
                    let (lhs, rhs) = stirling_identity_sides(n, h, &p);
                    ensure(lhs == rhs, || format!("(n, h) = ({n}, {h}): {lhs} vs {rhs}"))?;
                    cases += 1;
                }
            }
            for n in 0..=n_max {
                ensure(p.row_sum(n) == bell(n), || format!("row {n} sums to {}", p.row_sum(n)))?;
            }
            Ok(format!("{cases} cases; rows of p sum to Bell"))
        }),
        item("f-two-forms", format!("both forms of F agree to order {SERIES_ORDER}"), || {
            f_series(SERIES_ORDER).map_err(err)?;
            Ok(format!("order {SERIES_ORDER}"))
        }),
        item("prim-122-series", format!("(1+t)F = sum (k-1)! S(n-k+1, k), order {SERIES_ORDER}"), || {
            let f = f_series(SERIES_ORDER).map_err(err)?;
            let lhs = &IntSeries::from_i64s(&[1, 1], SERIES_ORDER) * &f;
            let g = g_series(SERIES_ORDER);
            for n in 0..=SERIES_ORDER {
                ensure(lhs.coeff(n) == &prim_122(n), || format!("[t^{n}]: {} vs {}", lhs.coeff(n), prim_122(n)))?;
                ensure(g.coeff(n) == &prim_122(n + 1), || format!("[t^{n}]G = {}", g.coeff(n)))?;
            }
            Ok(format!("order {SERIES_ORDER}, and G is the shifted series"))
        }),
        item("modasc-122-series", format!("sum t^k/(1-kt) = sum k^(n-k), order {SERIES_ORDER}"), || {
            let s = special_series(SpecialSeries::ModascOgf122, SERIES_ORDER).map_err(err)?;
            for n in 0..=SERIES_ORDER {
                ensure(s.coeff(n) == &power_sum_122(n), || format!("[t^{n}] = {}", s.coeff(n)))?;
            }
            Ok(format!("order {SERIES_ORDER}"))
        }),
        item("transform", format!("binomial transform of Prim counts = substitution t -> t/(1-t), order {SERIES_ORDER}"), || {
            let mut rows = 0;
            for row in TABLE1 {
                let Some(prim) = row.prim else { continue };
                let table = CountTable::tabulate("prim", 0, SERIES_ORDER, Provenance::Formula, |n| prim.value(n));
                let series = IntSeries::from_coeffs(table.values.iter().cloned(), SERIES_ORDER);
                let full = ogf_substitute(&series, SERIES_ORDER).map_err(err)?;
                let primitive = row.patterns.iter().any(|y| {
                    !has_flat_step(&y.parse::<Word>().expect("valid literal pattern"))
                });
                for n in 0..=SERIES_ORDER {
                    let t = binomial_transform_count(&table, n).map_err(err)?;
                    ensure(full.coeff(n) == &t, || format!("{} at n = {n}", row.patterns[0]))?;
                    if let (true, Some(modasc)) = (primitive, row.modasc) {
                        ensure(t == modasc.value(n), || format!("{} at n = {n}: {t} vs {modasc}", row.patterns[0]))?;
                    }
                }
                rows += 1;
            }
            Ok(format!("{rows} table rows"))
        }),
        item("motzkin", format!("M = 1 + tM + t^2 M^2 gives the Motzkin numbers, order {SERIES_ORDER}"), || {
            let m = special_series(SpecialSeries::MotzkinEq, SERIES_ORDER).map_err(err)?;
            for n in 0..=SERIES_ORDER {
                ensure(m.coeff(n) == &motzkin(n), || format!("[t^{n}] = {}", m.coeff(n)))?;
            }
            Ok(format!("order {SERIES_ORDER}"))
        }),
        item("dudu", format!("[t^n]D = dudu-avoiding paths = d_n, n <= {n_max}"), move || {
            let d = d_series(n_max).map_err(err)?;
            for n in 0..=n_max {
                let paths = BigInt::from(generate_dudu_avoiders(n).len());
                ensure(d.coeff(n) == &paths && dudu_count(n) == paths, || {
                    format!("n = {n}: series {}, paths {paths}, sum {}", d.coeff(n), dudu_count(n))
                })?;
            }
            let m312 = special_series(SpecialSeries::Modasc312, SERIES_ORDER).map_err(err)?;
            let prefix = [1, 1, 2, 5, 14, 43, 142, 495, 1796, 6715, 25692].map(BigInt::from);
            ensure(m312.coeffs()[..prefix.len()] == prefix, || format!("Modasc312 series starts {m312}"))?;
            Ok(format!("n <= {n_max}; Modasc312 series matches the printed prefix"))
        }),
        item("bell-2321", format!("|Modasc_n(2321)| = bell(n), asc histogram S(n, n-h), n <= {oracle_n}"), move || {
            let y = pats("2321");
            for n in 0..=oracle_n {
                let hist = ascent_distribution(&y, Class::Modasc, n);
                let total: BigInt = hist.values().sum();
                ensure(total == bell(n), || format!("n = {n}: {total} words"))?;
                for (&h, c) in &hist {
                    ensure(h < n.max(1) && *c == stirling2(n, n - h), || format!("n = {n}, asc = {h}: {c}"))?;
                }
            }
            Ok(format!("n <= {oracle_n}"))
        }),
        item("active-sites-221", format!("weighted insertion counts Modasc_n(221), n <= {oracle_n}"), move || {
            for n in 0..=oracle_n {
                let by_sites = modasc_221_by_active_sites(n).map_err(err)?;
                let oracle = BigInt::from(count_avoiders(n, &pats("221"), Class::Modasc));
                ensure(by_sites == oracle && oracle == modasc_221(n), || {
                    format!("n = {n}: sites {by_sites}, oracle {oracle}, formula {}", modasc_221(n))
                })?;
                let dist = wrlmin_distribution_prim_221(n);
                for (i, d) in dist.iter().enumerate().skip(1).take(n) {
                    ensure(*d == stirling2(n - 1, i - 1), || format!("k = {n}, i = {i}: {d}"))?;
                }
            }
            Ok(format!("n <= {oracle_n}; wrlmin on Prim_k(221) is S(k-1, i-1)"))
        }),
    ]
}
