//! Acceptance suite. Every criterion prints one `PASS` or `FAIL` line; the
//! process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use num_bigint::BigInt;

use modasc::counting::{
    bell, binomial_transform_count, catalan, closed_counts, d_series, dudu_count, f_series,
    ogf_substitute, p_table, power_sum_122, prim_122, special_series, stirling2,
    stirling_identity_sides, ascent_distribution, CountTable, IntSeries, Provenance,
    SpecialSeries, TABLE1, TABLE2,
};
use modasc::lattice::{avoids_dudu, generate_dudu_avoiders};
use modasc::maps::{
    burge_fishburn, claesson, modasc122_to_partition, omega_to_prim, omega_to_prim_by_chains,
    phi_312, phi_inverse, standardize, TieBreak,
};
use modasc::patterns::{
    avoiders, contains, count_avoiders, equal_avoidance_classes, omega_perms, Equivalence,
};
use modasc::seqcore::{collapse_flats, generate, has_flat_step, insert_flats};
use modasc::{CayleyPattern, Class, DyckPath, PatternSet, Perm, SetPartition, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pats(s: &str) -> PatternSet {
    s.parse().expect("valid pattern list")
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word")
}

fn perm(s: &str) -> Perm {
    s.parse().expect("valid permutation")
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table1() -> Outcome {
    let mut checked = 0;
    let mut reported = Vec::new();
    for row in TABLE1 {
        for class in [Class::Modasc, Class::Prim] {
            for n in 1..=9 {
                let counts: Vec<usize> = row
                    .patterns
                    .iter()
                    .map(|y| count_avoiders(n, &pats(y), class))
                    .collect();
                check(counts.iter().all(|&c| c == counts[0]), || {
                    format!("{class}({}) at n = {n}: row members disagree {counts:?}", row.patterns.join(","))
                })?;
                let Some(family) = row.family(class) else {
                    continue;
                };
                let expected = family.value(n);
                check(BigInt::from(counts[0]) == expected, || {
                    format!(
                        "{class}({}) at n = {n}: oracle {} but {family} gives {expected}",
                        row.patterns[0], counts[0]
                    )
                })?;
                let y: CayleyPattern = row.patterns[0].parse().unwrap();
                check(closed_counts(&y, class, n).ok() == Some(expected), || {
                    format!("closed_counts({y}, {class}, {n}) disagrees with {family}")
                })?;
                checked += 1;
            }
            if row.family(class).is_none() {
                reported.push(format!("{class}({})", row.patterns[0]));
            }
        }
    }
    Ok(format!(
        "{checked} (row, class, n) counts match; data only for {}",
        reported.join(", ")
    ))
}

fn oracle_values(y: &str, class: Class, ns: std::ops::RangeInclusive<usize>) -> Vec<u64> {
    ns.map(|n| count_avoiders(n, &pats(y), class) as u64).collect()
}

fn printed_sequences() -> Outcome {
    let m312 = oracle_values("312", Class::Modasc, 0..=10);
    check(m312 == [1, 1, 2, 5, 14, 43, 142, 495, 1796, 6715, 25692], || {
        format!("Modasc(312), n = 0..10: {m312:?}")
    })?;
    let m221 = oracle_values("221", Class::Modasc, 0..=8);
    check(m221 == [1, 1, 2, 5, 14, 44, 155, 607, 2617], || {
        format!("Modasc(221), n = 0..8: {m221:?}")
    })?;
    let mut rows = 0;
    for row in TABLE2 {
        for class in [Class::Modasc, Class::Prim] {
            let golden = row.golden(class);
            if golden.is_empty() {
                continue;
            }
            for y in row.patterns {
                let got = oracle_values(y, class, 1..=golden.len());
                check(got == golden, || format!("{class}({y}): {got:?} vs {golden:?}"))?;
                rows += 1;
            }
        }
    }
    Ok(format!("Modasc(312) n <= 10, Modasc(221) n <= 8, {rows} golden rows"))
}

fn transport() -> Outcome {
    for n in 0..=9 {
        let prim = generate(Class::Prim, n);
        let mut image = BTreeSet::new();
        for x in &prim {
            let p = standardize(x).map_err(|e| format!("st({x}): {e}"))?;
            let back = omega_to_prim(&p).map_err(|e| format!("inverse of {p}: {e}"))?;
            check(&back == x, || format!("omega_to_prim(st({x})) = {back}"))?;
            image.insert(p);
        }
        check(image.len() == prim.len(), || format!("st not injective at n = {n}"))?;
        let omega: BTreeSet<Perm> = omega_perms(n).into_iter().collect();
        check(image == omega, || format!("st(Prim_{n}) differs from Omega_{n}"))?;
        for p in &omega {
            let x = omega_to_prim(p).map_err(|e| format!("{p}: {e}"))?;
            let y = omega_to_prim_by_chains(p).map_err(|e| format!("{p}: {e}"))?;
            check(x == y, || format!("the two inverses disagree on {p}: {x} vs {y}"))?;
            check(standardize(&x).ok().as_ref() == Some(p), || format!("st({x}) != {p}"))?;
        }
        for y in ["213", "231"] {
            let pattern: CayleyPattern = y.parse().unwrap();
            let lhs = count_avoiders(n, &pats(y), Class::Prim);
            let rhs = omega.iter().filter(|p| !contains(p.as_word(), &pattern)).count();
            check(lhs == rhs, || format!("|Prim_{n}({y})| = {lhs}, |Omega_{n}({y})| = {rhs}"))?;
        }
        if n >= 1 {
            let c = count_avoiders(n, &pats("321"), Class::Prim);
            check(BigInt::from(c) == catalan(n - 1), || format!("|Prim_{n}(321)| = {c}"))?;
        }
    }
    Ok("st: Prim_n <-> Omega_n and derived counts, n <= 9".into())
}

fn phi() -> Outcome {
    let y = pats("312");
    for n in 0..=9 {
        let mut image = BTreeSet::new();
        let words = avoiders(n + 1, &y, Class::Prim);
        for x in &words {
            let p = phi_312(x).map_err(|e| format!("phi({x}): {e}"))?;
            check(p.semilength() == n && avoids_dudu(&p), || {
                format!("phi({x}) = {p} is not a dudu-avoider of semilength {n}")
            })?;
            let back = phi_inverse(&p).map_err(|e| format!("phi^-1({p}): {e}"))?;
            check(&back == x, || format!("phi^-1(phi({x})) = {back}"))?;
            image.insert(p);
        }
        check(image.len() == words.len(), || format!("phi not injective at n = {n}"))?;
        let paths: BTreeSet<DyckPath> = generate_dudu_avoiders(n).into_iter().collect();
        check(image == paths, || format!("phi image differs from the paths at n = {n}"))?;
    }
    let worked = phi_312(&word("123432561761897")).map_err(|e| e.to_string())?;
    check(worked.to_string() == "uuududduuudddduududduuuddudd", || {
        format!("worked example gives {worked}")
    })?;
    Ok("Prim_{n+1}(312) <-> dudu-avoiding paths, n <= 9; worked example exact".into())
}

fn bell_case() -> Outcome {
    check(bell(10) == BigInt::from(115975), || "bell(10)".into())?;
    let y = pats("2321");
    for n in 0..=10 {
        let c = count_avoiders(n, &y, Class::Modasc);
        check(BigInt::from(c) == bell(n), || format!("|Modasc_{n}(2321)| = {c}"))?;
        let hist = ascent_distribution(&y, Class::Modasc, n);
        for h in 0..n {
            let got = hist.get(&h).cloned().unwrap_or_default();
            check(got == stirling2(n, n - h), || {
                format!("n = {n}, asc = {h}: {got} vs S({n}, {})", n - h)
            })?;
        }
        check(hist.keys().all(|&h| h < n.max(1)), || format!("stray ascent count at n = {n}"))?;
    }
    Ok("|Modasc_n(2321)| = bell(n) and asc histogram = S(n, n-h), n <= 10".into())
}

fn series() -> Outcome {
    const ORDER: usize = 20;
    let f = f_series(ORDER).map_err(|e| e.to_string())?;
    let one_plus_t = IntSeries::from_i64s(&[1, 1], ORDER);
    let prim122 = special_series(SpecialSeries::PrimOgf122, ORDER).map_err(|e| e.to_string())?;
    check(prim122 == &one_plus_t * &f, || "Prim_122 != (1+t)F".into())?;
    let modasc122 = special_series(SpecialSeries::ModascOgf122, ORDER).map_err(|e| e.to_string())?;
    for n in 0..=ORDER {
        check(prim122.coeff(n) == &prim_122(n), || format!("[t^{n}] Prim_122"))?;
        check(modasc122.coeff(n) == &power_sum_122(n), || format!("[t^{n}] Modasc_122"))?;
    }
    for n in 0..=9 {
        let (p, m) = (
            count_avoiders(n, &pats("122"), Class::Prim),
            count_avoiders(n, &pats("122"), Class::Modasc),
        );
        check(prim122.coeff(n) == &BigInt::from(p), || format!("Prim_{n}(122) oracle {p}"))?;
        check(modasc122.coeff(n) == &BigInt::from(m), || format!("Modasc_{n}(122) oracle {m}"))?;
    }

    let mut patterns = 0;
    for row in TABLE1 {
        let Some(prim) = row.prim else { continue };
        let table = CountTable::tabulate("prim", 0, ORDER, Provenance::Formula, |n| prim.value(n));
        let series = IntSeries::from_coeffs(table.values.iter().cloned(), ORDER);
        let substituted = ogf_substitute(&series, ORDER).map_err(|e| e.to_string())?;
        let primitive_pattern = row.patterns.iter().any(|y| !has_flat_step(&word(y)));
        for n in 0..=ORDER {
            let transform = binomial_transform_count(&table, n).map_err(|e| e.to_string())?;
            check(substituted.coeff(n) == &transform, || {
                format!("transform vs substitution for {} at n = {n}", row.patterns[0])
            })?;
            if let (true, Some(full)) = (primitive_pattern, row.modasc) {
                check(transform == full.value(n), || {
                    format!("transform of Prim({}) vs {full} at n = {n}", row.patterns[0])
                })?;
            }
        }
        patterns += 1;
    }

    let d = d_series(12).map_err(|e| e.to_string())?;
    for n in 0..=12 {
        let paths = generate_dudu_avoiders(n).len();
        check(d.coeff(n) == &BigInt::from(paths) && dudu_count(n) == BigInt::from(paths), || {
            format!("n = {n}: [t^n]D = {}, paths = {paths}, sum = {}", d.coeff(n), dudu_count(n))
        })?;
    }
    Ok(format!(
        "F forms, (1+t)F, Modasc_122 to order {ORDER}; transform = substitution for {patterns} rows; D = paths = d_n, n <= 12"
    ))
}

fn equivalences() -> Outcome {
    let cases = [
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
    for (a, b, class) in cases {
        match equal_avoidance_classes(&pats(a), &pats(b), class, 9) {
            Equivalence::Equal { .. } => {}
            Equivalence::Differ { n, witness, avoids_first } => {
                let side = if avoids_first { a } else { b };
                return Err(format!("{class}({a}) vs {class}({b}) at n = {n}: {witness} avoids only {side}"));
            }
        }
    }
    Ok(format!("{} class equalities, n <= 9", cases.len()))
}

fn stirling_identity() -> Outcome {
    let p = p_table(12, 12).map_err(|e| e.to_string())?;
    for n in 0..=12 {
        check(p.row_sum(n) == bell(n), || format!("row {n} of p sums to {}", p.row_sum(n)))?;
    }
    let mut cases = 0;
    for n in 1..=12 {
        for h in 0..n {
            let (lhs, rhs) = stirling_identity_sides(n, h, &p);
            check(lhs == rhs, || format!("(n, h) = ({n}, {h}): {lhs} vs {rhs}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases 0 <= h < n <= 12; rows sum to Bell"))
}

fn micro_examples() -> Outcome {
    let st = |s: &str| standardize(&word(s)).map_err(|e| e.to_string());
    check(st("312112341")? == perm("715236894"), || "st(312112341)".into())?;
    check(st("1312")? == perm("1423"), || "st(1312)".into())?;
    let b = burge_fishburn(&word("1312"), TieBreak::Ascending).map_err(|e| e.to_string())?;
    check(b == perm("1342"), || format!("burge(1312) = {b}"))?;
    let x = word("1113122224211");
    let d = collapse_flats(&x).map_err(|e| e.to_string())?;
    check(d.primitive() == &word("1312421"), || format!("collapse gives {}", d.primitive()))?;
    check(insert_flats(&d) == x, || "flat reinsertion".into())?;
    let beta = modasc122_to_partition(&word("134112561")).map_err(|e| e.to_string())?;
    check(beta.to_string() == "{1,6,7}{2}{3,5,8,9}{4}", || format!("134112561 -> {beta}"))?;
    let beta: SetPartition = "{1,3,6}{2,7}{4}{5,8,9}".parse().map_err(|e| format!("{e}"))?;
    check(claesson(&beta) == perm("361724895"), || format!("Claesson gives {}", claesson(&beta)))?;
    let p = perm("1,11,12,14,2,5,3,7,13,8,6,4,10,9");
    let x = word("1,5,6,8,1,2,1,3,7,3,2,1,4,3");
    check(standardize(&x).ok() == Some(p.clone()), || "st of the chain example".into())?;
    check(omega_to_prim(&p).ok() == Some(x), || "inverse of the chain example".into())?;
    Ok("standardization, Burge, flats, partitions, Claesson and the chain example".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("single-pattern table reproduction", table1),
        ("printed sequences", printed_sequences),
        ("transport", transport),
        ("phi bijection", phi),
        ("Bell case of 2321", bell_case),
        ("series identities", series),
        ("equivalence suite", equivalences),
        ("Stirling identity", stirling_identity),
        ("worked micro-examples", micro_examples),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(witness) => {
                failed += 1;
                println!("FAIL {} {name}: {witness}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
