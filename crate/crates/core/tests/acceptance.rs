//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion; every
//! comparison is exact equality of integers or integer sets.

use std::collections::BTreeSet;
use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scaleshift::combinatorics::{Composition, PartSet};
use scaleshift::numtheory::{divisor_sum, divisors, mobius, mobius_invert, totient, ArithSequence};
use scaleshift::oracle;
use scaleshift::scales;
use scaleshift::shiftspace::parse_forbidden;
use scaleshift::substitutions::{substitution_scales, Preset};
use scaleshift::{VertexShift, Word};

/// Collected mismatches of one criterion.
#[derive(Default)]
struct Check(Vec<String>);

impl Check {
    fn eq<A: PartialEq<B> + Display, B: Display>(&mut self, what: &str, expected: A, actual: B) {
        if expected != actual {
            self.0
                .push(format!("{what}: expected {expected}, got {actual}"));
        }
    }

    fn holds(&mut self, what: impl Into<String>, ok: bool) {
        if !ok {
            self.0.push(what.into());
        }
    }
}

type Outcome = scaleshift::Result<Check>;

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn wheels() -> Outcome {
    let mut c = Check::default();
    let w = scales::wheels_gf(&PartSet::all(), 12)?.integer_coeffs()?;
    c.eq("W_12", "351", w[12].to_string());
    c.eq("W prefix", "1,2,3,5,7,13", join(&w[1..=6]));
    let rows = scales::wheels_bgf(&PartSet::all(), 12)?.integer_rows()?;
    c.eq(
        "W_12 by length",
        "1,6,19,43,66,80,66,43,19,6,1,1",
        join(&rows[12][1..]),
    );
    Ok(c)
}

fn compositions() -> Outcome {
    let mut c = Check::default();
    let got = scales::composition_gf(&PartSet::all(), 20)?.integer_coeffs()?;
    for n in 1..=20 {
        c.eq(&format!("C_{n}"), BigInt::one() << (n - 1), got[n].clone());
    }
    Ok(c)
}

fn golden_closed_forms() -> Outcome {
    let mut c = Check::default();
    let g = VertexShift::golden_mean();
    let zeta = g.zeta(16);
    c.eq("det(I - zA)", "1,-1,-1", join(zeta.determinant.iter()));
    let expect = scaleshift::RationalFunction::from_i64s(&[1], &[1, -1, -1])?.expand(16);
    c.holds("zeta = 1/(1 - z - z^2)", zeta.series == expect);
    c.eq(
        "p prefix",
        "1,3,4,7,11,18",
        join(g.periodic_counts(6).values()),
    );
    c.eq(
        "q bar prefix",
        "1,2,2,3,3,5,5,8,10",
        join(g.necklace_counts(9)?),
    );
    let white = g.first_return("∘", 16)?.series.integer_coeffs()?;
    c.eq(
        "f white",
        join((0..=16).map(|k| u8::from(k == 1 || k == 2))),
        join(&white),
    );
    let black = g.first_return("•", 16)?.series.integer_coeffs()?;
    c.eq(
        "f black",
        join((0..=16).map(|k| u8::from(k >= 2))),
        join(&black),
    );
    Ok(c)
}

fn least_rotation(w: &[usize]) -> Vec<usize> {
    (0..w.len().max(1))
        .map(|j| [&w[j..], &w[..j]].concat())
        .min()
        .unwrap_or_default()
}

fn golden_language() -> Outcome {
    let mut c = Check::default();
    let g = VertexShift::golden_mean();
    let d = g.language_dims(9)?;
    c.eq("dim_T prefix", "2,2,3,4,5,8", join(&d.transversal[..6]));
    c.eq(
        "dim_O prefix",
        "2,3,7,11,21,36,64,111,193",
        join(&d.orbital),
    );
    // One representative per rotation class of L_n, as listed for n = 1..6.
    let witnesses: [&[&str]; 6] = [
        &["∘", "•"],
        &["∘∘", "∘•"],
        &["∘∘∘", "∘∘•", "•∘•"],
        &["∘∘∘∘", "∘∘∘•", "∘•∘•", "•∘∘•"],
        &["∘∘∘∘∘", "∘∘∘∘•", "∘∘•∘•", "•∘∘∘•", "•∘•∘•"],
        &[
            "∘∘∘∘∘∘",
            "∘∘∘∘∘•",
            "∘∘∘•∘•",
            "∘∘•∘∘•",
            "∘•∘•∘•",
            "•∘∘∘∘•",
            "•∘∘•∘•",
            "•∘•∘∘•",
        ],
    ];
    for (i, set) in witnesses.iter().enumerate() {
        let n = i + 1;
        let language = g.language(n)?;
        let words: Vec<Word> = set
            .iter()
            .map(|s| g.alphabet().parse_word(s))
            .collect::<scaleshift::Result<_>>()?;
        c.holds(
            format!("witnesses of L_{n} are admissible"),
            words.iter().all(|w| language.contains(w)),
        );
        let mine: BTreeSet<Vec<usize>> =
            words.iter().map(|w| least_rotation(w.letters())).collect();
        c.holds(
            format!("witnesses of L_{n} are pairwise non-conjugate"),
            mine.len() == words.len(),
        );
        let all: BTreeSet<Vec<usize>> = language
            .iter()
            .map(|w| least_rotation(w.letters()))
            .collect();
        c.holds(
            format!("witnesses of L_{n} meet every rotation class"),
            mine == all,
        );
    }
    Ok(c)
}

fn golden_scale_classes() -> Outcome {
    let mut c = Check::default();
    let g = VertexShift::golden_mean();
    let white = scales::scale_class(&g, "∘", 12)?;
    let black = scales::scale_class(&g, "•", 12)?;
    let all = white.union(&black, "all");
    c.eq("#C(X,∘)_12", 233, white.at(12).len());
    c.eq("#C(X,•)_12", 144, black.at(12).len());
    c.eq("#C(X)_12", 376, all.at(12).len());
    c.eq("#C(X)_5", 12, all.at(5).len());
    let five: BTreeSet<Composition> = [
        &[1, 1, 1, 1, 1][..],
        &[1, 1, 1, 2],
        &[1, 1, 2, 1],
        &[1, 2, 1, 1],
        &[2, 1, 1, 1],
        &[1, 2, 2],
        &[2, 1, 2],
        &[2, 2, 1],
        &[5],
        &[4, 1],
        &[3, 2],
        &[2, 3],
    ]
    .iter()
    .map(|p| Composition::from_slice(p))
    .collect();
    c.holds("C(X)_5 is the listed 12-element set", all.at(5) == &five);
    Ok(c)
}

fn golden_dimensions() -> Outcome {
    let mut c = Check::default();
    let g = VertexShift::golden_mean();
    let pair = |r: &scaleshift::DimReport, n| {
        format!(
            "{}/{}",
            r.transversal_at(n).unwrap(),
            r.orbital_at(n).unwrap()
        )
    };
    c.eq(
        "∘ at 12",
        "31/233",
        pair(&scales::symbol_dims(&g, "∘", 12)?, 12),
    );
    let loops = g.first_return("•", 12)?;
    c.eq(
        "a_12",
        "55",
        scales::a_series(&loops, 12)?.0.integer_coeffs()?[12].to_string(),
    );
    c.eq(
        "b_12",
        "240",
        scales::b_series(&loops, 12)?.0.integer_coeffs()?[12].to_string(),
    );
    c.eq(
        "• at 12",
        "85/329",
        pair(&scales::symbol_dims(&g, "•", 12)?, 12),
    );
    let global = scales::global_dims(&g, 12)?;
    c.eq("global at 12", "115/561", pair(&global, 12));
    c.eq("global at 5", "6/13", pair(&global, 5));
    Ok(c)
}

fn substitutions() -> Outcome {
    let mut c = Check::default();
    let tm = substitution_scales(&Preset::ThueMorse.morphism(), 12)?;
    let fib = substitution_scales(&Preset::Fibonacci.morphism(), 12)?;
    let feig = substitution_scales(&Preset::Feigenbaum.morphism(), 12)?;
    c.eq(
        "Thue-Morse #M/dim_T/dim_O",
        "18/8/49",
        format!(
            "{}/{}/{}",
            tm.union.len(),
            tm.transversal_dim(),
            tm.orbital_dim()
        ),
    );
    c.eq("Fibonacci blocks", 13, fib.block_count());
    c.eq(
        "Fibonacci dim_T/dim_O",
        "10/66",
        format!("{}/{}", fib.transversal_dim(), fib.orbital_dim()),
    );
    c.eq(
        "Feigenbaum dim_T/dim_O",
        "6/28",
        format!("{}/{}", feig.transversal_dim(), feig.orbital_dim()),
    );
    let sets = [
        ("M", tm.transversal()),
        ("F", fib.transversal()),
        ("G", feig.transversal()),
    ];
    for i in 0..3 {
        for j in i + 1..3 {
            let ok = scaleshift::combinatorics::mutually_independent(&sets[i].1, &sets[j].1);
            c.holds(
                format!("{} and {} mutually independent", sets[i].0, sets[j].0),
                ok,
            );
        }
    }
    Ok(c)
}

/// Parts in {1,2}, the given first part, and no two adjacent 1s except
/// possibly the final pair.
fn example_pattern(parts: &[usize], first: usize) -> bool {
    let m = parts.len();
    parts.iter().all(|&p| p == 1 || p == 2)
        && parts.first() == Some(&first)
        && (0..m.saturating_sub(1)).all(|i| !(parts[i] == 1 && parts[i + 1] == 1) || i + 2 == m)
}

fn sft_example() -> Outcome {
    let mut c = Check::default();
    let h = parse_forbidden("••\n∘∘∘\n", None)?.higher_block()?;
    let rows: Vec<String> = h.shift.rows().iter().map(join).collect();
    c.eq("higher block matrix", "0,1,0;0,0,1;1,1,0", rows.join(";"));
    let m = h.shift.first_return_matrix(&["∘∘", "∘•"], 16)?;
    for (s, t, k) in [
        ("∘∘", "∘∘", None),
        ("∘∘", "∘•", Some(1)),
        ("∘•", "∘∘", Some(2)),
        ("∘•", "∘•", Some(2)),
    ] {
        let got = m.get(s, t).expect("listed").integer_coeffs()?;
        c.eq(
            &format!("{s}->{t}"),
            join((0..=16).map(|i| u8::from(Some(i) == k))),
            join(&got),
        );
    }
    let set = ["∘∘", "∘•"];
    for (start, first) in [("∘∘", 1), ("∘•", 2)] {
        let class = scales::distinguished_set_scales_from(&h.shift, &set, start, 12)?;
        // At n = 1 the single part is the truncated last gap, so the first
        // part rule cannot apply; both starts give exactly (1).
        c.eq(
            &format!("{start}-start scales at n = 1"),
            "(1)",
            join(class.at(1)),
        );
        for n in 2..=12 {
            for comp in class.at(n) {
                c.holds(
                    format!("{start}-start scale {comp} at n = {n}"),
                    example_pattern(comp.parts(), first),
                );
            }
        }
    }
    Ok(c)
}

/// Every vertex shift on at most three symbols whose graph is irreducible.
fn small_irreducible() -> Vec<VertexShift> {
    (1..=3)
        .flat_map(VertexShift::all_on)
        .filter(VertexShift::is_irreducible)
        .collect()
}

fn properties() -> Outcome {
    let mut c = Check::default();
    // (a) closed forms against brute force.
    let shifts = small_irreducible();
    c.holds("some irreducible shifts exist", !shifts.is_empty());
    for x in &shifts {
        let label = x.rows().iter().map(join).collect::<Vec<_>>().join(";");
        let lang = x.language_dims(10)?;
        for n in 1..=10 {
            let (t, o) = oracle::oracle_language_dims(x, n)?;
            c.eq(
                &format!("[{label}] language dims at {n}"),
                format!("{t}/{o}"),
                format!(
                    "{}/{}",
                    lang.transversal_at(n).unwrap(),
                    lang.orbital_at(n).unwrap()
                ),
            );
        }
        for s in x.alphabet().symbols() {
            let dims = scales::symbol_dims(x, s, 10)?;
            for n in 1..=10 {
                let (t, o) = oracle::oracle_scale_dims(&oracle::oracle_scale_class(x, s, n)?);
                c.eq(
                    &format!("[{label}] symbol {s} dims at {n}"),
                    format!("{t}/{o}"),
                    format!(
                        "{}/{}",
                        dims.transversal_at(n).unwrap(),
                        dims.orbital_at(n).unwrap()
                    ),
                );
            }
        }
    }
    // (b) wheel counts are integers for arbitrary finite part sets.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1e);
    for _ in 0..200 {
        let mask: u8 = rng.gen();
        let parts = PartSet::finite((1..=8).filter(|k| mask >> (k - 1) & 1 == 1));
        let w = scales::wheels_gf(&parts, 32)?;
        c.holds(
            format!("wheels over mask {mask:#010b} integral"),
            w.is_integral(),
        );
    }
    // (c) arithmetic identities.
    for n in 1..=200u64 {
        let ds = divisors(n)?;
        let phi: u64 = ds
            .iter()
            .map(|&d| totient(d))
            .sum::<scaleshift::Result<u64>>()?;
        c.eq(&format!("sum phi(d), d | {n}"), n, phi);
        let mu: i64 = ds
            .iter()
            .map(|&d| mobius(d).map(i64::from))
            .sum::<scaleshift::Result<i64>>()?;
        c.eq(&format!("sum mu(d), d | {n}"), i64::from(n == 1), mu);
    }
    let q = ArithSequence::new(
        (1..=60)
            .map(|k: i64| BigInt::from(k * k - 7 * k + 3))
            .collect(),
    )?;
    c.holds(
        "mobius_invert . divisor_sum = id",
        mobius_invert(&divisor_sum(&q)) == q,
    );
    c.holds(
        "divisor_sum . mobius_invert = id",
        divisor_sum(&mobius_invert(&q)) == q,
    );
    // (d) bivariate tables sum to the univariate series.
    for spec in ["all", "1,2", "2..", "1,3", "2,3,5"] {
        let parts: PartSet = spec.parse()?;
        for (uni, bi) in [
            (
                scales::composition_gf(&parts, 24)?,
                scales::composition_bgf(&parts, 24)?,
            ),
            (
                scales::wheels_gf(&parts, 24)?,
                scales::wheels_bgf(&parts, 24)?,
            ),
        ] {
            c.holds(format!("row sums for parts {spec}"), bi.at_u_one() == uni);
        }
    }
    let g = VertexShift::golden_mean();
    let mut reports = vec![scales::global_dims(&g, 12)?];
    for x in shifts.iter().chain([&g]) {
        for s in x.alphabet().symbols() {
            reports.push(scales::symbol_dims(x, s, 12)?);
            reports.push(scales::scale_class(x, s, 10)?.dims());
        }
    }
    for r in &reports {
        c.holds(
            format!("consistency of a {} report", r.method.as_str()),
            r.check_consistency().is_ok(),
        );
        c.holds(
            "report carries bivariate tables",
            r.bivariate_transversal.is_some() && r.bivariate_orbital.is_some(),
        );
    }
    // Bivariate symbol tables agree with brute force per length.
    for s in ["∘", "•"] {
        let dims = scales::symbol_dims(&g, s, 10)?;
        for n in 1..=10 {
            let (t, o) =
                oracle::oracle_scale_dims_by_length(&oracle::oracle_scale_class(&g, s, n)?, n);
            let i = n - dims.min_n;
            let bt = &dims.bivariate_transversal.as_ref().unwrap()[i];
            let bo = &dims.bivariate_orbital.as_ref().unwrap()[i];
            c.eq(
                &format!("{s} transversal by length at {n}"),
                join(&t),
                join(&bt[..=n]),
            );
            c.eq(
                &format!("{s} orbital by length at {n}"),
                join(&o),
                join(&bo[..=n]),
            );
            c.holds(
                format!("{s} tables vanish past n at {n}"),
                bt[n + 1..].iter().chain(&bo[n + 1..]).all(Zero::is_zero),
            );
        }
    }
    Ok(c)
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("wheels of size 12 and the by-length row", wheels),
        ("compositions C_n = 2^(n-1) for n <= 20", compositions),
        (
            "golden mean zeta, periodic points, necklaces, first returns",
            golden_closed_forms,
        ),
        (
            "golden mean language dimensions and witness sets",
            golden_language,
        ),
        ("golden mean scale classes", golden_scale_classes),
        (
            "golden mean symbol and global dimensions",
            golden_dimensions,
        ),
        ("Thue-Morse, Fibonacci and Feigenbaum scales", substitutions),
        ("forbidden-block example", sft_example),
        ("property suites against the oracles", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let problems = match run() {
            Ok(c) => c.0,
            Err(e) => vec![format!("error: {e}")],
        };
        if problems.is_empty() {
            println!("PASS {:>2} {name}", i + 1);
        } else {
            failed += 1;
            println!("FAIL {:>2} {name}", i + 1);
            for p in problems.iter().take(10) {
                println!("        {p}");
            }
        }
    }
    println!(
        "SKIP 10 asymptotic and limiting-distribution claims (out of scope, nothing asserted)"
    );
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
