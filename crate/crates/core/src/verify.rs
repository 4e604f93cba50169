//! The regression grid behind `scaleshift verify`: published golden mean,
//! wheel and substitution numbers, plus closed forms checked against the
//! brute-force oracles for a family of small shifts.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combinatorics::{Composition, PartSet};
use crate::error::Result;
use crate::oracle::{self, OracleReport, SeriesKind};
use crate::scales;
use crate::shiftspace::{parse_forbidden, VertexShift};
use crate::substitutions::{substitution_scales, Preset};

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn report(
    out: &mut Vec<OracleReport>,
    quantity: &str,
    params: &[(&str, Value)],
    expected: impl ToString,
    actual: impl ToString,
) {
    out.push(OracleReport::new(quantity, params, expected, actual));
}

/// The golden mean, the full 2-shift and the 3-vertex recoding of the
/// `{••, ∘∘∘}` shift.
pub fn builtin_shifts() -> Vec<(&'static str, VertexShift)> {
    let sft = parse_forbidden("••\n∘∘∘\n", None)
        .and_then(|s| s.higher_block())
        .expect("fixed example is valid");
    vec![
        ("golden-mean", VertexShift::golden_mean()),
        ("full-2", VertexShift::full_shift(2)),
        ("example-sft", sft.shift),
    ]
}

fn published(out: &mut Vec<OracleReport>) -> Result<()> {
    let w = scales::wheels_gf(&PartSet::all(), 12)?.integer_coeffs()?;
    report(out, "published:wheels", &[("n", json!(12))], 351, &w[12]);
    report(
        out,
        "published:wheels_prefix",
        &[],
        "1,2,3,5,7,13",
        join(&w[1..=6]),
    );
    let rows = scales::wheels_bgf(&PartSet::all(), 12)?.integer_rows()?;
    report(
        out,
        "published:wheels_by_length",
        &[("n", json!(12))],
        "1,6,19,43,66,80,66,43,19,6,1,1",
        join(&rows[12][1..]),
    );
    let c = scales::composition_gf(&PartSet::all(), 20)?.integer_coeffs()?;
    let powers: Vec<BigInt> = (0..20).map(|k| BigInt::from(1u64 << k)).collect();
    report(
        out,
        "published:compositions",
        &[("n", json!("1..20"))],
        join(&powers),
        join(&c[1..]),
    );

    let g = VertexShift::golden_mean();
    report(
        out,
        "published:golden_zeta",
        &[],
        "1,1,2,3,5,8,13,21,34",
        join(&g.zeta(8).series.integer_coeffs()?),
    );
    report(
        out,
        "published:golden_p",
        &[],
        "1,3,4,7,11,18",
        join(g.periodic_counts(6).values()),
    );
    report(
        out,
        "published:golden_q_over_n",
        &[],
        "1,1,1,1,2,2,4,5,8",
        join(&g.orbit_counts(9)?),
    );
    report(
        out,
        "published:golden_qbar",
        &[],
        "1,2,2,3,3,5,5,8,10",
        join(&g.necklace_counts(9)?),
    );
    let f = g.first_return("∘", 16)?.series.integer_coeffs()?;
    let expect: Vec<i64> = (0..=16).map(|k| i64::from(k == 1 || k == 2)).collect();
    report(
        out,
        "published:golden_f_white",
        &[("order", json!(16))],
        join(&expect),
        join(&f),
    );
    let f = g.first_return("•", 16)?.series.integer_coeffs()?;
    let expect: Vec<i64> = (0..=16).map(|k| i64::from(k >= 2)).collect();
    report(
        out,
        "published:golden_f_black",
        &[("order", json!(16))],
        join(&expect),
        join(&f),
    );
    let d = g.language_dims(9)?;
    report(
        out,
        "published:golden_language_transversal",
        &[],
        "2,2,3,4,5,8",
        join(&d.transversal[..6]),
    );
    report(
        out,
        "published:golden_language_orbital",
        &[],
        "2,3,7,11,21,36,64,111,193",
        join(&d.orbital),
    );

    let white = scales::scale_class(&g, "∘", 12)?;
    let black = scales::scale_class(&g, "•", 12)?;
    report(
        out,
        "published:golden_class_white",
        &[("n", json!(12))],
        233,
        white.at(12).len(),
    );
    report(
        out,
        "published:golden_class_black",
        &[("n", json!(12))],
        144,
        black.at(12).len(),
    );
    let global = scales::global_dims(&g, 12)?;
    let size = |n| global.class_size_at(n).cloned().unwrap_or_default();
    report(
        out,
        "published:golden_class_all",
        &[("n", json!(12))],
        376,
        size(12),
    );
    report(
        out,
        "published:golden_class_all",
        &[("n", json!(5))],
        12,
        size(5),
    );
    let five: Vec<Composition> = [
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
    let five: std::collections::BTreeSet<_> = five.into_iter().collect();
    let got = white.union(&black, "all");
    report(
        out,
        "published:golden_five_tet_set",
        &[],
        join(&five.iter().collect::<Vec<_>>()),
        join(&got.at(5).iter().collect::<Vec<_>>()),
    );

    let dw = scales::symbol_dims(&g, "∘", 12)?;
    let db = scales::symbol_dims(&g, "•", 12)?;
    let loops = g.first_return("•", 12)?;
    let a = scales::a_series(&loops, 12)?.0.integer_coeffs()?;
    let b = scales::b_series(&loops, 12)?.0.integer_coeffs()?;
    let at = |r: &scales::DimReport, n| {
        (
            r.transversal_at(n).cloned().unwrap_or_default(),
            r.orbital_at(n).cloned().unwrap_or_default(),
        )
    };
    report(
        out,
        "published:golden_white_dims",
        &[("n", json!(12))],
        "31/233",
        format!("{}/{}", at(&dw, 12).0, at(&dw, 12).1),
    );
    report(
        out,
        "published:golden_black_a",
        &[("n", json!(12))],
        55,
        &a[12],
    );
    report(
        out,
        "published:golden_black_b",
        &[("n", json!(12))],
        240,
        &b[12],
    );
    report(
        out,
        "published:golden_black_dims",
        &[("n", json!(12))],
        "85/329",
        format!("{}/{}", at(&db, 12).0, at(&db, 12).1),
    );
    report(
        out,
        "published:golden_black_dims",
        &[("n", json!(5))],
        "4/8",
        format!("{}/{}", at(&db, 5).0, at(&db, 5).1),
    );
    report(
        out,
        "published:global",
        &[("n", json!(12))],
        "115/561",
        format!("{}/{}", at(&global, 12).0, at(&global, 12).1),
    );
    report(
        out,
        "published:global",
        &[("n", json!(5))],
        "6/13",
        format!("{}/{}", at(&global, 5).0, at(&global, 5).1),
    );

    let tm = substitution_scales(&Preset::ThueMorse.morphism(), 12)?;
    let fib = substitution_scales(&Preset::Fibonacci.morphism(), 12)?;
    let feig = substitution_scales(&Preset::Feigenbaum.morphism(), 12)?;
    let triple = |s: &crate::substitutions::SubstitutionScales| {
        format!(
            "{}/{}/{}",
            s.union.len(),
            s.transversal_dim(),
            s.orbital_dim()
        )
    };
    report(
        out,
        "published:thue_morse",
        &[("n", json!(12))],
        "18/8/49",
        triple(&tm),
    );
    report(
        out,
        "published:fibonacci_blocks",
        &[("n", json!(12))],
        13,
        fib.block_count(),
    );
    report(
        out,
        "published:fibonacci",
        &[("n", json!(12))],
        "10/66",
        format!("{}/{}", fib.transversal_dim(), fib.orbital_dim()),
    );
    report(
        out,
        "published:feigenbaum",
        &[("n", json!(12))],
        "6/28",
        format!("{}/{}", feig.transversal_dim(), feig.orbital_dim()),
    );
    let sets = [("M", &tm), ("F", &fib), ("G", &feig)];
    for i in 0..3 {
        for j in i + 1..3 {
            let indep = crate::combinatorics::mutually_independent(
                &sets[i].1.transversal(),
                &sets[j].1.transversal(),
            );
            report(
                out,
                "published:mutually_independent",
                &[("pair", json!(format!("{}{}", sets[i].0, sets[j].0)))],
                true,
                indep,
            );
        }
    }

    let h = parse_forbidden("••\n∘∘∘\n", None)?.higher_block()?;
    report(
        out,
        "published:sft_matrix",
        &[],
        "010;001;110",
        h.shift
            .rows()
            .iter()
            .map(|r| join(r).replace(',', ""))
            .collect::<Vec<_>>()
            .join(";"),
    );
    let m = h.shift.first_return_matrix(&["∘∘", "∘•"], 16)?;
    let mono = |k: Option<usize>| {
        let c: Vec<i64> = (0..=16).map(|i| i64::from(Some(i) == k)).collect();
        join(&c)
    };
    for (s, t, k) in [
        ("∘∘", "∘∘", None),
        ("∘∘", "∘•", Some(1)),
        ("∘•", "∘∘", Some(2)),
        ("∘•", "∘•", Some(2)),
    ] {
        let got = join(&m.get(s, t).expect("listed").integer_coeffs()?);
        report(
            out,
            "published:sft_first_return",
            &[("entry", json!(format!("{s}->{t}")))],
            mono(k),
            got,
        );
    }
    Ok(())
}

fn cross_checks(out: &mut Vec<OracleReport>, max_n: usize) -> Result<()> {
    for (name, x) in builtin_shifts() {
        let lang = x.language_dims(max_n)?;
        for n in 1..=max_n.min(oracle::MAX_WORD_LEN) {
            let (t, o) = oracle::oracle_language_dims(&x, n)?;
            let p = [("shift", json!(name)), ("n", json!(n))];
            report(
                out,
                "language_transversal",
                &p,
                t,
                lang.transversal_at(n).expect("in range"),
            );
            report(
                out,
                "language_orbital",
                &p,
                o,
                lang.orbital_at(n).expect("in range"),
            );
        }
        for s in x.alphabet().symbols() {
            let loops = x.first_return(s, max_n)?;
            for k in 1..=max_n.min(oracle::MAX_LOOP_LEN) {
                let p = [
                    ("shift", json!(name)),
                    ("symbol", json!(s)),
                    ("k", json!(k)),
                ];
                report(
                    out,
                    "first_return",
                    &p,
                    oracle::oracle_first_return(&x, s, k)?,
                    loops.series.coeff(k),
                );
            }
            let dims = scales::symbol_dims(&x, s, max_n)?;
            for n in 1..=max_n.min(oracle::MAX_WORD_LEN) {
                let (t, o) = oracle::oracle_scale_dims(&oracle::oracle_scale_class(&x, s, n)?);
                let p = [
                    ("shift", json!(name)),
                    ("symbol", json!(s)),
                    ("n", json!(n)),
                ];
                report(
                    out,
                    "symbol_transversal",
                    &p,
                    t,
                    dims.transversal_at(n).expect("in range"),
                );
                report(
                    out,
                    "symbol_orbital",
                    &p,
                    o,
                    dims.orbital_at(n).expect("in range"),
                );
            }
        }
        let global = scales::global_dims(&x, max_n)?;
        for n in 1..=max_n.min(oracle::MAX_WORD_LEN) {
            let (t, o) = oracle::oracle_scale_dims(&oracle::oracle_global_class(&x, n)?);
            let p = [("shift", json!(name)), ("n", json!(n))];
            report(
                out,
                "global_transversal",
                &p,
                t,
                global.transversal_at(n).expect("in range"),
            );
            report(
                out,
                "global_orbital",
                &p,
                o,
                global.orbital_at(n).expect("in range"),
            );
        }
    }
    for spec in ["all", "1,2", "2..", "1,3", "2,3,5"] {
        let parts: PartSet = spec.parse()?;
        let c = scales::composition_gf(&parts, max_n)?;
        let w = scales::wheels_gf(&parts, max_n)?;
        for n in 1..=max_n.min(oracle::MAX_COMPOSITION_SIZE) {
            let p = [("parts", json!(spec)), ("n", json!(n))];
            report(
                out,
                "compositions",
                &p,
                oracle::oracle_series_coeff(SeriesKind::Compositions, &parts, n, None)?,
                c.coeff(n),
            );
            report(
                out,
                "wheels",
                &p,
                oracle::oracle_series_coeff(SeriesKind::Wheels, &parts, n, None)?,
                w.coeff(n),
            );
        }
    }
    Ok(())
}

/// Runs the published-number checks and the oracle grid up to `max_n`.
pub fn regression_suite(max_n: usize) -> Result<Vec<OracleReport>> {
    let mut out = Vec::new();
    published(&mut out)?;
    cross_checks(&mut out, max_n.max(1))?;
    Ok(out)
}
