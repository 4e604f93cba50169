use std::fs;
use std::path::Path;
use std::process::ExitCode;

use scaleshift::combinatorics::{self, Composition, PartSet};
use scaleshift::scales::{self, DimReport};
use scaleshift::shiftspace::{parse_forbidden, Alphabet, VertexShift, Word};
use scaleshift::substitutions::{substitution_scales, Morphism, Preset};
use scaleshift::verify::regression_suite;
use serde_json::{json, Value};

use crate::{
    CmdResult, Failure, Format, PresetName, RunConfig, SftArgs, SubstArgs, VerifyArgs, VertexArgs,
    VertexWhat, WheelsArgs,
};

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::data(format!("cannot read {}: {e}", path.display())))
}

fn emit(config: &RunConfig, value: &Value, text: impl FnOnce() -> String) {
    match config.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("plain data serializes")
        ),
        Format::Text => print!("{}", text()),
    }
}

fn csv<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

pub fn wheels(config: &RunConfig, args: &WheelsArgs) -> CmdResult {
    let parts: PartSet = args.parts.parse().map_err(|e: scaleshift::Error| Failure {
        code: 2,
        message: e.to_string(),
    })?;
    let n = args.n;
    let total = scales::wheels_gf(&parts, n)?.integer_coeffs()?[n].clone();
    let by_length = if args.by_length {
        Some(scales::wheels_bgf(&parts, n)?.integer_rows()?[n][1..].to_vec())
    } else {
        None
    };
    let mut value = json!({"n": n, "parts": parts.to_string(), "wheels": total.to_string()});
    if let Some(row) = &by_length {
        value["by_length"] = json!(strings(row));
    }
    emit(config, &value, || {
        let mut out = format!("{total}\n");
        if let Some(row) = &by_length {
            out.push_str(&format!("{}\n", csv(row)));
        }
        out
    });
    Ok(ExitCode::SUCCESS)
}

fn load_matrix(args: &VertexArgs) -> Result<VertexShift, Failure> {
    Ok(VertexShift::parse(&read(&args.matrix)?)?)
}

fn dims_text(report: &DimReport) -> String {
    let mut out = String::from("n\ttransversal\torbital");
    if report.class_sizes.is_some() {
        out.push_str("\tscales");
    }
    out.push('\n');
    for n in report.min_n..=report.max_n() {
        out.push_str(&format!(
            "{n}\t{}\t{}",
            report.transversal_at(n).expect("in range"),
            report.orbital_at(n).expect("in range")
        ));
        if let Some(size) = report.class_size_at(n) {
            out.push_str(&format!("\t{size}"));
        }
        out.push('\n');
    }
    for (name, table) in [
        ("transversal", &report.bivariate_transversal),
        ("orbital", &report.bivariate_orbital),
    ] {
        if let Some(rows) = table {
            out.push_str(&format!("{name} by number of parts (m = 0..n):\n"));
            for (i, row) in rows.iter().enumerate() {
                out.push_str(&format!("{}\t{}\n", report.min_n + i, csv(row)));
            }
        }
    }
    out
}

fn dims_json(report: &DimReport, bivariate: bool) -> Value {
    let mut r = report.clone();
    if !bivariate {
        r.bivariate_transversal = None;
        r.bivariate_orbital = None;
    }
    r.to_json()
}

pub fn vertex(config: &RunConfig, what: VertexWhat, args: &VertexArgs) -> CmdResult {
    let x = load_matrix(args)?;
    let order = args.order;
    match what {
        VertexWhat::Zeta => {
            let zeta = x.zeta(order);
            let det = strings(&zeta.determinant);
            let coeffs = zeta.series.integer_coeffs()?;
            let p = x.periodic_counts(order);
            let q = x.minimal_periodic_counts(order);
            let orbits = x.orbit_counts(order)?;
            let necklaces = x.necklace_counts(order)?;
            let value = json!({
                "determinant": det,
                "zeta": strings(&coeffs),
                "periodic_points": strings(p.values()),
                "least_period_points": strings(q.values()),
                "least_period_orbits": strings(&orbits),
                "orbits_dividing": strings(&necklaces),
            });
            emit(config, &value, || {
                format!(
                    "det(I - zA): {}\nzeta: {}\np_n: {}\nq_n: {}\nq_n/n: {}\nsum_(k|n) q_k/k: {}\n",
                    csv(&zeta.determinant),
                    csv(&coeffs),
                    csv(p.values()),
                    csv(q.values()),
                    csv(&orbits),
                    csv(&necklaces)
                )
            });
        }
        VertexWhat::Loops => {
            let symbols: Vec<String> = match &args.symbol {
                Some(s) => vec![s.clone()],
                None => x.alphabet().symbols().to_vec(),
            };
            let loops = symbols
                .iter()
                .map(|s| x.first_return(s, order))
                .collect::<Result<Vec<_>, _>>()?;
            let value = Value::Array(
                loops
                    .iter()
                    .map(|l| {
                        json!({
                            "symbol": l.symbol,
                            "series": strings(l.series.integer_coeffs().unwrap_or_default()),
                            "support": l.support,
                            "support_unbounded": l.support_unbounded,
                            "support_max": l.support_max,
                        })
                    })
                    .collect(),
            );
            emit(config, &value, || {
                loops
                    .iter()
                    .map(|l| {
                        let bound = match (l.support_unbounded, l.support_max) {
                            (true, _) => "unbounded".to_string(),
                            (false, Some(m)) => format!("max {m}"),
                            (false, None) => "empty".to_string(),
                        };
                        format!(
                            "f^({}) = {}\nK({}) = {{{}}} ({bound})\n",
                            l.symbol,
                            l.series,
                            l.symbol,
                            csv(&l.support)
                        )
                    })
                    .collect()
            });
        }
        VertexWhat::Dims => {
            let report = match &args.symbol {
                Some(s) => scales::symbol_dims(&x, s, order)?,
                None => x.language_dims(order)?,
            };
            emit(config, &dims_json(&report, args.bivariate), || {
                let shown = if args.bivariate {
                    report.clone()
                } else {
                    DimReport {
                        bivariate_transversal: None,
                        bivariate_orbital: None,
                        ..report.clone()
                    }
                };
                dims_text(&shown)
            });
        }
        VertexWhat::Global => {
            let report = scales::global_dims_capped(&x, order, config.cap)?;
            emit(config, &dims_json(&report, args.bivariate), || {
                let shown = if args.bivariate {
                    report.clone()
                } else {
                    DimReport {
                        bivariate_transversal: None,
                        bivariate_orbital: None,
                        ..report.clone()
                    }
                };
                dims_text(&shown)
            });
        }
        VertexWhat::Language => {
            let starts: Vec<usize> = match &args.symbol {
                Some(s) => vec![x.symbol_index(s)?],
                None => (0..x.size()).collect(),
            };
            let mut words = Vec::new();
            x.for_each_word(&starts, order, config.cap, |w| {
                words.push(x.alphabet().render(&Word(w.to_vec())))
            })?;
            let value = json!({"n": order, "count": words.len(), "words": words});
            emit(config, &value, || {
                format!("{} words\n{}\n", words.len(), words.join("\n"))
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn class_rows(class: &scales::ScaleClass) -> Vec<Value> {
    class
        .by_size
        .iter()
        .map(|(n, set)| {
            json!({
                "n": n,
                "count": set.len(),
                "transversal": combinatorics::transversal_dim(set),
                "orbital": combinatorics::orbital_dim(set),
                "compositions": set,
            })
        })
        .collect()
}

pub fn sft_scales(config: &RunConfig, args: &SftArgs) -> CmdResult {
    let alphabet = args
        .alphabet
        .as_deref()
        .map(|a| Alphabet::new(a.split_whitespace()))
        .transpose()?;
    let sft = parse_forbidden(&read(&args.forbidden)?, alphabet.as_ref())?;
    let h = sft.higher_block()?;
    let names = h.shift.alphabet().symbols().to_vec();
    let set: Vec<String> = match &args.set {
        Some(s) => s.iter().map(|t| t.trim().to_string()).collect(),
        None => names
            .iter()
            .zip(&h.labels)
            .filter(|(_, &l)| l == 0)
            .map(|(n, _)| n.clone())
            .collect(),
    };
    let set_refs: Vec<&str> = set.iter().map(String::as_str).collect();
    let matrix = h.shift.first_return_matrix(&set_refs, args.order)?;
    let mut classes = Vec::new();
    for start in &set_refs {
        classes.push(scales::distinguished_set_scales_from_capped(
            &h.shift, &set_refs, start, args.order, config.cap,
        )?);
    }
    let mut first_return = serde_json::Map::new();
    for (i, s) in matrix.symbols.iter().enumerate() {
        for (j, t) in matrix.symbols.iter().enumerate() {
            first_return.insert(
                format!("{s}->{t}"),
                json!(strings(&matrix.entries[i][j].integer_coeffs()?)),
            );
        }
    }
    let value = json!({
        "step": h.step,
        "vertices": names,
        "matrix": h.shift.rows(),
        "set": set,
        "first_return": first_return,
        "scales": classes.iter().map(|c| (c.symbol.clone(), Value::Array(class_rows(c)))).collect::<serde_json::Map<_, _>>(),
    });
    emit(config, &value, || {
        let mut out = format!(
            "higher block presentation, M = {}\n{}",
            h.step,
            h.shift.to_text()
        );
        out.push_str("first return matrix:\n");
        for (i, s) in matrix.symbols.iter().enumerate() {
            for (j, t) in matrix.symbols.iter().enumerate() {
                out.push_str(&format!("  {s} -> {t}: {}\n", matrix.entries[i][j]));
            }
        }
        for c in &classes {
            out.push_str(&format!("scales starting at {}:\n", c.symbol));
            for (n, set) in &c.by_size {
                out.push_str(&format!(
                    "  n={n}: {} scales, dim_T {}, dim_O {}: {}\n",
                    set.len(),
                    combinatorics::transversal_dim(set),
                    combinatorics::orbital_dim(set),
                    set.iter()
                        .map(Composition::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
        }
        out
    });
    Ok(ExitCode::SUCCESS)
}

pub fn subst_scales(config: &RunConfig, args: &SubstArgs) -> CmdResult {
    let m = match (&args.preset, &args.rules) {
        (_, Some(path)) => Morphism::from_json(&read(path)?)?,
        (Some(p), None) => match p {
            PresetName::ThueMorse => Preset::ThueMorse,
            PresetName::Fibonacci => Preset::Fibonacci,
            PresetName::Feigenbaum => Preset::Feigenbaum,
        }
        .morphism(),
        (None, None) => unreachable!("clap requires one of --preset and --rules"),
    };
    let s = substitution_scales(&m, args.n)?;
    let transversal = s.transversal();
    let per_symbol: serde_json::Map<String, Value> = s
        .per_symbol
        .iter()
        .map(|(sym, set)| {
            let (t, o) = s.symbol_dims(sym).expect("listed");
            (
                sym.clone(),
                json!({"scales": set, "transversal": t, "orbital": o}),
            )
        })
        .collect();
    let value = json!({
        "n": args.n,
        "blocks": s.block_count(),
        "scales": s.union,
        "transversal_set": transversal,
        "transversal": s.transversal_dim(),
        "orbital": s.orbital_dim(),
        "per_symbol": per_symbol,
        "certificate": s.language.trace.iter().map(|(i, len, c)| json!({"iterate": i, "length": len, "blocks": c})).collect::<Vec<_>>(),
    });
    emit(config, &value, || {
        let show = |set: &std::collections::BTreeSet<Composition>| {
            set.iter()
                .map(Composition::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("{} blocks of length {}\n", s.block_count(), args.n);
        for (sym, set) in &s.per_symbol {
            let (t, o) = s.symbol_dims(sym).expect("listed");
            out.push_str(&format!(
                "from {sym}: {} scales, dim_T {t}, dim_O {o}: {}\n",
                set.len(),
                show(set)
            ));
        }
        out.push_str(&format!("all: {} scales\n", s.union.len()));
        out.push_str(&format!("transversal: {}\n", show(&transversal)));
        out.push_str(&format!(
            "dim_T {}\ndim_O {}\n",
            s.transversal_dim(),
            s.orbital_dim()
        ));
        out
    });
    Ok(ExitCode::SUCCESS)
}

pub fn verify(config: &RunConfig, args: &VerifyArgs) -> CmdResult {
    let reports = regression_suite(args.max_n)?;
    let failed = reports.iter().filter(|r| !r.matched).count();
    for r in &reports {
        match config.format {
            Format::Json => println!("{}", r.to_json_line()),
            Format::Text => {
                let params = csv(r.parameters.iter().map(|(k, v)| format!("{k}={v}")));
                let status = if r.matched { "ok  " } else { "FAIL" };
                println!(
                    "{status} {} [{params}] expected {} got {}",
                    r.quantity, r.expected, r.actual
                );
            }
        }
    }
    eprintln!("{} checks, {} failed", reports.len(), failed);
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
