//! Comparing computed prefixes with OEIS b-files.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use num_bigint::BigInt;
use serde_json::json;

use crate::{CmdResult, Failure, Format, OeisArgs, RunConfig};

/// Parses b-file text: `n a(n)` per line, `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, Failure> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let bad = || Failure::data(format!("malformed b-file line `{l}`"));
            let n = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            Ok((n, a))
        })
        .collect()
}

/// Index `n` of the first term of the earliest run of `terms` equal to
/// `want`.
pub fn find_window(terms: &[(i64, BigInt)], want: &[BigInt]) -> Option<i64> {
    if want.is_empty() || want.len() > terms.len() {
        return None;
    }
    terms
        .windows(want.len())
        .find(|w| w.iter().map(|(_, a)| a).eq(want.iter()))
        .map(|w| w[0].0)
}

fn fetch(id: &str) -> Result<String, String> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let agent = ureq::AgentBuilder::new()
        .timeout(Duration::from_secs(10))
        .build();
    agent
        .get(&url)
        .call()
        .map_err(|e| e.to_string())?
        .into_string()
        .map_err(|e| e.to_string())
}

fn snapshot(dir: &Path, id: &str) -> Result<String, Failure> {
    let path = dir.join("oeis").join(format!("{id}.txt"));
    fs::read_to_string(&path)
        .map_err(|e| Failure::data(format!("no snapshot for {id} at {}: {e}", path.display())))
}

pub fn check(config: &RunConfig, args: &OeisArgs) -> CmdResult {
    let id = args.id.trim().to_ascii_uppercase();
    if id.len() != 7 || !id.starts_with('A') || !id[1..].bytes().all(|b| b.is_ascii_digit()) {
        return Err(Failure {
            code: 2,
            message: format!("`{}` is not an OEIS id like A000358", args.id),
        });
    }
    let want = args
        .coeffs
        .iter()
        .map(|c| c.trim().parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure {
            code: 2,
            message: format!("bad coefficient list: {e}"),
        })?;
    let (text, source) = if args.offline {
        (snapshot(&config.fixtures, &id)?, "snapshot")
    } else {
        match fetch(&id) {
            Ok(text) => (text, "oeis.org"),
            Err(e) => {
                eprintln!("warning: fetching {id} failed ({e}); using the bundled snapshot");
                (snapshot(&config.fixtures, &id)?, "snapshot")
            }
        }
    };
    let terms = parse_bfile(&text)?;
    let found = find_window(&terms, &want);
    let value = json!({
        "id": id,
        "source": source,
        "match": found.is_some(),
        "offset": found,
        "terms_checked": want.len(),
    });
    match config.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("plain data serializes")
        ),
        Format::Text => match found {
            Some(n) => println!(
                "match: {} terms of {id} from n = {n} ({source})",
                want.len()
            ),
            None => println!("mismatch: the terms do not occur consecutively in {id} ({source})"),
        },
    }
    Ok(if found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
