use std::collections::BTreeSet;

use scaleshift::substitutions::{substitution_scales, Preset};
use scaleshift::Word;

/// All `n`-factors of a long prefix of the fixed point.
fn factors_of_prefix(p: Preset, n: usize) -> BTreeSet<Word> {
    let prefix = p.morphism().fixed_point_prefix(1 << 14).unwrap();
    prefix
        .letters()
        .windows(n)
        .map(|w| Word(w.to_vec()))
        .collect()
}

#[test]
fn block_languages_are_certified_and_match_long_prefixes() {
    for p in Preset::ALL {
        for n in 1..=16 {
            let lang = p.morphism().block_language(n).unwrap();
            assert!(lang.is_certified(), "{} at n = {n}", p.name());
            assert_eq!(
                lang.blocks,
                factors_of_prefix(p, n),
                "{} at n = {n}",
                p.name()
            );
        }
    }
}

#[test]
fn thue_morse_black_blocks_add_no_scales() {
    let tm = substitution_scales(&Preset::ThueMorse.morphism(), 12).unwrap();
    let white = &tm.per_symbol["∘"];
    assert!(tm.per_symbol["•"].is_subset(white));
    assert_eq!(white.len(), 18);
}

#[test]
fn union_is_deduplicated_per_size() {
    for p in Preset::ALL {
        let s = substitution_scales(&p.morphism(), 12).unwrap();
        let all: BTreeSet<_> = s.per_symbol.values().flatten().cloned().collect();
        assert_eq!(s.union, all);
        assert!(s.union.iter().all(|c| c.size() == 12));
        assert!(s.transversal_dim() <= s.orbital_dim());
    }
}
