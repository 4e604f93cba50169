//! Iterated morphisms and the scales carried by their fixed points.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{self, Composition};
use crate::error::{Error, Result};
use crate::scales::induced_scale;
use crate::shiftspace::{Alphabet, Word};

/// Iterations allowed before block-language stabilization is abandoned.
pub const STABILIZATION_CAP: usize = 30;
/// Longest iterate that will be generated.
pub const MAX_ITERATE_LEN: usize = 1 << 20;

/// A substitution with a prolongable seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    rules: Vec<Word>,
    seed: usize,
}

/// The file form of a morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismConfig {
    pub alphabet: Vec<String>,
    pub rules: BTreeMap<String, String>,
    pub seed: String,
}

/// Built-in morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    ThueMorse,
    Fibonacci,
    Feigenbaum,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::ThueMorse, Preset::Fibonacci, Preset::Feigenbaum];

    pub fn name(self) -> &'static str {
        match self {
            Preset::ThueMorse => "thue-morse",
            Preset::Fibonacci => "fibonacci",
            Preset::Feigenbaum => "feigenbaum",
        }
    }

    pub fn from_name(name: &str) -> Result<Preset> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::Parse(format!("unknown preset `{name}`")))
    }

    pub fn morphism(self) -> Morphism {
        let (a, b, seed) = match self {
            Preset::ThueMorse => ("∘•", "•∘", "∘"),
            Preset::Fibonacci => ("∘•", "∘", "∘"),
            Preset::Feigenbaum => ("••", "•∘", "•"),
        };
        let alphabet = Alphabet::binary();
        let rules = vec![
            alphabet.parse_word(a).expect("valid"),
            alphabet.parse_word(b).expect("valid"),
        ];
        let seed = alphabet.index_of(seed).expect("valid");
        Morphism::new(alphabet, rules, seed).expect("presets are prolongable")
    }
}

/// The `n`-blocks of a fixed point with the iteration record that
/// certifies them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLanguage {
    pub n: usize,
    pub blocks: BTreeSet<Word>,
    /// `(iteration, iterate length, number of n-blocks)` for each iterate
    /// long enough to hold an `n`-block.
    pub trace: Vec<(usize, usize, usize)>,
}

impl BlockLanguage {
    /// The last two trace entries agree and the final iterate has length at
    /// least `4n`.
    pub fn is_certified(&self) -> bool {
        match self.trace.as_slice() {
            [.., (_, _, a), (_, len, b)] => a == b && *b == self.blocks.len() && *len >= 4 * self.n,
            _ => false,
        }
    }
}

fn render_trace(trace: &[(usize, usize, usize)]) -> String {
    trace
        .iter()
        .map(|(i, len, count)| format!("iterate {i}: length {len}, {count} blocks"))
        .collect::<Vec<_>>()
        .join("; ")
}

impl Morphism {
    pub fn new(alphabet: Alphabet, rules: Vec<Word>, seed: usize) -> Result<Self> {
        if rules.len() != alphabet.len() {
            return Err(Error::InvalidMorphism(format!(
                "{} rules for {} symbols",
                rules.len(),
                alphabet.len()
            )));
        }
        for (i, r) in rules.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::InvalidMorphism(format!(
                    "empty image for `{}`",
                    alphabet.symbol(i)
                )));
            }
            if r.letters().iter().any(|&c| c >= alphabet.len()) {
                return Err(Error::InvalidMorphism(format!(
                    "image of `{}` leaves the alphabet",
                    alphabet.symbol(i)
                )));
            }
        }
        if seed >= alphabet.len() {
            return Err(Error::InvalidMorphism(format!(
                "seed index {seed} outside the alphabet"
            )));
        }
        let image = &rules[seed];
        if image.letters()[0] != seed || image.len() < 2 {
            return Err(Error::NotProlongable(alphabet.symbol(seed).to_string()));
        }
        Ok(Morphism {
            alphabet,
            rules,
            seed,
        })
    }

    pub fn from_config(config: &MorphismConfig) -> Result<Self> {
        let alphabet = Alphabet::new(config.alphabet.iter().cloned())?;
        let mut rules = vec![None; alphabet.len()];
        for (sym, image) in &config.rules {
            let i = alphabet.index_of(sym)?;
            rules[i] = Some(alphabet.parse_word(image)?);
        }
        let rules = rules
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.ok_or_else(|| {
                    Error::InvalidMorphism(format!("no rule for `{}`", alphabet.symbol(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let seed = alphabet.index_of(&config.seed)?;
        Morphism::new(alphabet, rules, seed)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: MorphismConfig =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_config(&config)
    }

    pub fn to_config(&self) -> MorphismConfig {
        MorphismConfig {
            alphabet: self.alphabet.symbols().to_vec(),
            rules: self
                .rules
                .iter()
                .enumerate()
                .map(|(i, r)| (self.alphabet.symbol(i).to_string(), self.alphabet.render(r)))
                .collect(),
            seed: self.alphabet.symbol(self.seed).to_string(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn seed(&self) -> usize {
        self.seed
    }

    /// Applies the morphism once.
    pub fn apply(&self, w: &[usize]) -> Vec<usize> {
        w.iter()
            .flat_map(|&c| self.rules[c].letters().iter().copied())
            .collect()
    }

    /// The first `len` letters of the fixed point starting with the seed.
    pub fn fixed_point_prefix(&self, len: usize) -> Result<Word> {
        if len == 0 {
            return Err(Error::ZeroArgument);
        }
        let mut w = vec![self.seed];
        while w.len() < len {
            w = self.apply(&w);
        }
        w.truncate(len);
        Ok(Word(w))
    }

    /// The `n`-blocks of the fixed point, read off successive iterates until
    /// two consecutive ones agree and the iterate has length at least `4n`.
    pub fn block_language(&self, n: usize) -> Result<BlockLanguage> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        let mut w = vec![self.seed];
        let mut trace = Vec::new();
        let mut prev: Option<BTreeSet<Word>> = None;
        for iteration in 0..=STABILIZATION_CAP {
            if w.len() >= n {
                let blocks: BTreeSet<Word> = w
                    .windows(n)
                    .collect::<BTreeSet<&[usize]>>()
                    .into_iter()
                    .map(|b| Word(b.to_vec()))
                    .collect();
                trace.push((iteration, w.len(), blocks.len()));
                if prev.as_ref() == Some(&blocks) && w.len() >= 4 * n {
                    return Ok(BlockLanguage { n, blocks, trace });
                }
                prev = Some(blocks);
            }
            if w.len() > MAX_ITERATE_LEN {
                break;
            }
            w = self.apply(&w);
        }
        Err(Error::NotStabilized {
            cap: STABILIZATION_CAP,
            trace: render_trace(&trace),
        })
    }

    pub fn render(&self, w: &Word) -> String {
        self.alphabet.render(w)
    }
}

/// Scales of the `n`-blocks of a fixed point, grouped by first symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionScales {
    pub n: usize,
    pub language: BlockLanguage,
    pub per_symbol: BTreeMap<String, BTreeSet<Composition>>,
    pub union: BTreeSet<Composition>,
}

impl SubstitutionScales {
    pub fn block_count(&self) -> usize {
        self.language.blocks.len()
    }

    pub fn transversal(&self) -> BTreeSet<Composition> {
        combinatorics::transversal_of(&self.union)
    }

    pub fn transversal_dim(&self) -> usize {
        combinatorics::transversal_dim(&self.union)
    }

    pub fn orbital_dim(&self) -> usize {
        combinatorics::orbital_dim(&self.union)
    }

    /// `(transversal, orbital)` for the scales of one first symbol.
    pub fn symbol_dims(&self, symbol: &str) -> Option<(usize, usize)> {
        self.per_symbol.get(symbol).map(|s| {
            (
                combinatorics::transversal_dim(s),
                combinatorics::orbital_dim(s),
            )
        })
    }
}

/// Applies the distinguished symbol rule to every `n`-block of the fixed
/// point of `m`.
pub fn substitution_scales(m: &Morphism, n: usize) -> Result<SubstitutionScales> {
    let language = m.block_language(n)?;
    let mut per_symbol: BTreeMap<String, BTreeSet<Composition>> = BTreeMap::new();
    for block in &language.blocks {
        let sym = m.alphabet.symbol(block.letters()[0]).to_string();
        per_symbol
            .entry(sym)
            .or_default()
            .insert(induced_scale(block)?);
    }
    let union = per_symbol.values().flatten().cloned().collect();
    Ok(SubstitutionScales {
        n,
        language,
        per_symbol,
        union,
    })
}
