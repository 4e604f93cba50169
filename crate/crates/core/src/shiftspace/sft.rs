use std::collections::BTreeSet;

use super::{Alphabet, VertexShift, Word};
use crate::error::{Error, Result};

/// A shift of finite type given by a finite set of forbidden words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SftPresentation {
    alphabet: Alphabet,
    forbidden: BTreeSet<Word>,
}

/// The higher block vertex shift of an SFT, with vertex labels back in the
/// original alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherBlock {
    pub shift: VertexShift,
    /// Vertex `i` is the block `blocks[i]`.
    pub blocks: Vec<Word>,
    /// First letter of each block.
    pub labels: Vec<usize>,
    pub step: usize,
}

impl SftPresentation {
    /// Builds a presentation, dropping any forbidden word that contains
    /// another as a factor.
    pub fn new(alphabet: Alphabet, forbidden: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: BTreeSet<Word> = forbidden.into_iter().collect();
        for w in &words {
            if w.len() < 2 {
                return Err(Error::InvalidForbidden(format!(
                    "`{}` is shorter than 2 letters",
                    alphabet.render(w)
                )));
            }
            if let Some(&bad) = w.letters().iter().find(|&&c| c >= alphabet.len()) {
                return Err(Error::InvalidForbidden(format!(
                    "letter index {bad} outside the alphabet"
                )));
            }
        }
        let forbidden = words
            .iter()
            .filter(|w| !words.iter().any(|v| v != *w && w.contains_factor(v)))
            .cloned()
            .collect();
        Ok(SftPresentation {
            alphabet,
            forbidden,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn forbidden(&self) -> &BTreeSet<Word> {
        &self.forbidden
    }

    /// `M`, one less than the longest forbidden word; at least 1.
    pub fn step(&self) -> usize {
        self.forbidden
            .iter()
            .map(Word::len)
            .max()
            .map_or(1, |l| l - 1)
            .max(1)
    }

    /// True when `w` has no forbidden factor.
    pub fn avoids(&self, w: &Word) -> bool {
        self.forbidden.iter().all(|f| !w.contains_factor(f))
    }

    /// Recodes the SFT as a vertex shift on its locally admissible
    /// `M`-blocks, listed in lexicographic order of letter indices.
    pub fn higher_block(&self) -> Result<HigherBlock> {
        let m = self.step();
        let k = self.alphabet.len();
        let mut blocks = Vec::new();
        let mut cur = vec![0usize; m];
        loop {
            let w = Word(cur.clone());
            if self.avoids(&w) {
                blocks.push(w);
            }
            // Odometer increment, last letter fastest.
            let mut i = m;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < k {
                    break;
                }
                cur[i] = 0;
            }
            if cur.iter().all(|&c| c == 0) {
                break;
            }
        }
        if blocks.is_empty() {
            return Err(Error::DegenerateSft(m));
        }
        let rows: Vec<Vec<u8>> = blocks
            .iter()
            .map(|u| {
                blocks
                    .iter()
                    .map(|v| {
                        let overlap = u.letters()[1..] == v.letters()[..m - 1];
                        let mut fused = u.letters().to_vec();
                        fused.push(v.letters()[m - 1]);
                        u8::from(overlap && self.avoids(&Word(fused)))
                    })
                    .collect()
            })
            .collect();
        let names: Vec<String> = blocks.iter().map(|b| self.block_name(b)).collect();
        let shift = VertexShift::new(Alphabet::new(names)?, rows)?;
        if !has_cycle(&shift) {
            return Err(Error::DegenerateSft(m));
        }
        let labels = blocks.iter().map(|b| b.letters()[0]).collect();
        Ok(HigherBlock {
            shift,
            blocks,
            labels,
            step: m,
        })
    }

    fn block_name(&self, b: &Word) -> String {
        let r = self.alphabet.render(b);
        if r.contains(' ') {
            r.replace(' ', "_")
        } else {
            r
        }
    }
}

fn has_cycle(x: &VertexShift) -> bool {
    // A graph has a cycle iff repeatedly deleting sinks leaves something.
    let n = x.size();
    let mut alive = vec![true; n];
    loop {
        let sink = (0..n).find(|&v| alive[v] && !(0..n).any(|w| alive[w] && x.allows(v, w)));
        match sink {
            Some(v) => alive[v] = false,
            None => return alive.iter().any(|&a| a),
        }
    }
}

impl HigherBlock {
    /// Name of the vertex for a block written in the original alphabet.
    pub fn vertex_name(&self, block: &Word) -> Option<&str> {
        self.blocks
            .iter()
            .position(|b| b == block)
            .map(|i| self.shift.alphabet().symbol(i))
    }

    /// Projects a vertex path to its word in the original alphabet: the
    /// first block followed by the last letter of each later block.
    pub fn project(&self, path: &[usize]) -> Word {
        let mut out = Vec::new();
        if let Some(&first) = path.first() {
            out.extend_from_slice(self.blocks[first].letters());
            for &v in &path[1..] {
                out.push(
                    *self.blocks[v]
                        .letters()
                        .last()
                        .expect("blocks are nonempty"),
                );
            }
        }
        Word(out)
    }
}

/// Parses a forbidden-block file: one word per line, `#` comments and blank
/// lines ignored. An optional `alphabet: a b ...` line fixes the alphabet;
/// otherwise `alphabet` is used, falling back to `∘ •`.
pub fn parse_forbidden(text: &str, alphabet: Option<&Alphabet>) -> Result<SftPresentation> {
    let mut declared: Option<Alphabet> = None;
    let mut lines = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if declared.is_some() {
                return Err(Error::Parse("repeated alphabet directive".into()));
            }
            declared = Some(Alphabet::new(rest.split_whitespace())?);
        } else {
            lines.push(line);
        }
    }
    let alphabet = match (declared, alphabet) {
        (Some(d), Some(a)) if &d != a => {
            return Err(Error::Parse(
                "alphabet directive disagrees with the supplied alphabet".into(),
            ))
        }
        (Some(d), _) => d,
        (None, Some(a)) => a.clone(),
        (None, None) => Alphabet::binary(),
    };
    let words = lines
        .iter()
        .map(|l| alphabet.parse_word(l))
        .collect::<Result<Vec<_>>>()?;
    SftPresentation::new(alphabet, words)
}
