//! Standard cubes `□[n]` and their boundaries, encoded by words over `{0,1,*}`.

use std::fmt;
use std::str::FromStr;

use super::{PrecubicalSet, RawCube, Sign};

/// Name used for the empty word, the unique cube of `□[0]`.
pub const EMPTY_WORD: &str = "()";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
    Star,
}

impl Letter {
    fn symbol(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::Star => '*',
        }
    }
}

impl From<Sign> for Letter {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Minus => Letter::Zero,
            Sign::Plus => Letter::One,
        }
    }
}

/// A cube of `□[n]`: its dimension is the number of `*` letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn top(n: usize) -> Word {
        Word(vec![Letter::Star; n])
    }

    pub fn vertex(bits: &[Sign]) -> Word {
        Word(bits.iter().map(|&s| s.into()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Star).count()
    }

    /// Replaces the `i`-th star (1-based, left to right) by `α`.
    pub fn face(&self, i: usize, sign: Sign) -> Word {
        let mut letters = self.0.clone();
        let pos = self.star_position(i).expect("face index within dimension");
        letters[pos] = sign.into();
        Word(letters)
    }

    /// Coface `δ_i^α`: inserts `α` at position `i` (1-based).
    pub fn coface(&self, i: usize, sign: Sign) -> Word {
        let mut letters = self.0.clone();
        letters.insert(i - 1, sign.into());
        Word(letters)
    }

    fn star_position(&self, i: usize) -> Option<usize> {
        self.0.iter().enumerate().filter(|(_, &l)| l == Letter::Star).nth(i.checked_sub(1)?).map(|(p, _)| p)
    }

    /// Face path from the top cube: applying `∂_k^{α_k}` for the listed
    /// `(k, α_k)` in order turns `**…*` into `self`.
    pub fn face_path(&self) -> Vec<(usize, Sign)> {
        (0..self.len())
            .rev()
            .filter_map(|p| match self.0[p] {
                Letter::Zero => Some((p + 1, Sign::Minus)),
                Letter::One => Some((p + 1, Sign::Plus)),
                Letter::Star => None,
            })
            .collect()
    }

    /// All words of length `n`.
    pub fn all(n: usize) -> Vec<Word> {
        let mut words = vec![Word(Vec::new())];
        for _ in 0..n {
            words = words
                .into_iter()
                .flat_map(|w| {
                    [Letter::Zero, Letter::One, Letter::Star].map(|l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        words
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(EMPTY_WORD);
        }
        self.0.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == EMPTY_WORD {
            return Ok(Word(Vec::new()));
        }
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(Letter::Zero),
                '1' => Ok(Letter::One),
                '*' => Ok(Letter::Star),
                other => Err(format!("unexpected letter {other:?} in cube word {s:?}")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

fn from_words(words: Vec<Word>) -> PrecubicalSet {
    let position: std::collections::HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let raw = words
        .iter()
        .map(|w| RawCube {
            name: w.to_string(),
            dim: w.dim(),
            faces: (1..=w.dim()).flat_map(|i| Sign::BOTH.map(|s| position[&w.face(i, s)])).collect(),
        })
        .collect();
    PrecubicalSet::from_raw(raw).expect("word names are distinct and valid")
}

/// `□[n]`.
pub fn standard_cube(n: usize) -> PrecubicalSet {
    from_words(Word::all(n))
}

/// `∂□[n]`, the standard cube without its top cell; empty for `n = 0`.
pub fn boundary_cube(n: usize) -> PrecubicalSet {
    if n == 0 {
        return PrecubicalSet::empty();
    }
    from_words(Word::all(n).into_iter().filter(|w| w.dim() < n).collect())
}
