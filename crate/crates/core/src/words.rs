//! Words over a finite alphabet: subword embedding and the Higman scan.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::monoid::ElementId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {0} is not in the alphabet")]
    AlphabetMismatch(String),
    #[error("no embedded pair among the first {examined} words")]
    BudgetExhausted { examined: usize },
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("empty letter in word literal `{0}`")]
    EmptyLetter(String),
}

/// A factorization word: a sequence of atoms of some structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct AtomWord {
    pub letters: Vec<ElementId>,
}

impl AtomWord {
    pub fn new(letters: Vec<ElementId>) -> Self {
        AtomWord { letters }
    }

    pub fn empty() -> Self {
        AtomWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &AtomWord) -> AtomWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        AtomWord { letters }
    }

    /// Checks every letter against `alphabet`.
    pub fn check_alphabet(&self, alphabet: &[ElementId]) -> Result<(), WordError> {
        match self.letters.iter().find(|l| !alphabet.contains(l)) {
            Some(l) => Err(WordError::AlphabetMismatch(l.to_string())),
            None => Ok(()),
        }
    }

    /// Renders with `name` for each letter; the empty word is `e`.
    pub fn render<F: Fn(ElementId) -> String>(&self, name: F) -> String {
        render_word(&self.letters, name)
    }
}

impl From<Vec<ElementId>> for AtomWord {
    fn from(letters: Vec<ElementId>) -> Self {
        AtomWord { letters }
    }
}

impl fmt::Display for AtomWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|x| x.0.to_string()))
    }
}

pub fn render_word<T: Copy, F: Fn(T) -> String>(letters: &[T], name: F) -> String {
    if letters.is_empty() {
        "e".to_string()
    } else {
        letters
            .iter()
            .map(|&l| name(l))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Parses `a*b*c` (or `e` for the empty word), resolving each letter.
pub fn parse_word<T, F: Fn(&str) -> Option<T>>(text: &str, lookup: F) -> Result<Vec<T>, WordError> {
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('*')
        .map(|raw| {
            let name = raw.trim();
            if name.is_empty() {
                return Err(WordError::EmptyLetter(text.to_string()));
            }
            lookup(name).ok_or_else(|| WordError::UnknownLetter(name.to_string()))
        })
        .collect()
}

/// True iff `u` is obtained from `v` by deleting letters (greedy earliest match).
pub fn is_subword<T: PartialEq>(u: &[T], v: &[T]) -> bool {
    let mut rest = v.iter();
    u.iter().all(|x| rest.any(|y| y == x))
}

/// Subword test for atom words with an alphabet check on both arguments.
pub fn is_subword_in(
    alphabet: &[ElementId],
    u: &AtomWord,
    v: &AtomWord,
) -> Result<bool, WordError> {
    u.check_alphabet(alphabet)?;
    v.check_alphabet(alphabet)?;
    Ok(is_subword(&u.letters, &v.letters))
}

/// Incremental search for indices `i < j` with word `i` a subword of word `j`.
///
/// Pairs are reported in scan order: `j` increasing, then `i` increasing.
/// Indices are 0-based positions in the pushed sequence.
#[derive(Debug, Clone)]
pub struct HigmanScan<T> {
    seen: Vec<Vec<T>>,
}

impl<T: PartialEq> Default for HigmanScan<T> {
    fn default() -> Self {
        HigmanScan { seen: Vec::new() }
    }
}

impl<T: PartialEq> HigmanScan<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of words consumed so far.
    pub fn examined(&self) -> usize {
        self.seen.len()
    }

    pub fn push(&mut self, word: Vec<T>) -> Option<(usize, usize)> {
        let j = self.seen.len();
        let hit = self
            .seen
            .iter()
            .position(|earlier| is_subword(earlier, &word));
        self.seen.push(word);
        hit.map(|i| (i, j))
    }
}

/// Consumes at most `budget` words of `seq` looking for an embedded pair.
pub fn higman_scan<T, I>(seq: I, budget: usize) -> Result<(usize, usize), WordError>
where
    T: PartialEq,
    I: IntoIterator<Item = Vec<T>>,
{
    let mut scan = HigmanScan::new();
    for word in seq.into_iter().take(budget) {
        if let Some(pair) = scan.push(word) {
            return Ok(pair);
        }
    }
    Err(WordError::BudgetExhausted {
        examined: scan.examined(),
    })
}
