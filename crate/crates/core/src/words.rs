//! Alphabets and words, the monomials of the free associative algebra.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in its [`Alphabet`].
pub type Letter = usize;

/// An ordered set of named letters `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = names.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must have at least one letter".into()));
        }
        let mut seen = HashSet::new();
        for name in &letters {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty letter name".into()));
            }
            if !is_letter_token(name) {
                return Err(Error::InvalidAlphabet(format!(
                    "letter name `{name}` must be an identifier"
                )));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter `{name}`")));
            }
        }
        Ok(Self { letters })
    }

    /// Alphabet `x1, ..., xn`, handy for generated test data.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}"))).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.letters[letter]
    }

    pub fn index_of(&self, name: &str) -> Result<Letter> {
        self.letters
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Parses a whitespace separated list of letter names. `1` or an empty
    /// string denotes the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::empty());
        }
        text.split_whitespace()
            .map(|tok| self.index_of(tok))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn contains(&self, word: &Word) -> bool {
        word.letters().iter().all(|&l| l < self.len())
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&l| l >= self.len()) {
            Some(&bad) => Err(Error::UnknownLetter(format!("#{bad}"))),
            None => Ok(()),
        }
    }

    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// All words of the given degree, in lexicographic order.
    pub fn words_of_degree(&self, degree: usize) -> WordsOfDegree {
        WordsOfDegree {
            n: self.len(),
            current: Some(vec![0; degree]),
        }
    }
}

pub(crate) fn is_letter_token(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Iterator over all words of a fixed degree.
pub struct WordsOfDegree {
    n: usize,
    current: Option<Vec<Letter>>,
}

impl Iterator for WordsOfDegree {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let out = Word::new(cur.clone());
        let mut next = cur;
        let mut pos = next.len();
        while pos > 0 {
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.n {
                self.current = Some(next);
                return Some(out);
            }
            next[pos] = 0;
        }
        Some(out)
    }
}

/// A monomial of the free algebra: a finite sequence of letters. The empty
/// word is the unit `1`.
///
/// Words are ordered by degree first and then lexicographically by letter
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The word with its first `k` letters removed.
    pub fn drop_prefix(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    /// `true` iff `self` is a prefix of `w`.
    pub fn is_prefix_of(&self, w: &Word) -> bool {
        w.0.starts_with(&self.0)
    }

    /// `true` iff `w = a · self · b` for some words `a`, `b`.
    pub fn is_factor_of(&self, w: &Word) -> bool {
        if self.0.is_empty() {
            return true;
        }
        w.0.windows(self.0.len()).any(|win| win == self.0.as_slice())
    }

    /// Returns `v` with `self = letter · v`.
    ///
    /// For a single letter `x`, the solutions of `u · g = x · v` with
    /// `deg(v) < deg(g)` are exactly `u = 1` and `g = x v`, so this is the
    /// whole contribution of a two-sided generator `g` to `(I :_R x)`.
    pub fn overlaps_ending_in_prefix(&self, letter: Letter) -> Option<Word> {
        match self.0.split_first() {
            Some((&first, rest)) if first == letter => Some(Word(rest.to_vec())),
            _ => None,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
