//! Ordered finite alphabets and words over them.
//!
//! Symbols are single printable characters. Internally every word is a
//! sequence of symbol indices into its alphabet, so runs never re-hash
//! characters.

use std::fmt;

use crate::error::{Error, Result};

/// Token reserved for the empty word in text formats.
pub const EPSILON: char = '@';

/// A word as a sequence of symbol indices. The empty vector is ε.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet in the given declaration order.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_whitespace() || c == EPSILON || c == '#' {
                return Err(Error::malformed(format!("{c:?} cannot be an alphabet symbol")));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::malformed(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Shorthand for alphabets written as a string, e.g. `Alphabet::of("ab")`.
    ///
    /// Panics on an invalid alphabet; meant for tests and examples.
    pub fn of(symbols: &str) -> Self {
        Alphabet::new(symbols.chars()).expect("invalid alphabet literal")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, c: char) -> Result<usize> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .ok_or(Error::UnknownSymbol(c))
    }

    /// Parses a word written as a run of symbols. `@` alone (or the empty
    /// string) is ε; whitespace and commas are ignored.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != ',' && *c != EPSILON)
            .map(|c| self.index_of(c))
            .collect()
    }

    /// Renders a word, writing ε as `@`.
    pub fn render(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return EPSILON.to_string();
        }
        word.iter().map(|&i| self.symbols[i]).collect()
    }

    /// Checks that every character of `text` belongs to the alphabet.
    pub fn check_str(&self, text: &str) -> Result<()> {
        for c in text.chars() {
            self.index_of(c)?;
        }
        Ok(())
    }

    /// All words of length at most `max_len`, shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for a in 0..self.len() {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
