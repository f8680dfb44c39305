use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Letter, Word};
use crate::error::{invalid, Result};

/// A finite ordered set of distinct letter names.
///
/// Letters are addressed by their position, so the order given at
/// construction is also the lexicographic order used everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(invalid("alphabet must contain at least one letter"));
        }
        if names.len() > 256 {
            return Err(invalid("alphabets are limited to 256 letters"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(invalid("letter names must be nonempty"));
            }
            if names[..i].contains(n) {
                return Err(invalid(alloc::format!("duplicate letter `{n}`")));
            }
        }
        Ok(Self { names })
    }

    /// One letter per character of `s`, e.g. `Alphabet::from_chars("ab")`.
    pub fn from_chars(s: &str) -> Result<Self> {
        Self::new(s.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| Letter(i as u8))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u8))
    }

    pub fn contains(&self, l: Letter) -> bool {
        l.index() < self.names.len()
    }

    /// True when every name is a single character, so words can be written
    /// without separators.
    pub fn is_single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses a word written without separators. Requires single-character
    /// letter names.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if !self.is_single_char() {
            return Err(invalid("words can only be parsed over single-character alphabets"));
        }
        let mut out = Vec::with_capacity(s.len());
        let mut buf = [0u8; 4];
        for c in s.chars() {
            let name: &str = c.encode_utf8(&mut buf);
            let l = self
                .letter(name)
                .ok_or_else(|| invalid(alloc::format!("letter `{c}` is not in the alphabet")))?;
            out.push(l);
        }
        Ok(Word::new(out))
    }

    pub fn render(&self, cells: &[Letter]) -> String {
        let mut s = String::new();
        for &l in cells {
            s.push_str(self.name(l));
        }
        s
    }
}
