//! JSON substitution files.
//!
//! ```json
//! { "alphabet": ["a", "b"], "dim": 1, "rules": { "a": "ab", "b": "a" } }
//! ```
//!
//! One-dimensional images are a string of single-character letters or an
//! array of letter names. Planar images are arrays of printed rows, top row
//! first.

use std::collections::BTreeMap;

use perapprox_core::subst::Substitution;
use perapprox_core::symbolic::{Alphabet, Letter, Pattern, Word};
use serde::{Deserialize, Serialize};

use crate::error::{Failure, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubstitutionFile {
    pub alphabet: Vec<String>,
    pub dim: usize,
    pub rules: BTreeMap<String, Image>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Image {
    Text(String),
    List(Vec<String>),
}

impl SubstitutionFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Failure::config(format!("substitution file: {e}")))
    }

    pub fn to_substitution(&self) -> Result<Substitution> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        for name in self.rules.keys() {
            if alphabet.letter(name).is_none() {
                return Err(Failure::config(format!("rule for unknown letter {name:?}")));
            }
        }
        let image = |name: &str| {
            self.rules.get(name).ok_or_else(|| Failure::config(format!("no rule for letter {name:?}")))
        };
        match self.dim {
            1 => {
                let images = alphabet
                    .names()
                    .iter()
                    .map(|name| match image(name)? {
                        Image::Text(s) => Ok(alphabet.parse_word(s)?),
                        Image::List(names) => letters(&alphabet, names).map(Word::new),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Substitution::one_dim(alphabet, images)?)
            }
            2 => {
                let images = alphabet
                    .names()
                    .iter()
                    .map(|name| match image(name)? {
                        Image::List(rows) => parse_rows(&alphabet, rows),
                        Image::Text(_) => Err(Failure::config("planar images must be arrays of rows")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Substitution::block(alphabet, images)?)
            }
            d => Err(Failure::config(format!("substitution files support dim 1 or 2, not {d}"))),
        }
    }

    pub fn from_substitution(s: &Substitution) -> Result<Self> {
        let a = s.alphabet();
        let mut rules = BTreeMap::new();
        for l in a.letters() {
            let img = s.image(l);
            let image = match s.dim() {
                1 if a.is_single_char() => Image::Text(a.render(img.cells())),
                1 => Image::List(img.cells().iter().map(|&c| a.name(c).to_string()).collect()),
                2 if a.is_single_char() => Image::List(img.to_rows().iter().map(|r| a.render(r)).collect()),
                _ => return Err(Failure::config("only single-character planar alphabets can be written")),
            };
            rules.insert(a.name(l).to_string(), image);
        }
        Ok(Self { alphabet: a.names().to_vec(), dim: s.dim(), rules })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("substitution files serialize") + "\n"
    }
}

fn letters(a: &Alphabet, names: &[String]) -> Result<Vec<Letter>> {
    names
        .iter()
        .map(|n| a.letter(n).ok_or_else(|| Failure::config(format!("unknown letter {n:?}"))))
        .collect()
}

/// Printed rows (top row first) of single-character letters.
pub fn parse_rows(a: &Alphabet, rows: &[String]) -> Result<Pattern> {
    let rows = rows.iter().map(|r| Ok(a.parse_word(r)?.into_letters())).collect::<Result<Vec<_>>>()?;
    Ok(Pattern::from_rows(&rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_file() {
        let f = SubstitutionFile::parse(r#"{"alphabet":["a","b"],"dim":1,"rules":{"a":"ab","b":["a"]}}"#).unwrap();
        let s = f.to_substitution().unwrap();
        let w = s.apply_word(&s.alphabet().parse_word("ab").unwrap()).unwrap();
        assert_eq!(s.alphabet().render(w.letters()), "aba");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(SubstitutionFile::parse(r#"{"alphabet":["a"],"dim":1,"rules":{"a":"aa"},"x":1}"#).is_err());
    }

    #[test]
    fn planar_round_trip() {
        let f = SubstitutionFile::parse(
            r#"{"alphabet":["a","b"],"dim":2,"rules":{"a":["aa","ab"],"b":["bb","ba"]}}"#,
        )
        .unwrap();
        let s = f.to_substitution().unwrap();
        assert_eq!(SubstitutionFile::from_substitution(&s).unwrap(), f);
    }
}
