//! Plain-text dictionary slices.
//!
//! ```text
//! #alphabet a b
//! #dim 1
//! #cap 2
//! #shape 1
//! a
//! b
//! #shape 2
//! aa
//! ab
//! ba
//! ```
//!
//! Planar shapes are written `#shape 2x3` (extent along x, then y) and each
//! pattern is its printed rows, top row first, joined by `/`. Patterns are
//! sorted within a shape, so the text of a slice is canonical.

use perapprox_core::symbolic::{Alphabet, DictionarySlice, Pattern, Shape};

use crate::error::{Failure, Result};

pub fn write(slice: &DictionarySlice) -> Result<String> {
    let a = slice.alphabet();
    if !a.is_single_char() {
        return Err(Failure::config("slice text needs single-character letter names"));
    }
    let mut out = format!("#alphabet {}\n#dim {}\n#cap {}\n", a.names().join(" "), slice.dim(), slice.cap());
    for shape in slice.shapes() {
        out += &format!("#shape {}\n", shape_text(shape));
        let mut lines: Vec<String> = slice.patterns(shape).map(|p| pattern_text(a, &p)).collect();
        lines.sort();
        for l in lines {
            out += &l;
            out.push('\n');
        }
    }
    Ok(out)
}

fn shape_text(shape: &[usize]) -> String {
    shape.iter().map(usize::to_string).collect::<Vec<_>>().join("x")
}

fn pattern_text(a: &Alphabet, p: &Pattern) -> String {
    if p.dim() == 1 {
        return a.render(p.cells());
    }
    p.to_rows().iter().map(|r| a.render(r)).collect::<Vec<_>>().join("/")
}

pub fn parse(text: &str) -> Result<DictionarySlice> {
    let bad = |line: usize, msg: &str| Failure::config(format!("slice text line {}: {msg}", line + 1));
    let mut alphabet = None;
    let mut dim = None;
    let mut cap = None;
    let mut shape: Option<Shape> = None;
    let mut patterns = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let (key, value) = rest.split_once(' ').unwrap_or((rest, ""));
            let number = || value.trim().parse::<usize>().map_err(|_| bad(i, "expected a number"));
            match key {
                "alphabet" => alphabet = Some(Alphabet::new(value.split_whitespace())?),
                "dim" => dim = Some(number()?),
                "cap" => cap = Some(number()?),
                "shape" => {
                    let s = value
                        .trim()
                        .split('x')
                        .map(|x| x.parse::<usize>().map_err(|_| bad(i, "malformed shape")))
                        .collect::<Result<Shape>>()?;
                    if Some(s.len()) != dim {
                        return Err(bad(i, "shape does not match #dim"));
                    }
                    shape = Some(s);
                }
                _ => return Err(bad(i, "unknown header")),
            }
            continue;
        }
        let (Some(a), Some(s)) = (&alphabet, &shape) else {
            return Err(bad(i, "pattern before #alphabet and #shape"));
        };
        let p = if s.len() == 1 {
            Pattern::from_word(&a.parse_word(line)?)
        } else {
            let rows = line.split('/').map(|r| Ok(a.parse_word(r)?.into_letters())).collect::<Result<Vec<_>>>()?;
            Pattern::from_rows(&rows)?
        };
        if p.dims() != s.as_slice() {
            return Err(bad(i, "pattern does not have the announced shape"));
        }
        patterns.push(p);
    }
    let (Some(a), Some(d), Some(c)) = (alphabet, dim, cap) else {
        return Err(Failure::config("slice text needs #alphabet, #dim and #cap headers"));
    };
    Ok(DictionarySlice::from_entries(a, d, c, patterns)?)
}
